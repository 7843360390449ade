#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scriptbridge/normalize.hpp"

namespace scriptbridge::subtitle {

struct TimeSpan {
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;
  bool operator==(const TimeSpan&) const = default;
};

struct SubtitleCue {
  int cue_index = 0;  // as given in the file (SRT) or 1-based event order (ASS)
  TimeSpan time;
  std::vector<std::string> text_lines;  // visual lines, formatting tags stripped
  bool operator==(const SubtitleCue&) const = default;
};

// One aligned bilingual subtitle unit.
struct ParallelLine {
  int line_id = 0;  // 0-based, gapless, ordered by start_ms
  TimeSpan time;
  std::string source_text;  // pivot language, never empty
  std::string target_text;  // may be empty when unmatched
  bool operator==(const ParallelLine&) const = default;
};

struct ParseResult {
  std::vector<SubtitleCue> cues;
  int warnings = 0;  // malformed blocks/events skipped
};

// SRT: `index / HH:MM:SS,mmm --> HH:MM:SS,mmm / text...` blocks separated by
// blank lines. <...> and {...} formatting removed from text. Malformed blocks
// are skipped and counted. Throws NoCuesParsed when nothing parses.
ParseResult parse_srt(std::string_view bytes, const normalize::DecodeConfig& dcfg = {});

// ASS: requires an [Events] section with a Format: header; one cue per
// Dialogue: event, Text split on \N (and soft \n), {...} overrides stripped.
ParseResult parse_ass(std::string_view bytes, const normalize::DecodeConfig& dcfg = {});

// Exact inverse of parse_srt for well-formed cues (millisecond-exact).
std::string serialize_srt(const std::vector<SubtitleCue>& cues);

enum class SubtitleFormat { Srt, Ass };
SubtitleFormat detect_format(std::string_view bytes, const normalize::DecodeConfig& dcfg = {});
ParseResult parse_subtitle(std::string_view bytes, const normalize::DecodeConfig& dcfg = {});

struct BitextOptions {
  // Minimum intersection-over-union of time spans for pairing cues across
  // two files.
  double time_overlap_threshold = 0.5;
};

// Bilingual cues: both languages inside one cue, one per visual line.
// Throws MixedFormat when a cue mixes pivot, other and unclassifiable lines.
std::vector<ParallelLine> align_bitext(const std::vector<SubtitleCue>& cues,
                                       const BitextOptions& opts = {});

// Two monolingual cue streams from separate files, paired greedily by time
// overlap; a source cue spanning several target cues concatenates their text.
std::vector<ParallelLine> align_streams(const std::vector<SubtitleCue>& source_cues,
                                        const std::vector<SubtitleCue>& target_cues,
                                        const BitextOptions& opts = {});

}  // namespace scriptbridge::subtitle
