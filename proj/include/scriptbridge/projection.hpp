#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scriptbridge/ir_matcher.hpp"
#include "scriptbridge/script_parser.hpp"
#include "scriptbridge/subtitle.hpp"

namespace scriptbridge::projection {

inline constexpr const char* kUnknownSpeaker = "UNKNOWN";

struct AnnotatedLine {
  int line_id = 0;
  subtitle::TimeSpan time;
  std::string source_text;
  std::string target_text;
  std::string speaker;  // kUnknownSpeaker when nothing could be projected
  int dialogue_id = 0;  // non-decreasing in line order
  std::optional<ir::MatchCandidate> match;
};

struct Dialogue {
  int dialogue_id = 0;
  std::vector<AnnotatedLine> lines;
};

struct Provenance {
  std::string script_name;
  std::string subtitle_name;
};

struct CorpusStats {
  long scripts_processed = 0;
  long total_dialogues = 0;
  long total_speakers = 0;  // distinct named speakers, UNKNOWN excluded
  long total_utterances = 0;
  double avg_dialogues_per_script = 0.0;
  double avg_speakers_per_dialogue = 0.0;
  double avg_utterances_per_dialogue = 0.0;
};

struct DialogueCorpus {
  std::vector<Dialogue> dialogues;
  Provenance provenance;
  CorpusStats stats;
};

// Copies speaker and dialogue ids from matched utterances; unmatched lines
// inherit from the nearest preceding matched line, leading unmatched lines
// get UNKNOWN. Dialogue-id regressions are clamped to keep the sequence
// non-decreasing. Throws LengthMismatch when decisions and lines disagree.
std::vector<AnnotatedLine> project(const script::ScriptDocument& script_doc,
                                   const std::vector<subtitle::ParallelLine>& lines,
                                   const std::vector<ir::MatchDecision>& decisions);

// Groups consecutive runs of equal dialogue_id and computes stats.
DialogueCorpus assemble(std::vector<AnnotatedLine> annotated, Provenance provenance);

// UTF-8 XML per the schema shipped in data/corpus.xsd.
std::string emit_xml(const DialogueCorpus& corpus);
DialogueCorpus parse_xml(std::string_view bytes);

// Structural validation of an emitted document against the shipped schema:
// element nesting, required attributes, id ordering. Throws ParseError.
void validate_xml(std::string_view bytes);

CorpusStats compute_stats(const std::vector<DialogueCorpus>& corpora);

// Plain-text statistics table.
std::string render_stats_table(const CorpusStats& stats);

}  // namespace scriptbridge::projection
