#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scriptbridge::script {

// One decoded screenplay file, one entry per physical line. Line numbers
// referenced elsewhere are 0-based indices into `lines`.
struct RawDocument {
  std::string source_name;
  std::vector<std::string> lines;

  static RawDocument from_text(std::string source_name, std::string_view text);
};

struct ScriptParseConfig {
  // A line whose trimmed text starts with one of these opens/closes a
  // dialogue segment. Matched case-sensitively.
  std::vector<std::string> boundary_keywords = {
      "SCENE", "SHOT", "CUT TO:", "CUT INTO:", "FADE IN", "FADE OUT", "INT.", "EXT."};
  // Maximum length of a speaker-cue name.
  std::size_t speaker_max_len = 40;
  // When set, a line indented by at least this many columns is treated as
  // a stage direction. Disabled by default; transcript sources differ.
  std::optional<int> action_indent_min;
};

struct LineClass {
  enum class Kind { BoundaryTag, SpeakerCue, UtteranceText, ActionText, Blank };
  Kind kind = Kind::UtteranceText;
  // BoundaryTag: the trimmed tag line. SpeakerCue: the normalized name.
  std::string value;
};

struct ScriptUtterance {
  int utterance_id = 0;  // script-global, 0-based, gapless
  int segment_id = 0;
  std::string speaker;  // uppercase, inner whitespace collapsed
  std::string text;
  std::pair<int, int> source_span{0, 0};  // first/last 0-based line number
};

struct DialogueSegment {
  int segment_id = 0;
  std::pair<int, int> utterance_range{0, 0};  // inclusive utterance ids
  std::string opening_tag;                    // empty for the implicit leading segment
  std::optional<std::string> closing_tag;
};

struct ScriptDocument {
  std::string source_name;
  std::vector<ScriptUtterance> utterances;
  std::vector<DialogueSegment> segments;
};

// Uppercases, trims, collapses internal whitespace.
std::string normalize_speaker(std::string_view name);

LineClass classify_line(std::string_view line, const ScriptParseConfig& cfg = {});

// Throws EmptyScript when no utterance is found.
ScriptDocument parse_script(const RawDocument& doc, const ScriptParseConfig& cfg = {});

}  // namespace scriptbridge::script
