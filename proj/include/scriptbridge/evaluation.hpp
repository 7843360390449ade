#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scriptbridge/projection.hpp"

namespace scriptbridge::evaluation {

struct GoldLabel {
  int line_id = 0;
  std::string speaker;
  bool dialogue_boundary = false;  // true iff this line begins a new dialogue
};

// Tab-separated rows: line_id, speaker, boundary flag (0/1). Throws
// ParseError with the offending line number.
std::vector<GoldLabel> load_gold(std::string_view bytes);
std::string gold_to_tsv(const std::vector<GoldLabel>& labels);

struct AgreementReport {
  double speaker_agreement = 0.0;   // percent
  double boundary_agreement = 0.0;  // percent
  long lines_total = 0;
  long speaker_matches = 0;
  long boundary_matches = 0;
};

// Speaker match: case-insensitive name equality, UNKNOWN never matches.
// Boundary match: the gold flag against a dialogue_id change at that line.
// Gold line_ids must be a subset of the annotated ids (MissingLine).
AgreementReport agreement(const std::vector<projection::AnnotatedLine>& annotated,
                          const std::vector<GoldLabel>& gold);

std::string render_report(const AgreementReport& report);     // two-row table
std::string render_report_kv(const AgreementReport& report);  // key=value lines

}  // namespace scriptbridge::evaluation
