#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scriptbridge/script_parser.hpp"
#include "scriptbridge/subtitle.hpp"

namespace scriptbridge::io {

// Throws Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Shortest representation that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

// TSV field escaping: tab, newline, CR and backslash.
std::string escape_field(std::string_view field);
std::string unescape_field(std::string_view field);
std::vector<std::string> split_tsv(std::string_view line);

// Script document interchange; lossless, one record per line:
//   # source: <name>
//   S  segment_id  first_utt  last_utt  opening_tag  closing_tag|-
//   U  utterance_id  segment_id  speaker  first_line  last_line  text
std::string script_to_tsv(const script::ScriptDocument& doc);
script::ScriptDocument script_from_tsv(std::string_view text);

// Parallel line interchange:
//   # subtitle: <name>
//   line_id  start_ms  end_ms  source  target
std::string lines_to_tsv(const std::vector<subtitle::ParallelLine>& lines,
                         const std::string& subtitle_name);
std::vector<subtitle::ParallelLine> lines_from_tsv(std::string_view text,
                                                   std::string* subtitle_name = nullptr);

}  // namespace scriptbridge::io
