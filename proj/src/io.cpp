#include "scriptbridge/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "scriptbridge/errors.hpp"

namespace scriptbridge::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("read failure: " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failure: " + path);
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw Error("bad number: '" + std::string(text) + "'");
  return value;
}

std::string escape_field(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\' || i + 1 == field.size()) {
      out.push_back(field[i]);
      continue;
    }
    switch (field[++i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back('\\'); out.push_back(field[i]);
    }
  }
  return out;
}

std::vector<std::string> split_tsv(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

namespace {

long parse_long(std::string_view text, int line_no) {
  long value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ParseError("bad integer '" + std::string(text) + "'", line_no);
  return value;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::string script_to_tsv(const script::ScriptDocument& doc) {
  std::string out = "# source: " + doc.source_name + "\n";
  for (const auto& seg : doc.segments) {
    out += "S\t" + std::to_string(seg.segment_id) + "\t" +
           std::to_string(seg.utterance_range.first) + "\t" +
           std::to_string(seg.utterance_range.second) + "\t" + escape_field(seg.opening_tag) +
           "\t" + (seg.closing_tag ? escape_field(*seg.closing_tag) : std::string("-")) + "\n";
  }
  for (const auto& utt : doc.utterances) {
    out += "U\t" + std::to_string(utt.utterance_id) + "\t" + std::to_string(utt.segment_id) +
           "\t" + escape_field(utt.speaker) + "\t" + std::to_string(utt.source_span.first) +
           "\t" + std::to_string(utt.source_span.second) + "\t" + escape_field(utt.text) + "\n";
  }
  return out;
}

script::ScriptDocument script_from_tsv(std::string_view text) {
  script::ScriptDocument doc;
  int line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("# source: ")) {
      doc.source_name = line.substr(10);
      continue;
    }
    if (line[0] == '#') continue;
    auto fields = split_tsv(line);
    if (fields[0] == "S") {
      if (fields.size() != 6) throw ParseError("segment row needs 6 fields", line_no);
      script::DialogueSegment seg;
      seg.segment_id = static_cast<int>(parse_long(fields[1], line_no));
      seg.utterance_range = {static_cast<int>(parse_long(fields[2], line_no)),
                             static_cast<int>(parse_long(fields[3], line_no))};
      seg.opening_tag = unescape_field(fields[4]);
      if (fields[5] != "-") seg.closing_tag = unescape_field(fields[5]);
      doc.segments.push_back(std::move(seg));
    } else if (fields[0] == "U") {
      if (fields.size() != 7) throw ParseError("utterance row needs 7 fields", line_no);
      script::ScriptUtterance utt;
      utt.utterance_id = static_cast<int>(parse_long(fields[1], line_no));
      utt.segment_id = static_cast<int>(parse_long(fields[2], line_no));
      utt.speaker = unescape_field(fields[3]);
      utt.source_span = {static_cast<int>(parse_long(fields[4], line_no)),
                         static_cast<int>(parse_long(fields[5], line_no))};
      utt.text = unescape_field(fields[6]);
      doc.utterances.push_back(std::move(utt));
    } else {
      throw ParseError("unknown row type '" + fields[0] + "'", line_no);
    }
  }
  return doc;
}

std::string lines_to_tsv(const std::vector<subtitle::ParallelLine>& lines,
                         const std::string& subtitle_name) {
  std::string out = "# subtitle: " + subtitle_name + "\n";
  for (const auto& pl : lines) {
    out += std::to_string(pl.line_id) + "\t" + std::to_string(pl.time.start_ms) + "\t" +
           std::to_string(pl.time.end_ms) + "\t" + escape_field(pl.source_text) + "\t" +
           escape_field(pl.target_text) + "\n";
  }
  return out;
}

std::vector<subtitle::ParallelLine> lines_from_tsv(std::string_view text,
                                                   std::string* subtitle_name) {
  std::vector<subtitle::ParallelLine> lines;
  int line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("# subtitle: ")) {
      if (subtitle_name) *subtitle_name = line.substr(12);
      continue;
    }
    if (line[0] == '#') continue;
    auto fields = split_tsv(line);
    if (fields.size() != 5) throw ParseError("parallel line row needs 5 fields", line_no);
    subtitle::ParallelLine pl;
    pl.line_id = static_cast<int>(parse_long(fields[0], line_no));
    pl.time.start_ms = parse_long(fields[1], line_no);
    pl.time.end_ms = parse_long(fields[2], line_no);
    pl.source_text = unescape_field(fields[3]);
    pl.target_text = unescape_field(fields[4]);
    lines.push_back(std::move(pl));
  }
  return lines;
}

}  // namespace scriptbridge::io
