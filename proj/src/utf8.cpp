#include "scriptbridge/utf8.hpp"

namespace scriptbridge::utf8 {

namespace {

inline bool is_cont(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

char32_t next_codepoint(std::string_view text, std::size_t& pos) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  unsigned char b0 = bytes[pos];

  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0) {
    if (pos + 1 < n && is_cont(bytes[pos + 1])) {
      char32_t cp = ((b0 & 0x1Fu) << 6) | (bytes[pos + 1] & 0x3Fu);
      if (cp >= 0x80) {
        pos += 2;
        return cp;
      }
    }
  } else if ((b0 & 0xF0) == 0xE0) {
    if (pos + 2 < n && is_cont(bytes[pos + 1]) && is_cont(bytes[pos + 2])) {
      char32_t cp = ((b0 & 0x0Fu) << 12) | ((bytes[pos + 1] & 0x3Fu) << 6) |
                    (bytes[pos + 2] & 0x3Fu);
      if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) {
        pos += 3;
        return cp;
      }
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    if (pos + 3 < n && is_cont(bytes[pos + 1]) && is_cont(bytes[pos + 2]) &&
        is_cont(bytes[pos + 3])) {
      char32_t cp = ((b0 & 0x07u) << 18) | ((bytes[pos + 1] & 0x3Fu) << 12) |
                    ((bytes[pos + 2] & 0x3Fu) << 6) | (bytes[pos + 3] & 0x3Fu);
      if (cp >= 0x10000 && cp <= 0x10FFFF) {
        pos += 4;
        return cp;
      }
    }
  }
  ++pos;
  return kReplacementChar;
}

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(next_codepoint(text, pos));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 3);
  for (char32_t cp : codepoints) append(out, cp);
  return out;
}

bool is_valid(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t before = pos;
    char32_t cp = next_codepoint(text, pos);
    if (cp == kReplacementChar && pos == before + 1 &&
        static_cast<unsigned char>(text[before]) >= 0x80) {
      return false;
    }
  }
  return true;
}

bool is_cjk(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) ||    // unified ideographs
         (cp >= 0x3400 && cp <= 0x4DBF) ||    // extension A
         (cp >= 0xF900 && cp <= 0xFAFF) ||    // compatibility ideographs
         (cp >= 0x20000 && cp <= 0x2A6DF) ||  // extension B
         (cp >= 0x3040 && cp <= 0x30FF);      // kana
}

}  // namespace scriptbridge::utf8
