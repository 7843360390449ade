#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace scriptbridge::utf8 {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one codepoint starting at text[pos]. Advances pos past the
// sequence; invalid bytes decode to U+FFFD and advance by one byte.
char32_t next_codepoint(std::string_view text, std::size_t& pos);

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view codepoints);
void append(std::string& out, char32_t cp);

// True if the whole byte sequence is well-formed UTF-8 (rejects overlongs,
// surrogates and out-of-range codepoints).
bool is_valid(std::string_view text);

bool is_cjk(char32_t cp);

}  // namespace scriptbridge::utf8
