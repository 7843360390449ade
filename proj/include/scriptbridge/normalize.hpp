#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scriptbridge::normalize {

// Language of a piece of text, relative to the pipeline's language pair:
// the pivot language is shared between script and subtitle (English here),
// the other language is the subtitle's second language (Chinese here).
enum class LangTag { Pivot, Other, Unknown };

// A lowercased token. Never empty, never contains whitespace, never
// punctuation-only.
using Term = std::string;

struct DecodeConfig {
  // Tried after UTF-8/UTF-16 detection fails; any iconv encoding name.
  std::string legacy_encoding = "GB18030";
};

// Byte sequence -> Unicode text. Detects UTF-8 (with or without BOM) and
// UTF-16 (BOM required), then falls back to cfg.legacy_encoding. Line
// endings are normalized to '\n'. Throws UndecodableInput when nothing fits.
std::string decode(std::string_view bytes, const DecodeConfig& cfg = {});

LangTag detect_language(std::string_view text);

using T2sTable = std::map<char32_t, char32_t>;

// Bundled traditional -> simplified character table. Partial by design;
// unmapped codepoints pass through to_simplified unchanged.
const T2sTable& default_t2s_table();

// Loads a table in the shipped format: one pair per line, traditional
// character, tab, simplified character. '#' lines and blanks are skipped.
T2sTable load_t2s_table(const std::string& path);
T2sTable parse_t2s_table(std::string_view text);

std::string to_simplified(std::string_view text, const T2sTable& table = default_t2s_table());

// Full-width punctuation to ASCII, whitespace runs collapsed to one space,
// outer whitespace trimmed.
std::string normalize_punct(std::string_view text);

using AbbrevSet = std::set<std::string>;
const AbbrevSet& default_abbreviations();
AbbrevSet load_abbreviations(const std::string& path);
AbbrevSet parse_abbreviations(std::string_view text);

// Splits after terminal punctuation (. ! ? and their full-width forms)
// followed by whitespace or end of text; a full-width terminator splits
// unconditionally. A '.' closing a listed abbreviation does not split.
std::vector<std::string> split_sentences(std::string_view text, LangTag lang,
                                         const AbbrevSet& abbreviations = default_abbreviations());

// Pivot: whitespace-split after separating punctuation, lowercased, stop
// words kept, punctuation-only tokens dropped. Contractions stay single
// tokens; hyphens separate. Other: CJK character unigrams; embedded
// non-CJK runs tokenize like pivot text.
std::vector<Term> tokenize(std::string_view text, LangTag lang);

}  // namespace scriptbridge::normalize
