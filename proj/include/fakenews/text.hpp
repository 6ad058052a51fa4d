#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fakenews::text {

// Load-time normalization: strips a UTF-8 BOM, folds CRLF/CR to LF and
// composes combining marks U+0300..U+0308 over ASCII base letters into their
// precomposed Latin-1 forms. Inputs are otherwise passed through unchanged
// and are expected to be UTF-8.
std::string normalize(std::string_view raw);

// Byte span [begin, end) of one word token inside the source text.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// A word token is a maximal run of letters, digits, apostrophes and hyphens
// containing at least one letter or digit. Non-ASCII codepoints count as
// letters, U+2019 counts as an apostrophe. Hyphenated compounds are one
// token ("decades-old"), as are contractions ("won't").
std::vector<TokenSpan> word_spans(std::string_view text);

// Lowercased word tokens in order of appearance (ASCII lowering only).
std::vector<std::string> words_lower(std::string_view text);

std::string lower_ascii(std::string_view token);

// Counts of codepoints / letter codepoints; multibyte sequences count once.
std::size_t count_codepoints(std::string_view text);
std::size_t count_letters(std::string_view text);

// Sentence splitting. Boundaries are runs of [.!?] (plus trailing closing
// quotes/brackets) followed by whitespace or end of text, and bare newlines.
// A '.' is not a boundary after a stoplisted abbreviation ("Mr.") or inside
// a dotted acronym ("U.S."). Returns trimmed non-empty sentences.
std::vector<std::string> split_sentences(std::string_view text);

// Byte offsets at which each sentence begins. Used by the chunker to prefer
// sentence-aligned cut points; splitting the text at any returned offset
// preserves byte-exact reassembly.
std::vector<std::size_t> sentence_starts(std::string_view text);

// Casing shapes recognized when transplanting a token's case onto its
// replacement during spinning.
enum class CaseShape { Lower, Capitalized, AllCaps, Other };

CaseShape case_shape(std::string_view token);
std::string apply_case(std::string_view replacement, CaseShape shape);

std::string_view trim(std::string_view s);

}  // namespace fakenews::text
