#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fakenews/corpus.hpp"

namespace fakenews {

// Lowercase word -> candidate single-word replacements, insertion-ordered as
// written in the lexicon file.
struct SynonymLexicon {
    std::map<std::string, std::vector<std::string>> entries;
    std::size_t skipped_entries = 0;  // malformed/self-only lines dropped at load
};

struct SpinConfig {
    double rate = 0.4;                   // substitution probability per hit
    std::uint64_t seed = 0;
    std::size_t max_chunk_chars = 10000;
};

// Lexicon file format: `word<TAB>syn1|syn2|...`, UTF-8, '#' starts a comment
// line. Keys are lowercased; synonyms containing whitespace and synonyms
// equal to their key are dropped, and an entry left with no synonyms is
// skipped entirely (counted in skipped_entries).
SynonymLexicon load_synonym_lexicon(const std::filesystem::path& path);

// Splits text into chunks of at most max_chars, cutting at the latest
// sentence start inside the window, else the latest whitespace, else hard.
// Chunks concatenate back to the input byte-for-byte.
std::vector<std::string> chunk_text(const std::string& text, std::size_t max_chars);

// Deterministic synonym-substitution paraphrase. Each lexicon-hit token is
// replaced with probability config.rate by a synonym drawn uniformly from
// its entry; the source token's leading-capital or ALL-CAPS shape carries
// over. Tokens ending in s/ed/ing whose bare stem is in the lexicon are
// substituted at the stem and the suffix is re-appended. Everything else —
// punctuation, whitespace, unknown tokens — is byte-identical to the input.
// The PRNG stream is seeded from (config.seed, body hash), so output depends
// only on (body, lexicon, config) and spins can run concurrently.
Article spin(const Article& article, const SynonymLexicon& lexicon, const SpinConfig& config);

}  // namespace fakenews
