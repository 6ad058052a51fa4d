#pragma once

#include <cstdint>
#include <filesystem>

namespace fakenews::demo {

struct DemoKit {
    std::filesystem::path fakenewsamt_root;
    std::filesystem::path celebrity_root;
    std::filesystem::path embeddings;
    std::filesystem::path synonyms;
    std::filesystem::path sentiment_lexicon;
    std::filesystem::path dictionary;
    std::filesystem::path common_words;
    std::filesystem::path stopwords;
    std::filesystem::path config;
};

// Writes a self-consistent experiment kit under out_dir: two corpora in the
// documented layouts (a 480-article six-domain tree and a 500-article flat
// celebrity tree, both evenly split fake/legitimate), 50-dim embeddings
// covering the generator vocabulary, the word lists, sentiment and synonym
// lexicons, and a ready-to-run config.json. Fake articles carry a learnable
// style signal (misspellings, run-ons, vague and sensational wording,
// negative sentiment, shouty tokens); legitimate articles are clean. Output
// is a pure function of `seed`.
DemoKit generate(const std::filesystem::path& out_dir, std::uint64_t seed);

}  // namespace fakenews::demo
