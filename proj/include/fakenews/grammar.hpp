#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "fakenews/corpus.hpp"
#include "fakenews/text.hpp"

namespace fakenews {

// sentence segmentation shared with the paraphrase chunker
using text::split_sentences;

// The 19 proofreading-style measurements, in the fixed order given by
// field_names(). Ordinals: clarity 0=unclear..3=very clear, engagement
// 0=bland..2=very engaging, delivery 0=off..2=just right.
struct GrammarFeatureSet {
    double overall_score = 0;          // clamp(100 - 3*all_alerts, 0, 100)
    std::int64_t correctness_alerts = 0;
    int clarity = 0;
    std::int64_t clarity_alerts = 0;
    int engagement = 0;
    std::int64_t engagement_alerts = 0;
    int delivery = 2;
    std::int64_t all_alerts = 0;
    std::int64_t characters = 0;       // codepoints, spaces included
    std::int64_t words = 0;
    std::int64_t sentences = 0;
    std::int64_t reading_time_s = 0;   // floor(words/250 wpm)
    std::int64_t speaking_time_s = 0;  // round(words/133 wpm)
    double word_length = 0;            // mean letters per word
    double sentence_length = 0;        // mean words per sentence
    double readability_score = 0;      // Flesch Reading Ease, unclamped
    std::int64_t unique_words = 0;
    std::int64_t rare_words = 0;       // unique, has a letter, not common
    double plagiarism = 0;             // max 8-gram overlap %, 0 without refs

    static const std::array<std::string, 19>& field_names();
    std::array<double, 19> to_vector() const;
};

struct WordLists {
    std::unordered_set<std::string> dictionary;
    std::vector<std::string> common;  // most-common-words list, file order
    std::unordered_set<std::string> common_set;
    std::unordered_set<std::string> stopwords;
};

// Word-list files hold one lowercase token per line ('#' comments allowed).
// The common list is folded into the dictionary so common ⊆ dictionary holds
// by construction.
WordLists load_word_lists(const std::filesystem::path& dictionary,
                          const std::filesystem::path& common,
                          const std::filesystem::path& stopwords);

// Heuristic syllable count: maximal aeiouy runs, minus a terminal silent 'e'
// (kept when the word ends consonant+"le"), floor 1. Throws NotAWord when
// the token has no letters.
int count_syllables(const std::string& word);

// Flesch Reading Ease: 206.835 - 1.015*(words/sentences) - 84.6*(syllables/words).
// Not clamped. Throws EmptyText when the text has no words or sentences.
double readability(const std::string& body);

// All 19 fields for one article body. The alert rules are local stand-ins
// for the proprietary checker:
//   correctness = dictionary misses + repeated adjacent words
//               + a/an vowel mismatches + doubled-punctuation runs
//   clarity     = sentences longer than 25 words
//   engagement  = stock vague-word occurrences
// reference_corpus, when given, drives the plagiarism overlap; otherwise
// plagiarism is 0.
GrammarFeatureSet grammar_features(const Article& article, const WordLists& lists,
                                   const Dataset* reference_corpus = nullptr);

// Ingests pre-extracted feature rows (e.g. from the real checker). CSV
// header must be exactly "id," + the 19 field names. Rows are validated
// against the type invariants and reported by id on failure.
std::map<std::string, GrammarFeatureSet> load_feature_overrides(
    const std::filesystem::path& path);

}  // namespace fakenews
