#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace fakenews {

// The 7 lexical features, fixed order (see field_names()). URL/hashtag/
// numeric/uppercase classification works on whitespace-delimited raw tokens
// so that "https://x.co" and "#news" stay single countable units.
struct BasicFeatures {
    double unique_word_count = 0;
    double stopword_count = 0;
    double url_count = 0;
    double mean_word_length = 0;
    double hashtag_count = 0;
    double numeric_count = 0;
    double uppercase_count = 0;

    static const std::array<std::string, 7>& field_names();
    std::array<double, 7> to_vector() const;
};

// Fitted unigram/bigram vocabulary, the top_n candidates by total TF-IDF
// mass over the training documents (ties broken lexicographically).
struct TfidfVocab {
    std::vector<std::string> ngrams;              // selection order
    std::vector<std::int64_t> doc_freq;           // aligned with ngrams
    std::int64_t n_docs = 0;
    std::unordered_map<std::string, std::size_t> index;

    double idf(std::size_t i) const;
};

struct EmotionFeatures {
    double polarity = 0;      // [-1, 1]
    double subjectivity = 0;  // [0, 1]
};

// word -> (polarity, subjectivity)
using SentimentLexicon = std::unordered_map<std::string, std::pair<double, double>>;

BasicFeatures basic_features(const std::string& body,
                             const std::unordered_set<std::string>& stopwords);

TfidfVocab fit_tfidf_vocab(const std::vector<std::string>& train_bodies, int top_n = 100);

// tf(raw count) * idf with idf = ln((1+n_docs)/(1+df)) + 1, L2-normalized
// unless the vector is all zero. Length equals |vocab.ngrams|.
std::vector<double> tfidf_features(const std::string& body, const TfidfVocab& vocab);

// Arithmetic mean of (polarity, subjectivity) over lexicon-matched tokens;
// (0, 0) when nothing matches.
EmotionFeatures emotion_features(const std::string& body, const SentimentLexicon& lexicon);

// CSV `word,polarity,subjectivity` with that exact header. Values must lie
// in [-1,1] and [0,1].
SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path);

}  // namespace fakenews
