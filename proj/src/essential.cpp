#include "fakenews/essential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fakenews/errors.hpp"
#include "fakenews/text.hpp"

namespace fakenews {

const std::array<std::string, 7>& BasicFeatures::field_names() {
    static const std::array<std::string, 7> kNames = {
        "unique_word_count", "stopword_count", "url_count",    "mean_word_length",
        "hashtag_count",     "numeric_count",  "uppercase_count"};
    return kNames;
}

std::array<double, 7> BasicFeatures::to_vector() const {
    return {unique_word_count, stopword_count, url_count,      mean_word_length,
            hashtag_count,     numeric_count,  uppercase_count};
}

namespace {

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        char a = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
        if (a != prefix[i]) return false;
    }
    return true;
}

bool is_url_token(std::string_view t) {
    return starts_with_ci(t, "http://") || starts_with_ci(t, "https://") ||
           starts_with_ci(t, "www.");
}

bool is_hashtag_token(std::string_view t) {
    return t.size() >= 2 && t[0] == '#' &&
           std::isalnum(static_cast<unsigned char>(t[1]));
}

// Raw token with surrounding punctuation removed ("now." -> "now").
std::string_view strip_punct(std::string_view t) {
    auto is_core = [](unsigned char c) {
        return std::isalnum(c) || c >= 0x80;
    };
    std::size_t b = 0, e = t.size();
    while (b < e && !is_core(static_cast<unsigned char>(t[b]))) ++b;
    while (e > b && !is_core(static_cast<unsigned char>(t[e - 1]))) --e;
    return t.substr(b, e - b);
}

bool is_numeric_core(std::string_view core) {
    if (core.empty()) return false;
    bool digit = false;
    for (std::size_t i = 0; i < core.size(); ++i) {
        char c = core[i];
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c == '.' || c == ',' ||
                   ((c == '+' || c == '-') && i == 0)) {
            // separators and a leading sign are fine
        } else {
            return false;
        }
    }
    return digit;
}

bool is_uppercase_core(std::string_view core) {
    if (core.size() < 2) return false;
    for (char c : core) {
        if (c < 'A' || c > 'Z') return false;
    }
    return true;
}

std::vector<std::string_view> whitespace_tokens(std::string_view body) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        std::size_t b = i;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        if (i > b) out.push_back(body.substr(b, i - b));
    }
    return out;
}

}  // namespace

BasicFeatures basic_features(const std::string& body,
                             const std::unordered_set<std::string>& stopwords) {
    BasicFeatures f;
    std::unordered_set<std::string> unique;
    for (std::string_view t : whitespace_tokens(body)) {
        if (is_url_token(t)) {
            f.url_count += 1;
            unique.insert(text::lower_ascii(t));
            continue;
        }
        if (is_hashtag_token(t)) {
            f.hashtag_count += 1;
            unique.insert(text::lower_ascii(t));
            continue;
        }
        std::string_view core = strip_punct(t);
        if (core.empty()) continue;
        if (is_numeric_core(core)) f.numeric_count += 1;
        if (is_uppercase_core(core)) f.uppercase_count += 1;
        unique.insert(text::lower_ascii(core));
    }
    f.unique_word_count = static_cast<double>(unique.size());

    std::size_t letters = 0, words = 0;
    for (const text::TokenSpan& span : text::word_spans(body)) {
        std::string_view tok(body.data() + span.begin, span.end - span.begin);
        letters += text::count_letters(tok);
        ++words;
        std::string lower = text::lower_ascii(tok);
        if (stopwords.count(lower)) f.stopword_count += 1;
    }
    f.mean_word_length =
        words > 0 ? static_cast<double>(letters) / static_cast<double>(words) : 0.0;
    return f;
}

double TfidfVocab::idf(std::size_t i) const {
    return std::log((1.0 + static_cast<double>(n_docs)) /
                    (1.0 + static_cast<double>(doc_freq[i]))) +
           1.0;
}

namespace {

// unigrams + bigrams of the lowercased word tokens
std::vector<std::string> ngrams_of(const std::string& body) {
    std::vector<std::string> words = text::words_lower(body);
    std::vector<std::string> out;
    out.reserve(words.size() * 2);
    for (const std::string& w : words) out.push_back(w);
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        out.push_back(words[i] + ' ' + words[i + 1]);
    }
    return out;
}

}  // namespace

TfidfVocab fit_tfidf_vocab(const std::vector<std::string>& train_bodies, int top_n) {
    if (train_bodies.empty()) throw EmptyTrainingSet("tfidf fit needs at least one document");
    // ordered maps keep the candidate scan order (and thus tie handling)
    // independent of hash seeds
    std::map<std::string, std::int64_t> df;
    std::map<std::string, std::int64_t> total_tf;
    for (const std::string& body : train_bodies) {
        std::map<std::string, std::int64_t> counts;
        for (std::string& g : ngrams_of(body)) ++counts[std::move(g)];
        for (const auto& [g, c] : counts) {
            ++df[g];
            total_tf[g] += c;
        }
    }
    const double n = static_cast<double>(train_bodies.size());
    std::vector<std::pair<double, std::string>> scored;
    scored.reserve(df.size());
    for (const auto& [g, d] : df) {
        double idf = std::log((n + 1.0) / (1.0 + static_cast<double>(d))) + 1.0;
        scored.emplace_back(static_cast<double>(total_tf[g]) * idf, g);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    if (top_n > 0 && scored.size() > static_cast<std::size_t>(top_n)) {
        scored.resize(static_cast<std::size_t>(top_n));
    }
    TfidfVocab vocab;
    vocab.n_docs = train_bodies.size();
    for (const auto& [score, g] : scored) {
        vocab.index.emplace(g, vocab.ngrams.size());
        vocab.doc_freq.push_back(df[g]);
        vocab.ngrams.push_back(g);
    }
    return vocab;
}

std::vector<double> tfidf_features(const std::string& body, const TfidfVocab& vocab) {
    std::vector<double> out(vocab.ngrams.size(), 0.0);
    for (const std::string& g : ngrams_of(body)) {
        auto it = vocab.index.find(g);
        if (it != vocab.index.end()) out[it->second] += 1.0;
    }
    double norm2 = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= vocab.idf(i);
        norm2 += out[i] * out[i];
    }
    if (norm2 > 0) {
        double norm = std::sqrt(norm2);
        for (double& x : out) x /= norm;
    }
    return out;
}

EmotionFeatures emotion_features(const std::string& body, const SentimentLexicon& lexicon) {
    double pol = 0, subj = 0;
    std::size_t hits = 0;
    for (const std::string& w : text::words_lower(body)) {
        auto it = lexicon.find(w);
        if (it == lexicon.end()) continue;
        pol += it->second.first;
        subj += it->second.second;
        ++hits;
    }
    if (hits == 0) return {};
    return {pol / static_cast<double>(hits), subj / static_cast<double>(hits)};
}

SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open sentiment lexicon " + path.string());
    std::string header;
    if (!std::getline(in, header) ||
        text::trim(header) != std::string_view("word,polarity,subjectivity")) {
        throw SchemaMismatch("sentiment lexicon header must be word,polarity,subjectivity");
    }
    SentimentLexicon lex;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = text::trim(line);
        if (row.empty() || row.front() == '#') continue;
        std::stringstream ss{std::string(row)};
        std::string word, pol_s, subj_s;
        if (!std::getline(ss, word, ',') || !std::getline(ss, pol_s, ',') ||
            !std::getline(ss, subj_s)) {
            throw LexiconParse("sentiment lexicon line " + std::to_string(lineno) +
                               ": expected word,polarity,subjectivity");
        }
        double pol, subj;
        try {
            pol = std::stod(pol_s);
            subj = std::stod(subj_s);
        } catch (const std::exception&) {
            throw LexiconParse("sentiment lexicon line " + std::to_string(lineno) +
                               ": bad number");
        }
        if (pol < -1.0 || pol > 1.0 || subj < 0.0 || subj > 1.0) {
            throw InvariantViolation("sentiment lexicon line " + std::to_string(lineno) +
                                     ": value out of range");
        }
        lex[text::lower_ascii(word)] = {pol, subj};
    }
    return lex;
}

}  // namespace fakenews
