#include "fakenews/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "fakenews/errors.hpp"
#include "fakenews/text.hpp"

namespace fakenews {

const std::array<std::string, 19>& GrammarFeatureSet::field_names() {
    static const std::array<std::string, 19> kNames = {
        "overall_score",  "correctness_alerts", "clarity",        "clarity_alerts",
        "engagement",     "engagement_alerts",  "delivery",       "all_alerts",
        "characters",     "words",              "sentences",      "reading_time_s",
        "speaking_time_s", "word_length",       "sentence_length", "readability_score",
        "unique_words",   "rare_words",         "plagiarism"};
    return kNames;
}

std::array<double, 19> GrammarFeatureSet::to_vector() const {
    return {overall_score,
            static_cast<double>(correctness_alerts),
            static_cast<double>(clarity),
            static_cast<double>(clarity_alerts),
            static_cast<double>(engagement),
            static_cast<double>(engagement_alerts),
            static_cast<double>(delivery),
            static_cast<double>(all_alerts),
            static_cast<double>(characters),
            static_cast<double>(words),
            static_cast<double>(sentences),
            static_cast<double>(reading_time_s),
            static_cast<double>(speaking_time_s),
            word_length,
            sentence_length,
            readability_score,
            static_cast<double>(unique_words),
            static_cast<double>(rare_words),
            plagiarism};
}

namespace {

std::vector<std::string> read_token_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open word list " + path.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.push_back(text::lower_ascii(t));
    }
    return out;
}

bool has_letter(std::string_view token) {
    return text::count_letters(token) > 0;
}

bool is_vowel_letter(char c) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Dictionary check with possessive stripping; hyphenated compounds pass when
// every part passes.
bool in_dictionary(const std::unordered_set<std::string>& dict, const std::string& lower) {
    auto check_part = [&dict](std::string part) {
        if (part.empty()) return true;
        if (dict.count(part)) return true;
        if (part.size() > 2 && part.compare(part.size() - 2, 2, "'s") == 0) {
            if (dict.count(part.substr(0, part.size() - 2))) return true;
        }
        if (part.size() > 1 && part.back() == '\'') {
            if (dict.count(part.substr(0, part.size() - 1))) return true;
        }
        return false;
    };
    if (check_part(lower)) return true;
    if (lower.find('-') == std::string::npos) return false;
    std::size_t pos = 0;
    while (pos <= lower.size()) {
        std::size_t dash = lower.find('-', pos);
        std::string part = lower.substr(pos, dash == std::string::npos ? std::string::npos
                                                                       : dash - pos);
        if (!part.empty() && has_letter(part) && !check_part(part)) return false;
        if (dash == std::string::npos) break;
        pos = dash + 1;
    }
    return true;
}

const std::unordered_set<std::string>& vague_words() {
    static const std::unordered_set<std::string> kVague = {
        "very", "really", "thing", "stuff", "nice", "good", "bad"};
    return kVague;
}

std::int64_t doubled_punctuation_runs(std::string_view body) {
    static const std::string kPunct = ".,!?;:";
    std::int64_t runs = 0;
    std::size_t i = 0;
    while (i < body.size()) {
        char c = body[i];
        if (kPunct.find(c) == std::string::npos) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < body.size() && body[j] == c) ++j;
        if (j - i >= 2) ++runs;
        i = j;
    }
    return runs;
}

std::unordered_set<std::string> word_8grams(const std::vector<std::string>& tokens) {
    std::unordered_set<std::string> grams;
    if (tokens.size() < 8) return grams;
    for (std::size_t i = 0; i + 8 <= tokens.size(); ++i) {
        std::string g = tokens[i];
        for (std::size_t j = 1; j < 8; ++j) {
            g += ' ';
            g += tokens[i + j];
        }
        grams.insert(std::move(g));
    }
    return grams;
}

}  // namespace

WordLists load_word_lists(const std::filesystem::path& dictionary,
                          const std::filesystem::path& common,
                          const std::filesystem::path& stopwords) {
    WordLists lists;
    for (const std::string& w : read_token_file(dictionary)) lists.dictionary.insert(w);
    lists.common = read_token_file(common);
    for (const std::string& w : lists.common) {
        lists.common_set.insert(w);
        lists.dictionary.insert(w);
    }
    for (const std::string& w : read_token_file(stopwords)) lists.stopwords.insert(w);
    return lists;
}

int count_syllables(const std::string& word) {
    std::string letters;
    for (char ch : word) {
        unsigned char c = static_cast<unsigned char>(ch);
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            letters.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    if (letters.empty()) throw NotAWord("no letters in token: " + word);
    auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : letters) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    if (groups > 1 && letters.back() == 'e') {
        std::size_t n = letters.size();
        bool consonant_le = n >= 2 && letters[n - 2] == 'l' &&
                            (n < 3 || !is_vowel(letters[n - 3]));
        if (!consonant_le) --groups;
    }
    return std::max(groups, 1);
}

namespace {

struct BodyCounts {
    std::vector<std::string> tokens_lower;
    std::int64_t words = 0;
    std::int64_t sentences = 0;
    std::int64_t letters = 0;
    std::int64_t syllables = 0;
};

BodyCounts count_body(const std::string& body) {
    BodyCounts c;
    for (const text::TokenSpan& span : text::word_spans(body)) {
        std::string_view tok(body.data() + span.begin, span.end - span.begin);
        c.tokens_lower.push_back(text::lower_ascii(tok));
        c.letters += static_cast<std::int64_t>(text::count_letters(tok));
        if (has_letter(tok)) c.syllables += count_syllables(std::string(tok));
    }
    c.words = static_cast<std::int64_t>(c.tokens_lower.size());
    c.sentences = static_cast<std::int64_t>(text::split_sentences(body).size());
    return c;
}

}  // namespace

double readability(const std::string& body) {
    BodyCounts c = count_body(body);
    if (c.words == 0 || c.sentences == 0) {
        throw EmptyText("readability needs at least one word and sentence");
    }
    return 206.835 - 1.015 * (static_cast<double>(c.words) / static_cast<double>(c.sentences)) -
           84.6 * (static_cast<double>(c.syllables) / static_cast<double>(c.words));
}

GrammarFeatureSet grammar_features(const Article& article, const WordLists& lists,
                                   const Dataset* reference_corpus) {
    const std::string& body = article.body;
    if (text::trim(body).empty()) throw EmptyText("empty body for article " + article.id);

    BodyCounts c = count_body(body);
    GrammarFeatureSet f;
    f.characters = static_cast<std::int64_t>(text::count_codepoints(body));
    f.words = c.words;
    f.sentences = c.sentences;
    f.reading_time_s = c.words * 60 / 250;
    f.speaking_time_s = static_cast<std::int64_t>(
        std::llround(static_cast<double>(c.words) * 60.0 / 133.0));

    std::unordered_set<std::string> unique(c.tokens_lower.begin(), c.tokens_lower.end());
    f.unique_words = static_cast<std::int64_t>(unique.size());
    for (const std::string& w : unique) {
        if (has_letter(w) && !lists.common_set.count(w)) ++f.rare_words;
    }

    // correctness: dictionary misses, repeated words, a/an mismatches,
    // doubled punctuation
    for (const std::string& w : c.tokens_lower) {
        if (has_letter(w) && !in_dictionary(lists.dictionary, w)) ++f.correctness_alerts;
    }
    for (std::size_t i = 1; i < c.tokens_lower.size(); ++i) {
        if (c.tokens_lower[i] == c.tokens_lower[i - 1]) ++f.correctness_alerts;
    }
    for (std::size_t i = 0; i + 1 < c.tokens_lower.size(); ++i) {
        const std::string& w = c.tokens_lower[i];
        const std::string& next = c.tokens_lower[i + 1];
        if (next.empty() || !has_letter(next)) continue;
        if (w == "a" && is_vowel_letter(next.front())) ++f.correctness_alerts;
        if (w == "an" && !is_vowel_letter(next.front())) ++f.correctness_alerts;
    }
    f.correctness_alerts += doubled_punctuation_runs(body);

    for (const std::string& sent : text::split_sentences(body)) {
        if (static_cast<std::int64_t>(text::word_spans(sent).size()) > 25) ++f.clarity_alerts;
    }
    for (const std::string& w : c.tokens_lower) {
        if (vague_words().count(w)) ++f.engagement_alerts;
    }
    f.all_alerts = f.correctness_alerts + f.clarity_alerts + f.engagement_alerts;
    f.overall_score = std::clamp(100.0 - 3.0 * static_cast<double>(f.all_alerts), 0.0, 100.0);

    f.sentence_length = c.sentences > 0
                            ? static_cast<double>(c.words) / static_cast<double>(c.sentences)
                            : 0.0;
    f.word_length = c.words > 0
                        ? static_cast<double>(c.letters) / static_cast<double>(c.words)
                        : 0.0;
    if (f.sentence_length <= 14.0) {
        f.clarity = 3;
    } else if (f.sentence_length <= 20.0) {
        f.clarity = 2;
    } else if (f.sentence_length <= 28.0) {
        f.clarity = 1;
    } else {
        f.clarity = 0;
    }
    double rare_ratio = f.unique_words > 0 ? static_cast<double>(f.rare_words) /
                                                 static_cast<double>(f.unique_words)
                                           : 0.0;
    f.engagement = rare_ratio >= 0.25 ? 2 : (rare_ratio >= 0.10 ? 1 : 0);
    f.delivery = 2;
    f.readability_score =
        (c.words > 0 && c.sentences > 0)
            ? 206.835 -
                  1.015 * (static_cast<double>(c.words) / static_cast<double>(c.sentences)) -
                  84.6 * (static_cast<double>(c.syllables) / static_cast<double>(c.words))
            : 0.0;

    if (reference_corpus && c.tokens_lower.size() >= 8) {
        std::unordered_set<std::string> mine = word_8grams(c.tokens_lower);
        double best = 0.0;
        for (const Article& ref : reference_corpus->articles) {
            if (ref.id == article.id) continue;
            std::unordered_set<std::string> theirs =
                word_8grams(text::words_lower(ref.body));
            if (theirs.empty()) continue;
            std::size_t shared = 0;
            for (const std::string& g : mine) shared += theirs.count(g);
            best = std::max(best, 100.0 * static_cast<double>(shared) /
                                      static_cast<double>(mine.size()));
        }
        f.plagiarism = best;
    }
    return f;
}

namespace {

void validate_row(const GrammarFeatureSet& f, const std::string& id) {
    auto fail = [&id](const std::string& what) {
        throw InvariantViolation("feature override row '" + id + "': " + what);
    };
    if (f.all_alerts != f.correctness_alerts + f.clarity_alerts + f.engagement_alerts) {
        fail("all_alerts is not the sum of the three alert fields");
    }
    if (f.unique_words > f.words) fail("unique_words exceeds words");
    if (f.rare_words > f.unique_words) fail("rare_words exceeds unique_words");
    if (f.clarity < 0 || f.clarity > 3) fail("clarity out of range");
    if (f.engagement < 0 || f.engagement > 2) fail("engagement out of range");
    if (f.delivery < 0 || f.delivery > 2) fail("delivery out of range");
    if (f.overall_score < 0 || f.overall_score > 100) fail("overall_score out of range");
    if (f.plagiarism < 0 || f.plagiarism > 100) fail("plagiarism out of range");
    if (f.correctness_alerts < 0 || f.clarity_alerts < 0 || f.engagement_alerts < 0 ||
        f.characters < 0 || f.words < 0 || f.sentences < 0 || f.reading_time_s < 0 ||
        f.speaking_time_s < 0 || f.unique_words < 0 || f.rare_words < 0) {
        fail("negative count");
    }
    if (f.sentences < 1) fail("sentences must be >= 1");
}

}  // namespace

std::map<std::string, GrammarFeatureSet> load_feature_overrides(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open feature override file " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw SchemaMismatch("empty override file " + path.string());
    std::string expected = "id";
    for (const std::string& name : GrammarFeatureSet::field_names()) {
        expected += ',';
        expected += name;
    }
    if (std::string(text::trim(header)) != expected) {
        throw SchemaMismatch("override header mismatch; expected: " + expected);
    }
    std::map<std::string, GrammarFeatureSet> out;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = text::trim(line);
        if (row.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss{std::string(row)};
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        if (cols.size() != 20) {
            throw SchemaMismatch("override row " + std::to_string(lineno) +
                                 " needs 20 columns");
        }
        std::array<double, 19> v{};
        for (std::size_t i = 0; i < 19; ++i) {
            try {
                v[i] = std::stod(cols[i + 1]);
            } catch (const std::exception&) {
                throw SchemaMismatch("override row " + std::to_string(lineno) +
                                     ": bad number '" + cols[i + 1] + "'");
            }
        }
        GrammarFeatureSet f;
        f.overall_score = v[0];
        f.correctness_alerts = static_cast<std::int64_t>(v[1]);
        f.clarity = static_cast<int>(v[2]);
        f.clarity_alerts = static_cast<std::int64_t>(v[3]);
        f.engagement = static_cast<int>(v[4]);
        f.engagement_alerts = static_cast<std::int64_t>(v[5]);
        f.delivery = static_cast<int>(v[6]);
        f.all_alerts = static_cast<std::int64_t>(v[7]);
        f.characters = static_cast<std::int64_t>(v[8]);
        f.words = static_cast<std::int64_t>(v[9]);
        f.sentences = static_cast<std::int64_t>(v[10]);
        f.reading_time_s = static_cast<std::int64_t>(v[11]);
        f.speaking_time_s = static_cast<std::int64_t>(v[12]);
        f.word_length = v[13];
        f.sentence_length = v[14];
        f.readability_score = v[15];
        f.unique_words = static_cast<std::int64_t>(v[16]);
        f.rare_words = static_cast<std::int64_t>(v[17]);
        f.plagiarism = v[18];
        validate_row(f, cols[0]);
        out[cols[0]] = f;
    }
    return out;
}

}  // namespace fakenews
