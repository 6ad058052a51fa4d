#include <doctest.h>

#include <filesystem>

#include "fakenews/essential.hpp"
#include "fakenews/grammar.hpp"
#include "fakenews/paraphrase.hpp"

using namespace fakenews;

namespace {
const std::filesystem::path kData = std::filesystem::path(FAKENEWS_SOURCE_DIR) / "data";
}

TEST_CASE("bundled word lists load and satisfy their invariants") {
    WordLists lists = load_word_lists(kData / "dictionary.txt", kData / "common_words.txt",
                                      kData / "stopwords.txt");
    CHECK(lists.dictionary.size() > 1000);
    CHECK(lists.common.size() > 500);
    CHECK(lists.stopwords.size() > 100);
    for (const std::string& w : lists.common) {
        CHECK(lists.dictionary.count(w) == 1);  // common ⊆ dictionary
    }
    CHECK(lists.stopwords.count("the") == 1);
    CHECK(lists.dictionary.count("government") == 1);
}

TEST_CASE("bundled sentiment lexicon loads within the declared ranges") {
    SentimentLexicon lex = load_sentiment_lexicon(kData / "sentiment_lexicon.csv");
    CHECK(lex.size() > 100);
    for (const auto& [word, scores] : lex) {
        CHECK(scores.first >= -1.0);
        CHECK(scores.first <= 1.0);
        CHECK(scores.second >= 0.0);
        CHECK(scores.second <= 1.0);
    }
    CHECK(lex.at("good").first > 0.0);
    CHECK(lex.at("bad").first < 0.0);
}

TEST_CASE("bundled synonym lexicon loads with single-word synonyms") {
    SynonymLexicon lex = load_synonym_lexicon(kData / "synonyms.tsv");
    CHECK(lex.entries.size() > 50);
    for (const auto& [word, synonyms] : lex.entries) {
        CHECK(!synonyms.empty());
        for (const std::string& s : synonyms) {
            CHECK(s.find(' ') == std::string::npos);
            CHECK(s != word);
        }
    }
}
