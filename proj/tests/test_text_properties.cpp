// Property checks over generated text: the tokenizer, splitter, chunker and
// spinner must hold their contracts on arbitrary byte soup, not just prose.

#include <doctest.h>

#include "fakenews/paraphrase.hpp"
#include "fakenews/prng.hpp"
#include "fakenews/text.hpp"

using namespace fakenews;

namespace {

// printable ASCII, punctuation runs, whitespace, newlines and some
// multi-byte UTF-8
std::string random_text(SplitMix64& rng, std::size_t max_len) {
    static const std::string pieces[] = {
        "word", "Cat",  "DOG",   "it's", "x9",   "e\xCC\x81tude", "caf\xC3\xA9",
        " ",    "  ",   "\n",    ". ",   "! ",   "? ",            "...",
        ", ",   "-",    "--",    "\"",   "(",    ")",             "#tag",
        "Mr.",  "U.S.", "3.5",   "??",   "'",    "\xE2\x80\x99",  "\t"};
    std::string out;
    std::size_t target = rng.below(max_len);
    while (out.size() < target) {
        out += pieces[rng.below(std::size(pieces))];
    }
    return out;
}

}  // namespace

TEST_CASE("normalize is idempotent on arbitrary input") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::string raw = random_text(rng, 300);
        std::string once = text::normalize(raw);
        CHECK(text::normalize(once) == once);
    }
}

TEST_CASE("word spans are in-bounds, ascending and non-overlapping") {
    SplitMix64 rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        std::string body = text::normalize(random_text(rng, 400));
        std::size_t prev_end = 0;
        for (const text::TokenSpan& s : text::word_spans(body)) {
            CHECK(s.begin >= prev_end);
            CHECK(s.begin < s.end);
            CHECK(s.end <= body.size());
            prev_end = s.end;
        }
    }
}

TEST_CASE("sentence splitting covers non-empty text") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        std::string body = text::normalize(random_text(rng, 400));
        auto sentences = text::split_sentences(body);
        if (!text::trim(body).empty()) {
            CHECK(!sentences.empty());
        } else {
            CHECK(sentences.empty());
        }
        for (const std::string& s : sentences) CHECK(!text::trim(s).empty());
    }
}

TEST_CASE("chunking reassembles any input under any limit") {
    SplitMix64 rng(104);
    for (int trial = 0; trial < 200; ++trial) {
        std::string body = text::normalize(random_text(rng, 500));
        std::size_t max_chars = 1 + rng.below(60);
        auto chunks = chunk_text(body, max_chars);
        std::string joined;
        for (const std::string& c : chunks) {
            CHECK(!c.empty());
            CHECK(c.size() <= max_chars);
            joined += c;
        }
        CHECK(joined == body);
    }
}

TEST_CASE("spinning arbitrary text preserves structure and determinism") {
    SynonymLexicon lex;
    lex.entries = {{"word", {"term", "token"}}, {"cat", {"feline"}}, {"dog", {"hound"}}};
    SplitMix64 rng(105);
    for (int trial = 0; trial < 100; ++trial) {
        Article a;
        a.id = "fuzz/" + std::to_string(trial);
        a.body = text::normalize(random_text(rng, 400));
        if (text::trim(a.body).empty()) continue;
        SpinConfig cfg;
        cfg.rate = 0.6;
        cfg.seed = rng.next();
        cfg.max_chunk_chars = 1 + rng.below(80);
        Article out = spin(a, lex, cfg);
        CHECK(out.variant == Variant::Paraphrased);
        CHECK(text::word_spans(out.body).size() == text::word_spans(a.body).size());
        CHECK(text::split_sentences(out.body).size() ==
              text::split_sentences(a.body).size());
        Article again = spin(a, lex, cfg);
        CHECK(again.body == out.body);
    }
}
