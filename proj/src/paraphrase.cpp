#include "fakenews/paraphrase.hpp"

#include <algorithm>
#include <fstream>

#include "fakenews/errors.hpp"
#include "fakenews/prng.hpp"
#include "fakenews/text.hpp"

namespace fakenews {

SynonymLexicon load_synonym_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open synonym lexicon " + path.string());
    SynonymLexicon lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = text::trim(line);
        if (row.empty() || row.front() == '#') continue;
        std::size_t tab = row.find('\t');
        if (tab == std::string_view::npos) {
            throw LexiconParse("synonym lexicon " + path.string() + " line " +
                               std::to_string(lineno) + ": expected word<TAB>synonyms");
        }
        std::string word = text::lower_ascii(text::trim(row.substr(0, tab)));
        std::string_view rest = text::trim(row.substr(tab + 1));
        std::vector<std::string> syns;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t bar = rest.find('|', pos);
            std::string_view piece =
                text::trim(rest.substr(pos, bar == std::string_view::npos ? rest.size() - pos
                                                                          : bar - pos));
            if (!piece.empty() && piece.find(' ') == std::string_view::npos &&
                text::lower_ascii(piece) != word) {
                syns.emplace_back(piece);
            }
            if (bar == std::string_view::npos) break;
            pos = bar + 1;
        }
        if (word.empty() || syns.empty()) {
            ++lex.skipped_entries;
            continue;
        }
        lex.entries[word] = std::move(syns);
    }
    return lex;
}

std::vector<std::string> chunk_text(const std::string& body, std::size_t max_chars) {
    if (max_chars < 1) throw BadConfig("chunk size must be >= 1");
    std::vector<std::string> chunks;
    if (body.empty()) return chunks;
    if (body.size() <= max_chars) {
        chunks.push_back(body);
        return chunks;
    }
    std::vector<std::size_t> starts = text::sentence_starts(body);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t limit = pos + max_chars;
        if (limit >= body.size()) {
            chunks.push_back(body.substr(pos));
            break;
        }
        std::size_t cut = 0;
        // latest sentence start in (pos, limit]
        auto it = std::upper_bound(starts.begin(), starts.end(), limit);
        if (it != starts.begin()) {
            std::size_t candidate = *(it - 1);
            if (candidate > pos) cut = candidate;
        }
        if (cut == 0) {
            for (std::size_t i = limit; i > pos; --i) {
                char c = body[i - 1];
                if (c == ' ' || c == '\t' || c == '\n') {
                    cut = i;
                    break;
                }
            }
        }
        if (cut == 0) cut = limit;  // hard cut inside an unbreakable run
        chunks.push_back(body.substr(pos, cut - pos));
        pos = cut;
    }
    return chunks;
}

namespace {

const std::vector<std::string>* lookup(const SynonymLexicon& lex, const std::string& word) {
    auto it = lex.entries.find(word);
    return it == lex.entries.end() ? nullptr : &it->second;
}

// Cheap morphology: if the token ends in s/ed/ing and the bare stem has an
// entry, substitute the stem and re-append the suffix.
const std::vector<std::string>* lookup_with_suffix(const SynonymLexicon& lex,
                                                   const std::string& word,
                                                   std::string& suffix) {
    if (const auto* syns = lookup(lex, word)) {
        suffix.clear();
        return syns;
    }
    for (const char* sfx : {"ing", "ed", "s"}) {
        std::size_t len = std::char_traits<char>::length(sfx);
        if (word.size() > len && word.compare(word.size() - len, len, sfx) == 0) {
            std::string stem = word.substr(0, word.size() - len);
            if (const auto* syns = lookup(lex, stem)) {
                suffix = sfx;
                return syns;
            }
        }
    }
    return nullptr;
}

std::string spin_chunk(const std::string& chunk, const SynonymLexicon& lexicon,
                       double rate, SplitMix64& rng) {
    std::string out;
    out.reserve(chunk.size());
    std::size_t copied = 0;
    for (const text::TokenSpan& span : text::word_spans(chunk)) {
        out.append(chunk, copied, span.begin - copied);
        copied = span.begin;
        std::string_view token(chunk.data() + span.begin, span.end - span.begin);
        std::string lower = text::lower_ascii(token);
        std::string suffix;
        const std::vector<std::string>* syns = lookup_with_suffix(lexicon, lower, suffix);
        bool substitute = syns && rng.uniform01() < rate;
        if (substitute) {
            const std::string& pick = (*syns)[rng.below(syns->size())];
            out += text::apply_case(pick + suffix, text::case_shape(token));
        } else {
            out.append(token);
        }
        copied = span.end;
    }
    out.append(chunk, copied, chunk.size() - copied);
    return out;
}

}  // namespace

Article spin(const Article& article, const SynonymLexicon& lexicon, const SpinConfig& config) {
    if (article.variant != Variant::Original) {
        throw AlreadyParaphrased("article " + article.id + " is already paraphrased");
    }
    if (config.rate < 0.0 || config.rate > 1.0) {
        throw BadConfig("spin rate must lie in [0,1]");
    }
    Article out = article;
    out.variant = Variant::Paraphrased;
    SplitMix64 rng(derive_seed(config.seed, fnv1a64(article.body)));
    std::string spun;
    spun.reserve(article.body.size());
    for (const std::string& chunk : chunk_text(article.body, config.max_chunk_chars)) {
        spun += spin_chunk(chunk, lexicon, config.rate, rng);
    }
    out.body = std::move(spun);
    return out;
}

}  // namespace fakenews
