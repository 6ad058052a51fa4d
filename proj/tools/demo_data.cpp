#include "demo_data.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fakenews/corpus.hpp"
#include "fakenews/prng.hpp"

namespace fs = std::filesystem;

namespace fakenews::demo {

namespace {

using Words = std::vector<std::string>;

struct SentimentWord {
    const char* word;
    double polarity;
    double subjectivity;
};

struct DomainPool {
    Words nouns;
    Words verbs;  // past tense
    Words places;
};

const Words kStopwords = {
    "a",    "about", "after",  "again", "all",   "an",    "and",   "any",  "are",
    "as",   "at",    "be",     "been",  "before", "being", "both",  "but",  "by",
    "can",  "could", "did",    "do",    "does",  "down",  "during", "each", "few",
    "for",  "from",  "had",    "has",   "have",  "he",    "her",   "here", "him",
    "his",  "how",   "i",      "if",    "in",    "into",  "is",    "it",   "its",
    "just", "more",  "most",   "my",    "near",  "no",    "not",   "now",  "of",
    "off",  "on",    "once",   "only",  "or",    "other", "our",   "out",  "over",
    "own",  "said",  "same",   "she",   "should", "so",    "some",  "such", "than",
    "that", "the",   "their",  "them",  "then",  "there", "these", "they", "this",
    "those", "through", "to",   "too",   "under", "until", "up",    "very", "was",
    "we",   "were",  "what",   "when",  "where", "which", "while", "who",  "why",
    "will", "with",  "would",  "you",   "your"};

// every literal word the sentence templates can emit
const Words kTemplateWords = {
    "the",    "a",     "an",     "officials", "said",      "according", "to",
    "near",   "remained", "truth", "about",   "more",      "at",        "right",
    "now",    "was",   "and",    "over",      "several",   "months",    "experts",
    "researchers", "many", "it",  "will",     "not",       "believe",   "you",
    "is",     "in",    "of",     "after",     "that",      "would",     "report",
    "new",    "this",  "they",   "people",    "week",      "year",      "plan",
    "during", "com",   "because", "before",   "were",      "are",       "have",
    "its",    "with",  "when",   "including", "while",     "which",     "but",
    "made",   "found", "showed", "became",    "without",   "already"};

const Words kGeneralNouns = {
    "report",   "statement", "study",     "review",   "program",  "project",
    "meeting",  "decision",  "agreement", "document", "analysis", "survey",
    "interview", "record",   "account",   "release",  "update",   "summary",
    "proposal", "budget",    "policy",    "schedule", "outcome",  "result",
    "figure",   "number",    "detail",    "source",   "member",   "group",
    "leader",   "team",      "audience",  "community", "event",    "series",
    "change",   "effort",    "response",  "question", "answer",   "problem",
    "issue",    "matter",    "story",     "article",  "headline", "announcement"};

const Words kGeneralVerbs = {
    "announced", "released", "confirmed", "reported",  "described", "published",
    "reviewed",  "approved", "discussed", "presented", "examined",  "completed",
    "launched",  "revealed", "prepared",  "reached",   "followed",  "shared",
    "outlined",  "delivered", "opened",   "closed",    "extended",  "supported"};

const Words kNeutralAdjs = {
    "recent",   "official", "detailed",  "careful",  "thorough", "measured",
    "extensive", "early",    "public",    "annual",   "formal",   "joint",
    "regional", "national", "local",     "steady",   "modest",   "gradual",
    "ongoing",  "planned",  "scheduled", "routine",  "standard", "updated"};

const Words kOrgs = {
    "agency",     "department", "committee", "council",  "institute", "university",
    "association", "commission", "board",     "ministry", "office",    "company"};

const Words kSensational = {
    "shocking",  "unbelievable", "secret",     "banned",     "miracle",
    "outrageous", "explosive",    "forbidden",  "insane",     "horrifying",
    "exposed",   "hidden",       "massive",    "terrifying", "scandalous",
    "mysterious", "devastating",  "astonishing"};

const Words kVagueWords = {"very", "really", "thing", "stuff", "nice", "good", "bad"};

const Words kMisspellings = {
    "teh",     "recieve", "definately", "untill",  "occured", "seperate",
    "goverment", "beleive", "wierd",     "alot",    "thier",   "freind",
    "acheive", "accross", "basicly",    "shoking", "secrit",  "offical"};

const SentimentWord kPositive[] = {
    {"reliable", 0.6, 0.5},   {"helpful", 0.5, 0.5},   {"successful", 0.7, 0.6},
    {"strong", 0.4, 0.4},     {"clear", 0.3, 0.4},     {"positive", 0.6, 0.6},
    {"effective", 0.5, 0.5},  {"promising", 0.6, 0.7}, {"stable", 0.4, 0.3},
    {"valuable", 0.6, 0.6},   {"fair", 0.4, 0.5},      {"encouraging", 0.7, 0.7},
    {"accurate", 0.5, 0.4},   {"balanced", 0.4, 0.4},  {"constructive", 0.5, 0.5},
    {"good", 0.7, 0.6},       {"great", 0.8, 0.75},    {"excellent", 0.9, 0.8},
    {"nice", 0.6, 0.9}};

const SentimentWord kNegative[] = {
    {"terrible", -0.9, 0.9},  {"awful", -0.9, 0.9},     {"dangerous", -0.6, 0.7},
    {"horrible", -0.9, 0.9},  {"disaster", -0.8, 0.8},  {"scam", -0.8, 0.9},
    {"corrupt", -0.8, 0.9},   {"failed", -0.6, 0.6},    {"broken", -0.5, 0.6},
    {"useless", -0.7, 0.8},   {"fraud", -0.8, 0.9},     {"crisis", -0.6, 0.6},
    {"threat", -0.6, 0.6},    {"lies", -0.7, 0.9},      {"panic", -0.7, 0.8},
    {"bad", -0.7, 0.67},      {"worst", -1.0, 1.0},     {"angry", -0.6, 0.8},
    {"furious", -0.8, 0.9},   {"collapse", -0.7, 0.7}};

// word<TAB>syn1|syn2 entries; every synonym is a single dictionary word
const std::pair<const char*, const char*> kSynonyms[] = {
    {"report", "account|statement"}, {"study", "survey|analysis"},
    {"big", "large|huge"},           {"recent", "new|fresh"},
    {"official", "formal|public"},   {"careful", "thorough|measured"},
    {"plan", "proposal|schedule"},   {"result", "outcome|figure"},
    {"meeting", "event|session"},    {"leader", "chief|head"},
    {"group", "team|community"},     {"problem", "issue|matter"},
    {"story", "article|account"},    {"announced", "confirmed|reported"},
    {"released", "published|shared"}, {"reviewed", "examined|discussed"},
    {"detailed", "extensive|thorough"}, {"steady", "stable|gradual"},
    {"question", "matter|issue"},    {"change", "update|shift"},
    {"document", "record|file"},     {"decision", "ruling|choice"},
    {"shocking", "astonishing|outrageous"}, {"secret", "hidden|mysterious"},
    {"massive", "huge|enormous"},    {"terrible", "awful|horrible"}};

// extra single words referenced only by synonym lists
const Words kSynonymExtras = {"large", "huge",  "fresh", "session", "chief",
                              "head",  "shift", "file",  "ruling",  "choice",
                              "enormous"};

std::map<Domain, DomainPool> domain_pools() {
    std::map<Domain, DomainPool> pools;
    pools[Domain::Technology] = {
        {"smartphone", "startup", "software", "network", "processor", "platform",
         "gadget", "browser", "battery", "satellite", "robot", "algorithm",
         "database", "server", "laptop", "drone", "chipmaker", "app"},
        {"upgraded", "patched", "benchmarked", "deployed", "encrypted", "streamed"},
        {"laboratory", "campus", "datacenter", "workshop"}};
    pools[Domain::Business] = {
        {"market", "merger", "investor", "revenue", "startup", "shareholder",
         "quarter", "forecast", "retailer", "supplier", "factory", "brand",
         "portfolio", "dividend", "contract", "economy", "bank", "trade"},
        {"acquired", "invested", "expanded", "reported", "restructured", "forecast"},
        {"exchange", "headquarters", "warehouse", "district"}};
    pools[Domain::Education] = {
        {"school", "student", "teacher", "curriculum", "classroom", "tuition",
         "scholarship", "degree", "lecture", "campus", "semester", "exam",
         "textbook", "faculty", "enrollment", "library", "workshop", "grade"},
        {"enrolled", "graduated", "studied", "taught", "tested", "tutored"},
        {"college", "district", "academy", "institute"}};
    pools[Domain::Sports] = {
        {"team", "coach", "season", "tournament", "stadium", "player", "league",
         "match", "transfer", "trophy", "referee", "defender", "goalkeeper",
         "championship", "roster", "training", "club", "fixture"},
        {"scored", "trained", "defeated", "signed", "qualified", "drafted"},
        {"arena", "field", "gym", "track"}};
    pools[Domain::Politics] = {
        {"senator", "election", "campaign", "parliament", "ballot", "candidate",
         "legislation", "debate", "coalition", "governor", "referendum", "cabinet",
         "congress", "mayor", "treaty", "amendment", "diplomat", "voter"},
        {"voted", "debated", "campaigned", "legislated", "negotiated", "elected"},
        {"capital", "senate", "courthouse", "embassy"}};
    pools[Domain::Entertainment] = {
        {"movie", "album", "concert", "festival", "director", "trailer",
         "premiere", "soundtrack", "sequel", "studio", "script", "audition",
         "boxoffice", "musical", "drama", "comedy", "documentary", "award"},
        {"premiered", "filmed", "recorded", "performed", "produced", "screened"},
        {"theater", "cinema", "backlot", "venue"}};
    pools[Domain::Celebrity] = {
        {"actor", "singer", "model", "designer", "host", "dancer", "celebrity",
         "stylist", "producer", "comedian", "influencer", "musician", "duet",
         "wardrobe", "engagement", "wedding", "tour", "interview"},
        {"married", "divorced", "toured", "starred", "posed", "hosted"},
        {"resort", "mansion", "studio", "penthouse"}};
    return pools;
}

class ArticleWriter {
public:
    ArticleWriter(const DomainPool& domain, SplitMix64& rng) : pool_(domain), rng_(rng) {}

    // Clean reporting; a small fraction carries one mild noise cue so the
    // classes overlap a little.
    std::string legitimate() {
        int n_sentences = 4 + static_cast<int>(rng_.below(5));
        std::string body;
        for (int s = 0; s < n_sentences; ++s) {
            if (!body.empty()) body += ' ';
            body += legit_sentence();
        }
        if (rng_.below(100) < 18) {
            body += ' ';
            body += mild_noise_sentence();
        }
        return body;
    }

    // Two out of three fakes are blatant (spelling errors, shouting,
    // run-ons, links); the rest only lean on sensational wording and
    // negative sentiment, which makes them genuinely harder.
    std::string fake() {
        bool subtle = rng_.below(3) == 0;
        int n_sentences = 4 + static_cast<int>(rng_.below(4));
        std::string body;
        for (int s = 0; s < n_sentences; ++s) {
            if (!body.empty()) body += ' ';
            if (subtle) {
                body += subtle_fake_sentence();
                continue;
            }
            switch (rng_.below(6)) {
                case 0: body += shout_sentence(); break;
                case 1: body += runon_sentence(); break;
                case 2: body += vague_sentence(); break;
                case 3: body += url_sentence(); break;
                default: body += sloppy_sentence(); break;
            }
        }
        return body;
    }

private:
    const DomainPool& pool_;
    SplitMix64& rng_;

    const std::string& pick(const Words& words) { return words[rng_.below(words.size())]; }
    std::string noun() { return rng_.below(2) ? pick(pool_.nouns) : pick(kGeneralNouns); }
    std::string verb() { return rng_.below(2) ? pick(pool_.verbs) : pick(kGeneralVerbs); }
    std::string place() { return pick(pool_.places); }
    std::string positive() { return kPositive[rng_.below(std::size(kPositive))].word; }
    std::string negative() { return kNegative[rng_.below(std::size(kNegative))].word; }
    std::string year() { return std::to_string(2015 + rng_.below(7)); }

    static bool vowel_start(const std::string& w) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])));
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
    }

    // correct article unless wrong=true
    static std::string an(const std::string& w, bool wrong = false) {
        bool use_an = vowel_start(w) != wrong;
        return (use_an ? "an " : "a ") + w;
    }

    static std::string cap(std::string s) {
        if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        return s;
    }

    // Honest reporting still reaches for loaded words now and then, so the
    // adjective/sentiment pools alone cannot separate the classes.
    std::string legit_adj() {
        return rng_.below(10) < 1 ? pick(kSensational) : pick(kNeutralAdjs);
    }
    std::string legit_mood() { return rng_.below(8) < 1 ? negative() : positive(); }

    std::string legit_sentence() {
        switch (rng_.below(5)) {
            case 0:
                return cap("the " + legit_adj() + " " + noun() + " " + verb() +
                           " the " + noun() + " near the " + place() + ".");
            case 1:
                return cap("according to the " + noun() + ", the " + pick(kOrgs) + " " +
                           verb() + " " + an(legit_adj()) + " " + noun() + " in " +
                           year() + ".");
            case 2:
                return cap("experts at the " + pick(kOrgs) + " said the " + noun() +
                           " remained " + legit_mood() + " during the " + noun() + ".");
            case 3:
                return cap("researchers " + verb() + " the " + noun() + " and " + verb() +
                           " " + an(legit_adj()) + " " + noun() +
                           " over several months.");
            default:
                return cap("the " + pick(kOrgs) + " " + verb() + " " +
                           an(legit_adj()) + " " + noun() + " about the " + noun() +
                           " after the " + noun() + ".");
        }
    }

    std::string sloppy_sentence() {
        // plain statement degraded by misspellings, duplicated words and
        // wrong articles
        std::string s = "the " + noun() + " " + verb() + " " +
                        an(pick(kSensational), rng_.below(3) == 0) + " " + noun() +
                        " about the " + noun() + " in " + year() + ".";
        if (rng_.below(3) == 0) {
            s = "the the " + s.substr(4);  // stutter
        }
        if (rng_.below(3) == 0) s += "!";
        if (rng_.below(5) < 3) s = pick(kMisspellings) + " " + s;
        s += " many peoples " + std::string(rng_.below(2) ? "beleive" : "say") + " it was " +
             negative() + ".";
        return cap(s);
    }

    // reads like legitimate copy, just leaning on loaded adjectives and
    // negative sentiment more often; many sentences carry no cue at all
    std::string subtle_fake_sentence() {
        if (rng_.below(5) < 2) return legit_sentence();
        switch (rng_.below(4)) {
            case 0:
                return cap("the " + pick(kSensational) + " " + noun() + " " + verb() +
                           " the " + noun() + " near the " + place() + ".");
            case 1:
                return cap("according to the " + noun() + ", the " + pick(kOrgs) + " " +
                           verb() + " " + an(pick(kSensational)) + " " + noun() + " in " +
                           year() + ".");
            case 2:
                return cap("experts at the " + pick(kOrgs) + " said the " + noun() +
                           " remained " + negative() + " during the " + noun() + ".");
            default:
                return cap("the " + pick(kOrgs) + " " + verb() + " " +
                           an(pick(kSensational)) + " " + noun() + " about the " + noun() +
                           " and it was " + negative() + ".");
        }
    }

    // occasional legitimate-article blemish: one vague aside, one misspelled
    // attribution, or one overlong sentence
    std::string mild_noise_sentence() {
        switch (rng_.below(3)) {
            case 0:
                return cap("it was " + an(pick(kVagueWords)) + " " + positive() + " " +
                           noun() + ".");
            case 1:
                return cap("many " + std::string(rng_.below(2) ? "beleive" : "say") +
                           " the " + noun() + " was " + positive() + ".");
            default: {
                std::string s = "the " + noun() + " " + verb() + " the " + noun();
                for (int i = 0; i < 4; ++i) {
                    s += " and the " + noun() + " " + verb() + " the " + noun();
                }
                return cap(s + " over several months.");
            }
        }
    }

    std::string shout_sentence() {
        std::string adj = pick(kSensational);
        std::transform(adj.begin(), adj.end(), adj.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        return cap("you will not believe the " + adj + " " + noun() + " that " + verb() +
                   " the " + noun() + "!!");
    }

    std::string runon_sentence() {
        std::string s = "the " + pick(kSensational) + " " + noun() + " " + verb() +
                        " the " + noun();
        for (int i = 0; i < 5; ++i) {
            s += " and the " + noun() + " " + verb() + " the " + pick(kSensational) + " " +
                 noun();
        }
        return cap(s + " because it was " + negative() + ".");
    }

    std::string vague_sentence() {
        return cap("it was " + an(pick(kVagueWords)) + " " + pick(kVagueWords) + " " +
                   noun() + " and really " + negative() + " stuff.");
    }

    std::string url_sentence() {
        return cap("more at www." + noun() + "news.com right now, the " + noun() +
                   " is " + negative() + " and " + pick(kSensational) + ".");
    }
};

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

void write_corpus(const fs::path& root, const std::vector<Domain>& domains,
                  bool domain_subdirs, int per_label_per_domain, std::uint64_t seed) {
    const auto pools = domain_pools();
    std::uint64_t domain_idx = 0;
    for (Domain d : domains) {
        const DomainPool& pool = pools.at(d);
        for (int label = 0; label < 2; ++label) {
            for (int i = 0; i < per_label_per_domain; ++i) {
                SplitMix64 rng(derive_seed(derive_seed(seed, domain_idx,
                                                       static_cast<std::uint64_t>(label)),
                                           static_cast<std::uint64_t>(i)));
                ArticleWriter writer(pool, rng);
                std::string body = label == 0 ? writer.fake() : writer.legitimate();
                char name[64];
                std::snprintf(name, sizeof(name), "%s%03d.txt", to_string(d).c_str(), i + 1);
                fs::path file = root / (label == 0 ? "fake" : "legit");
                if (domain_subdirs) file /= to_string(d);
                write_file(file / name, body + "\n");
            }
        }
        ++domain_idx;
    }
}

// vocabulary word -> embedding category; categories cluster in the embedding
// space so the codebook histogram carries topical/style signal
std::map<std::string, std::string> embedding_vocabulary() {
    std::map<std::string, std::string> vocab;
    auto add = [&vocab](const Words& words, const std::string& cat, bool plural = false) {
        for (const std::string& w : words) {
            vocab.emplace(w, cat);
            if (plural) vocab.emplace(w + "s", cat);
        }
    };
    add(kStopwords, "function");
    add(kTemplateWords, "function");
    add(kGeneralNouns, "general_noun", true);
    add(kGeneralVerbs, "general_verb");
    add(kNeutralAdjs, "neutral_adj");
    add(kOrgs, "org", true);
    add(kSensational, "sensational");
    add(kVagueWords, "vague");
    add(kSynonymExtras, "general_noun");
    for (const SentimentWord& s : kPositive) vocab.emplace(s.word, "positive");
    for (const SentimentWord& s : kNegative) vocab.emplace(s.word, "negative");
    for (const auto& [d, pool] : domain_pools()) {
        std::string cat = "domain_" + to_string(d);
        add(pool.nouns, cat, true);
        add(pool.verbs, cat);
        add(pool.places, cat, true);
    }
    vocab.emplace("peoples", "function");
    vocab.emplace("say", "function");
    return vocab;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void write_embeddings(const fs::path& path, int dim) {
    std::string out;
    for (const auto& [word, category] : embedding_vocabulary()) {
        SplitMix64 center_rng(fnv1a64(category));
        SplitMix64 noise_rng(fnv1a64(word));
        out += word;
        for (int i = 0; i < dim; ++i) {
            double center = (center_rng.uniform01() * 2.0 - 1.0) * 3.0;
            double noise = (noise_rng.uniform01() * 2.0 - 1.0) * 0.8;
            out += ' ';
            out += format_double(center + noise);
        }
        out += '\n';
    }
    write_file(path, out);
}

void write_word_lists(const DemoKit& kit) {
    std::set<std::string> dictionary;
    std::set<std::string> common;
    for (const auto& [word, category] : embedding_vocabulary()) {
        dictionary.insert(word);
        if (category == "function" || category == "general_noun" ||
            category == "general_verb" || category == "neutral_adj" ||
            category == "vague" || category == "positive" || category == "negative") {
            common.insert(word);  // domain/style jargon stays "rare"
        }
    }
    std::string dict_text = "# demo dictionary\n";
    for (const std::string& w : dictionary) dict_text += w + "\n";
    write_file(kit.dictionary, dict_text);

    std::string common_text = "# demo common-words list\n";
    for (const std::string& w : common) common_text += w + "\n";
    write_file(kit.common_words, common_text);

    std::string stop_text;
    for (const std::string& w : kStopwords) stop_text += w + "\n";
    write_file(kit.stopwords, stop_text);
}

void write_lexicons(const DemoKit& kit) {
    std::string sentiment = "word,polarity,subjectivity\n";
    for (const SentimentWord& s : kPositive) {
        sentiment += std::string(s.word) + "," + format_double(s.polarity) + "," +
                     format_double(s.subjectivity) + "\n";
    }
    for (const SentimentWord& s : kNegative) {
        sentiment += std::string(s.word) + "," + format_double(s.polarity) + "," +
                     format_double(s.subjectivity) + "\n";
    }
    write_file(kit.sentiment_lexicon, sentiment);

    std::string synonyms = "# demo synonym lexicon\n";
    for (const auto& [word, syns] : kSynonyms) {
        synonyms += std::string(word) + "\t" + syns + "\n";
    }
    write_file(kit.synonyms, synonyms);
}

void write_config(const DemoKit& kit, std::uint64_t seed) {
    nlohmann::json j = {
        {"seed", seed},
        {"jobs", 1},
        {"dataset", {{"name", "fakenewsamt-demo"}, {"root", kit.fakenewsamt_root.string()}}},
        {"secondary_dataset",
         {{"name", "celebrity-demo"}, {"root", kit.celebrity_root.string()}}},
        {"resources",
         {{"embeddings", kit.embeddings.string()},
          {"embedding_dim", 50},
          {"synonyms", kit.synonyms.string()},
          {"sentiment_lexicon", kit.sentiment_lexicon.string()},
          {"dictionary", kit.dictionary.string()},
          {"common_words", kit.common_words.string()},
          {"stopwords", kit.stopwords.string()}}},
        {"features",
         {{"glove_k", 200}, {"tfidf_top_n", 100}, {"spin", {{"rate", 0.4}}}}},
        {"forest", {{"n_trees", 100}}},
        {"protocols", {{"folds", 5}, {"fractions", {0.2, 0.4, 0.6, 0.8, 1.0}}, {"repeats", 5}}}};
    write_file(kit.config, j.dump(2) + "\n");
}

}  // namespace

DemoKit generate(const fs::path& out_dir, std::uint64_t seed) {
    DemoKit kit;
    kit.fakenewsamt_root = out_dir / "fakenewsamt";
    kit.celebrity_root = out_dir / "celebrity";
    kit.embeddings = out_dir / "embeddings_50d.txt";
    kit.synonyms = out_dir / "synonyms.tsv";
    kit.sentiment_lexicon = out_dir / "sentiment_lexicon.csv";
    kit.dictionary = out_dir / "dictionary.txt";
    kit.common_words = out_dir / "common_words.txt";
    kit.stopwords = out_dir / "stopwords.txt";
    kit.config = out_dir / "config.json";

    write_corpus(kit.fakenewsamt_root,
                 {Domain::Technology, Domain::Business, Domain::Education, Domain::Sports,
                  Domain::Politics, Domain::Entertainment},
                 true, 40, derive_seed(seed, 1));
    write_corpus(kit.celebrity_root, {Domain::Celebrity}, false, 250, derive_seed(seed, 2));
    write_embeddings(kit.embeddings, 50);
    write_word_lists(kit);
    write_lexicons(kit);
    write_config(kit, seed);
    return kit;
}

}  // namespace fakenews::demo
