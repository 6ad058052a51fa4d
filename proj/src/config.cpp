#include "fakenews/config.hpp"

#include <fstream>
#include <set>

#include "fakenews/errors.hpp"

namespace fs = std::filesystem;

namespace fakenews {

namespace {

nlohmann::json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw BadConfig("cannot open config file " + path.string());
    try {
        return nlohmann::json::parse(in, nullptr, true, true);  // comments allowed
    } catch (const nlohmann::json::parse_error& e) {
        throw BadConfig("config parse error in " + path.string() + ": " + e.what());
    }
}

DatasetRef dataset_ref_from(const nlohmann::json& j, const std::string& key) {
    DatasetRef ref;
    if (!j.contains("name")) throw BadConfig(key + ".name is required");
    ref.name = j.at("name").get<std::string>();
    if (j.contains("root")) ref.root = j.at("root").get<std::string>();
    if (j.contains("manifest")) ref.manifest = j.at("manifest").get<std::string>();
    if (ref.root.empty() && ref.manifest.empty()) {
        throw BadConfig(key + " needs either .root or .manifest");
    }
    return ref;
}

void require_key(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw BadConfig("config key '" + key + "' is required");
}

}  // namespace

RunConfig load_run_config(const fs::path& path) {
    nlohmann::json j = read_json(path);
    static const std::set<std::string> kKnown = {
        "seed", "jobs", "out_dir", "dataset", "secondary_dataset",
        "resources", "features", "forest", "protocols"};
    for (const auto& [key, value] : j.items()) {
        if (!kKnown.count(key)) throw BadConfig("unknown config key '" + key + "'");
    }
    RunConfig cfg;
    require_key(j, "seed");
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
        throw BadConfig("config key 'seed' must be an unsigned integer");
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
    if (cfg.jobs < 1) throw BadConfig("config key 'jobs' must be >= 1");
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();

    require_key(j, "dataset");
    cfg.dataset = dataset_ref_from(j.at("dataset"), "dataset");
    if (j.contains("secondary_dataset")) {
        cfg.secondary_dataset =
            dataset_ref_from(j.at("secondary_dataset"), "secondary_dataset");
    }

    require_key(j, "resources");
    const auto& r = j.at("resources");
    auto path_of = [&r](const char* key, bool required) -> fs::path {
        if (!r.contains(key)) {
            if (required) throw BadConfig(std::string("resources.") + key + " is required");
            return {};
        }
        return fs::path(r.at(key).get<std::string>());
    };
    cfg.resources.embeddings = path_of("embeddings", true);
    if (r.contains("embedding_dim")) {
        cfg.resources.embedding_dim = r.at("embedding_dim").get<std::size_t>();
    }
    cfg.resources.synonyms = path_of("synonyms", true);
    cfg.resources.sentiment_lexicon = path_of("sentiment_lexicon", true);
    cfg.resources.dictionary = path_of("dictionary", true);
    cfg.resources.common_words = path_of("common_words", true);
    cfg.resources.stopwords = path_of("stopwords", true);
    cfg.resources.grammar_overrides = path_of("grammar_overrides", false);
    cfg.resources.reference_corpus = path_of("reference_corpus", false);
    cfg.resources.model = path_of("model", false);

    if (j.contains("features")) cfg.features = feature_config_from_json(j.at("features"));
    if (j.contains("forest")) {
        const auto& f = j.at("forest");
        if (f.contains("n_trees")) cfg.forest.n_trees = f.at("n_trees").get<int>();
        if (f.contains("max_depth")) cfg.forest.max_depth = f.at("max_depth").get<int>();
        if (f.contains("min_samples_split")) {
            cfg.forest.min_samples_split = f.at("min_samples_split").get<int>();
        }
        if (f.contains("features_per_split")) {
            cfg.forest.features_per_split = f.at("features_per_split").get<int>();
        }
        if (f.contains("bootstrap")) cfg.forest.bootstrap = f.at("bootstrap").get<bool>();
    }
    if (j.contains("protocols")) {
        const auto& p = j.at("protocols");
        if (p.contains("folds")) cfg.protocols.folds = p.at("folds").get<int>();
        if (p.contains("fractions")) {
            cfg.protocols.fractions = p.at("fractions").get<std::vector<double>>();
        }
        if (p.contains("repeats")) cfg.protocols.repeats = p.at("repeats").get<int>();
    }
    cfg.features.dimension();  // validates family/k/top_n combinations early
    return cfg;
}

void validate_paths(const RunConfig& cfg, bool need_secondary) {
    auto check_dir = [](const fs::path& p, const std::string& key) {
        if (!fs::is_directory(p)) {
            throw BadConfig("config key '" + key + "': directory not found: " + p.string());
        }
    };
    auto check_file = [](const fs::path& p, const std::string& key) {
        if (!fs::is_regular_file(p)) {
            throw BadConfig("config key '" + key + "': file not found: " + p.string());
        }
    };
    if (!cfg.dataset.manifest.empty()) {
        check_file(cfg.dataset.manifest, "dataset.manifest");
    } else {
        check_dir(cfg.dataset.root, "dataset.root");
    }
    if (need_secondary && !cfg.secondary_dataset) {
        throw BadConfig("config key 'secondary_dataset' is required for this protocol");
    }
    if (cfg.secondary_dataset) {
        if (!cfg.secondary_dataset->manifest.empty()) {
            check_file(cfg.secondary_dataset->manifest, "secondary_dataset.manifest");
        } else {
            check_dir(cfg.secondary_dataset->root, "secondary_dataset.root");
        }
    }
    check_file(cfg.resources.embeddings, "resources.embeddings");
    check_file(cfg.resources.synonyms, "resources.synonyms");
    check_file(cfg.resources.sentiment_lexicon, "resources.sentiment_lexicon");
    check_file(cfg.resources.dictionary, "resources.dictionary");
    check_file(cfg.resources.common_words, "resources.common_words");
    check_file(cfg.resources.stopwords, "resources.stopwords");
    if (!cfg.resources.grammar_overrides.empty()) {
        check_file(cfg.resources.grammar_overrides, "resources.grammar_overrides");
    }
    if (!cfg.resources.reference_corpus.empty()) {
        check_dir(cfg.resources.reference_corpus, "resources.reference_corpus");
    }
    if (!cfg.resources.model.empty()) check_file(cfg.resources.model, "resources.model");
}

Resources load_resources(const RunConfig& cfg) {
    Resources res;
    res.lists = load_word_lists(cfg.resources.dictionary, cfg.resources.common_words,
                                cfg.resources.stopwords);
    res.sentiment = load_sentiment_lexicon(cfg.resources.sentiment_lexicon);
    res.synonyms = load_synonym_lexicon(cfg.resources.synonyms);
    res.embeddings = load_embeddings(cfg.resources.embeddings, cfg.resources.embedding_dim);
    if (!cfg.resources.grammar_overrides.empty()) {
        res.grammar_overrides = load_feature_overrides(cfg.resources.grammar_overrides);
    }
    if (!cfg.resources.reference_corpus.empty()) {
        res.reference_corpus = load_dataset(cfg.resources.reference_corpus, "reference");
    }
    return res;
}

Dataset load_configured_dataset(const DatasetRef& ref) {
    if (!ref.manifest.empty()) return load_manifest(ref.manifest, ref.name);
    return load_dataset(ref.root, ref.name);
}

std::string config_schema_text() {
    return R"(Config file: JSON (// comments allowed). Paths are relative to the
working directory. All keys shown with their defaults; (required) keys
have none.

{
  "seed": (required)            // unsigned 64-bit; drives every random draw
  "jobs": 1,                    // worker threads; never changes results
  "out_dir": "",                // output directory; --out overrides
  "dataset": {
    "name": (required),
    "root": "path/to/tree",     // <root>/<legit|fake>[/<domain>]/<id>.txt
    "manifest": ""              // alternative: CSV id,label,domain,path
  },
  "secondary_dataset": { ... }, // same shape; test set for cross-domain
  "resources": {
    "embeddings": (required),   // text format: word v1 .. vn
    "embedding_dim": 50,
    "synonyms": (required),     // word<TAB>syn1|syn2|...
    "sentiment_lexicon": (required),  // CSV word,polarity,subjectivity
    "dictionary": (required),   // one lowercase word per line
    "common_words": (required), // most-common-words list, one per line
    "stopwords": (required),
    "grammar_overrides": "",    // optional CSV of pre-extracted features
    "reference_corpus": "",     // optional dataset root for plagiarism refs
    "model": ""                 // fitted pipeline JSON, for `predict`
  },
  "features": {
    "glove":   {"enabled": true, "scope": "original_only"},
    "basic":   {"enabled": true, "scope": "both"},
    "grammar": {"enabled": true, "scope": "original_only"},
    "tfidf":   {"enabled": true, "scope": "original_only"},
    "emotion": {"enabled": true, "scope": "both"},
    "glove_k": 200,
    "glove_normalize": false,
    "tfidf_top_n": 100,
    "spin": {"rate": 0.4, "max_chunk_chars": 10000}
  },
  "forest": {
    "n_trees": 100,
    "max_depth": 0,             // 0 = unlimited
    "min_samples_split": 2,
    "features_per_split": 0,    // 0 = ceil(sqrt(d))
    "bootstrap": true
  },
  "protocols": {
    "folds": 5,
    "fractions": [0.2, 0.4, 0.6, 0.8, 1.0],
    "repeats": 5
  }
}
)";
}

}  // namespace fakenews
