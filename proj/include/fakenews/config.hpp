#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fakenews/eval.hpp"
#include "fakenews/pipeline.hpp"

namespace fakenews {

struct DatasetRef {
    std::string name;
    std::filesystem::path root;      // directory tree loader
    std::filesystem::path manifest;  // alternative CSV loader; wins when set
};

struct ProtocolParams {
    int folds = 5;
    std::vector<double> fractions{0.2, 0.4, 0.6, 0.8, 1.0};
    int repeats = 5;
};

struct ResourcePaths {
    std::filesystem::path embeddings;
    std::size_t embedding_dim = 50;
    std::filesystem::path synonyms;
    std::filesystem::path sentiment_lexicon;
    std::filesystem::path dictionary;
    std::filesystem::path common_words;
    std::filesystem::path stopwords;
    std::filesystem::path grammar_overrides;  // optional
    std::filesystem::path reference_corpus;   // optional dataset root
    std::filesystem::path model;              // optional, for `predict`
};

// The whole experiment description, read from one JSON file. `seed` is
// mandatory; runs never fall back to wall-clock entropy.
struct RunConfig {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::filesystem::path out_dir;  // may be overridden by --out
    DatasetRef dataset;
    std::optional<DatasetRef> secondary_dataset;  // cross-domain test set
    ResourcePaths resources;
    FeatureConfig features;
    ForestParams forest;
    ProtocolParams protocols;
};

// Parses and sanity-checks the config file. Unknown top-level keys and
// missing mandatory keys raise ConfigError naming the key.
RunConfig load_run_config(const std::filesystem::path& path);

// Existence check for every referenced path; raises ConfigError naming the
// offending config key.
void validate_paths(const RunConfig& cfg, bool need_secondary = false);

Resources load_resources(const RunConfig& cfg);

Dataset load_configured_dataset(const DatasetRef& ref);

// The documented config file schema (printed by `config-schema`).
std::string config_schema_text();

}  // namespace fakenews
