#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fakenews/corpus.hpp"
#include "fakenews/embedding.hpp"
#include "fakenews/essential.hpp"
#include "fakenews/grammar.hpp"
#include "fakenews/model.hpp"
#include "fakenews/paraphrase.hpp"

namespace fakenews {

enum class Scope { OriginalOnly, ParaphrasedOnly, Both };

std::string to_string(Scope s);
Scope parse_scope(const std::string& s);

struct FamilySettings {
    bool enabled = true;
    Scope scope = Scope::OriginalOnly;
};

// Which feature families go into the concatenated vector and from which
// article variant. The defaults reproduce the published per-family budgets:
// glove 200 + basic 2*7 + grammar 19 + tfidf 100 + emotion 2*2 = 337.
struct FeatureConfig {
    FamilySettings glove{true, Scope::OriginalOnly};
    FamilySettings basic{true, Scope::Both};
    FamilySettings grammar{true, Scope::OriginalOnly};
    FamilySettings tfidf{true, Scope::OriginalOnly};
    FamilySettings emotion{true, Scope::Both};
    int glove_k = 200;
    bool glove_normalize = false;
    int tfidf_top_n = 100;
    SpinConfig spin;

    // Total feature dimension, computable before any fitting. Throws
    // BadConfig when every family is disabled.
    std::size_t dimension() const;
};

nlohmann::json feature_config_to_json(const FeatureConfig& c);
FeatureConfig feature_config_from_json(const nlohmann::json& j);

// Everything loaded from resource files, shared read-only by fits and
// predictions.
struct Resources {
    WordLists lists;
    SentimentLexicon sentiment;
    SynonymLexicon synonyms;
    EmbeddingTable embeddings;
    std::map<std::string, GrammarFeatureSet> grammar_overrides;  // by article id
    std::optional<Dataset> reference_corpus;                     // plagiarism refs
};

// Column names in concatenation order: glove, basic, grammar, tfidf,
// emotion; original block before paraphrased block within each family.
std::vector<std::string> feature_schema(const FeatureConfig& config);

struct FittedPipeline {
    FeatureConfig config;  // spin.seed holds the derived effective seed
    Codebook codebook;
    TfidfVocab tfidf_vocab;
    ForestModel forest;
    std::vector<std::string> schema;
    std::vector<std::string> fit_ids;  // training article ids, for leakage audits
    std::uint64_t seed = 0;

    bool fitted() const { return !forest.trees.empty(); }
};

// One concatenated vector for an (original, paraphrased) pair. Both articles
// must share an id and carry the right variants. The tfidf block is padded
// with zeros up to tfidf_top_n so the dimension law holds even when a small
// training corpus yields fewer ngrams.
std::vector<double> featurize(const Article& original, const Article& paraphrased,
                              const FeatureConfig& config, const Codebook& codebook,
                              const TfidfVocab& tfidf_vocab, const Resources& res);

// Spins every training article, fits codebook and tfidf vocabulary on the
// training originals only, featurizes all pairs and trains the forest.
// Spin/codebook/forest streams are derived from `seed`, so a refit with the
// same inputs reproduces the model bit-for-bit.
FittedPipeline fit_pipeline(const Dataset& train, const FeatureConfig& config,
                            const ForestParams& forest_params, const Resources& res,
                            std::uint64_t seed, int jobs = 1);

std::pair<Label, double> predict_article(const FittedPipeline& pipeline, const Resources& res,
                                         const Article& original);

// Feature matrix for a whole dataset against already-fitted state; rows
// follow dataset order. Parallel-safe: rows are written into pre-sized
// storage by index.
FeatureMatrix featurize_dataset(const Dataset& dataset, const FeatureConfig& config,
                                const Codebook& codebook, const TfidfVocab& tfidf_vocab,
                                const Resources& res, int jobs,
                                std::vector<Label>* labels_out = nullptr,
                                std::vector<std::string>* ids_out = nullptr);

// Whole fitted state (codebook + tfidf + forest + schema) as versioned
// JSON; round-trips exactly.
nlohmann::json pipeline_to_json(const FittedPipeline& p);
FittedPipeline pipeline_from_json(const nlohmann::json& j);

}  // namespace fakenews
