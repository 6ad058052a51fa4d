#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fakenews/corpus.hpp"
#include "fakenews/prng.hpp"

namespace fakenews {

// Row-major dense feature matrix.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    FeatureMatrix() = default;
    FeatureMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

struct ForestParams {
    int n_trees = 100;
    int max_depth = 0;           // 0 = unlimited
    int min_samples_split = 2;
    int features_per_split = 0;  // 0 = ceil(sqrt(d))
    bool bootstrap = true;
    std::uint64_t seed = 0;
};

// feature < 0 marks a leaf. Class counts of the node's training sample are
// kept on every node; leaves vote with them and tests can audit the split
// rule (weighted child Gini never exceeds the parent's) from counts alone.
struct TreeNode {
    std::int32_t feature = -1;
    double threshold = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int64_t count_fake = 0;
    std::int64_t count_legit = 0;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct ForestModel {
    std::vector<DecisionTree> trees;
    ForestParams params;
    std::size_t n_features = 0;
    std::vector<std::string> feature_schema;  // may be empty
};

// Trains params.n_trees CART trees on Gini impurity. Each tree draws its
// bootstrap sample and split-feature subsets from a private SplitMix64
// stream seeded by derive_seed(params.seed, tree_index), so results are
// identical for any `jobs` value. Splits consider ceil(sqrt(d)) randomly
// chosen features (unless features_per_split overrides) with thresholds at
// midpoints between consecutive distinct sample values; a node becomes a
// leaf at purity, min_samples_split, max_depth, or when no split lowers the
// weighted Gini.
ForestModel train_forest(const FeatureMatrix& X, const std::vector<Label>& y,
                         const ForestParams& params, int jobs = 1);

// Majority vote over the trees' leaf-majority classes; ties go to Fake.
// score is the fraction of trees voting Fake.
std::pair<Label, double> predict(const ForestModel& model, const std::vector<double>& x);
std::pair<Label, double> predict(const ForestModel& model, const double* x, std::size_t n);

// Plain matrix-level k-fold CV (no feature refitting; the pipeline handles
// fold-scoped featurizer state). fold_of_row[i] in [0, k). Returns one
// accuracy per fold, in fold order.
std::vector<double> cross_validate(const FeatureMatrix& X, const std::vector<Label>& y,
                                   const std::vector<int>& fold_of_row, int k,
                                   const ForestParams& params, int jobs = 1);

// Same, taking a FoldPlan plus the id of each row. The plan must cover
// every row.
std::vector<double> cross_validate(const FeatureMatrix& X, const std::vector<Label>& y,
                                   const std::vector<std::string>& row_ids,
                                   const FoldPlan& plan, const ForestParams& params,
                                   int jobs = 1);

// Versioned JSON serialization; round-trips exactly.
nlohmann::json forest_to_json(const ForestModel& model);
ForestModel forest_from_json(const nlohmann::json& j);

// N draws with replacement; exposed so the sampling contract is testable
// against an independent PRNG trace.
std::vector<std::size_t> bootstrap_indices(SplitMix64& rng, std::size_t n);

}  // namespace fakenews
