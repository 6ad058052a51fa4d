#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fakenews/corpus.hpp"
#include "fakenews/pipeline.hpp"

namespace fakenews {

// Fake is the positive class.
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }
    double accuracy() const;
};

ConfusionMatrix confusion_matrix(const std::vector<Label>& truth,
                                 const std::vector<Label>& pred);

struct ExperimentReport {
    std::string protocol;
    std::vector<std::string> run_labels;  // fold / domain / fraction names
    std::vector<double> accuracies;       // one per run
    double mean_accuracy = 0;
    std::vector<ConfusionMatrix> confusions;  // aligned with run_labels
    std::string config_digest;                // 16 hex digits
    std::uint64_t seed = 0;
    double wall_seconds = 0;  // in-memory diagnostic; never serialized
    bool leakage_audit_passed = false;
    std::vector<double> fractions;  // learning-curve only
};

// Stable FNV-1a digest over the canonical JSON of (feature config, forest
// params, protocol knobs); flips whenever any field changes.
std::string config_digest(const FeatureConfig& config, const ForestParams& forest,
                          const nlohmann::json& protocol_extras);

// Stratified k-fold CV with a full pipeline refit per fold (fold f fits with
// seed derive(seed, f)). Every fold asserts the fitted state saw no test id.
ExperimentReport run_in_domain(const Dataset& dataset, const FeatureConfig& config,
                               const ForestParams& forest, const Resources& res, int k,
                               std::uint64_t seed, int jobs = 1);

// Single fit on train_ds, single evaluation on test_ds. Rejects datasets
// sharing a name or any article id.
ExperimentReport run_cross_domain(const Dataset& train_ds, const Dataset& test_ds,
                                  const FeatureConfig& config, const ForestParams& forest,
                                  const Resources& res, std::uint64_t seed, int jobs = 1);

// For each fraction: per repeat and fold, fit on a stratified subsample of
// the training folds and score the untouched test fold; reported accuracy is
// the mean over repeats x folds. Per-fold pipeline seeds match run_in_domain,
// so the fraction-1.0 entry reproduces the in-domain result exactly.
ExperimentReport run_learning_curve(const Dataset& dataset, const std::vector<double>& fractions,
                                    const FeatureConfig& config, const ForestParams& forest,
                                    const Resources& res, std::uint64_t seed, int repeats,
                                    int k, int jobs = 1);

// Leave-one-domain-out: one report per domain, in Domain enum order.
std::vector<ExperimentReport> run_multi_domain(const Dataset& dataset,
                                               const FeatureConfig& config,
                                               const ForestParams& forest,
                                               const Resources& res, std::uint64_t seed,
                                               int jobs = 1);

// Standalone SVG with axes, fraction tick labels and one polyline per
// series. Needs a learning-curve report with at least two points.
std::string render_curve_svg(const ExperimentReport& report);

nlohmann::json report_to_json(const ExperimentReport& report);
std::string report_to_csv(const ExperimentReport& report);

}  // namespace fakenews
