#include "fakenews/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fakenews/errors.hpp"
#include "fakenews/prng.hpp"

namespace fakenews {

namespace {

constexpr std::uint64_t kSubsampleSalt = 0x4C43ULL;  // learning-curve draws

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) return 0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void audit_leakage(const FittedPipeline& fitted, const Dataset& test,
                   const std::string& where) {
    std::unordered_set<std::string> fit_ids(fitted.fit_ids.begin(), fitted.fit_ids.end());
    for (const Article& a : test.articles) {
        if (fit_ids.count(a.id)) {
            throw InternalError("leakage audit failed in " + where + ": test id '" + a.id +
                                "' was used for fitting");
        }
    }
}

struct EvalOutcome {
    double accuracy = 0;
    ConfusionMatrix confusion;
};

EvalOutcome evaluate_on(const FittedPipeline& fitted, const Resources& res,
                        const Dataset& test) {
    std::vector<Label> truth, pred;
    truth.reserve(test.size());
    pred.reserve(test.size());
    for (const Article& a : test.articles) {
        truth.push_back(a.label);
        pred.push_back(predict_article(fitted, res, a).first);
    }
    EvalOutcome out;
    out.confusion = confusion_matrix(truth, pred);
    out.accuracy = out.confusion.accuracy();
    return out;
}

Dataset subset_by_fold(const Dataset& dataset, const FoldPlan& plan, int fold, bool in_fold) {
    Dataset out;
    out.name = dataset.name;
    for (const Article& a : dataset.articles) {
        if ((plan.assignments.at(a.id) == fold) == in_fold) out.articles.push_back(a);
    }
    out.recount();
    return out;
}

}  // namespace

double ConfusionMatrix::accuracy() const {
    std::int64_t t = total();
    return t == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(t);
}

ConfusionMatrix confusion_matrix(const std::vector<Label>& truth,
                                 const std::vector<Label>& pred) {
    if (truth.size() != pred.size() || truth.empty()) {
        throw LengthMismatch("confusion matrix needs equal non-empty label vectors");
    }
    ConfusionMatrix m;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        bool t_fake = truth[i] == Label::Fake;
        bool p_fake = pred[i] == Label::Fake;
        if (t_fake && p_fake) ++m.tp;
        if (!t_fake && p_fake) ++m.fp;
        if (t_fake && !p_fake) ++m.fn;
        if (!t_fake && !p_fake) ++m.tn;
    }
    return m;
}

std::string config_digest(const FeatureConfig& config, const ForestParams& forest,
                          const nlohmann::json& protocol_extras) {
    nlohmann::json j = {{"features", feature_config_to_json(config)},
                        {"forest",
                         {{"n_trees", forest.n_trees},
                          {"max_depth", forest.max_depth},
                          {"min_samples_split", forest.min_samples_split},
                          {"features_per_split", forest.features_per_split},
                          {"bootstrap", forest.bootstrap}}},
                        {"protocol", protocol_extras}};
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(j.dump())));
    return buf;
}

ExperimentReport run_in_domain(const Dataset& dataset, const FeatureConfig& config,
                               const ForestParams& forest, const Resources& res, int k,
                               std::uint64_t seed, int jobs) {
    Stopwatch watch;
    FoldPlan plan = split_folds(dataset, k, seed);
    ExperimentReport report;
    report.protocol = "in_domain";
    report.seed = seed;
    report.config_digest =
        config_digest(config, forest, {{"name", "in_domain"}, {"folds", k}});
    for (int fold = 0; fold < k; ++fold) {
        Dataset train = subset_by_fold(dataset, plan, fold, false);
        Dataset test = subset_by_fold(dataset, plan, fold, true);
        FittedPipeline fitted = fit_pipeline(train, config, forest, res,
                                             derive_seed(seed, static_cast<std::uint64_t>(fold)),
                                             jobs);
        audit_leakage(fitted, test, "in_domain fold " + std::to_string(fold));
        EvalOutcome out = evaluate_on(fitted, res, test);
        report.run_labels.push_back("fold" + std::to_string(fold));
        report.accuracies.push_back(out.accuracy);
        report.confusions.push_back(out.confusion);
    }
    report.mean_accuracy = mean_of(report.accuracies);
    report.leakage_audit_passed = true;
    report.wall_seconds = watch.seconds();
    return report;
}

ExperimentReport run_cross_domain(const Dataset& train_ds, const Dataset& test_ds,
                                  const FeatureConfig& config, const ForestParams& forest,
                                  const Resources& res, std::uint64_t seed, int jobs) {
    Stopwatch watch;
    if (train_ds.name == test_ds.name) {
        throw DatasetOverlap("cross-domain train and test datasets are both '" +
                             train_ds.name + "'");
    }
    std::unordered_set<std::string> train_ids;
    for (const Article& a : train_ds.articles) train_ids.insert(a.id);
    for (const Article& a : test_ds.articles) {
        if (train_ids.count(a.id)) {
            throw DatasetOverlap("article id '" + a.id + "' appears in both datasets");
        }
    }
    ExperimentReport report;
    report.protocol = "cross_domain";
    report.seed = seed;
    report.config_digest =
        config_digest(config, forest, {{"name", "cross_domain"},
                                       {"train", train_ds.name},
                                       {"test", test_ds.name}});
    FittedPipeline fitted =
        fit_pipeline(train_ds, config, forest, res, derive_seed(seed, 0), jobs);
    audit_leakage(fitted, test_ds, "cross_domain");
    EvalOutcome out = evaluate_on(fitted, res, test_ds);
    report.run_labels.push_back(train_ds.name + "->" + test_ds.name);
    report.accuracies.push_back(out.accuracy);
    report.confusions.push_back(out.confusion);
    report.mean_accuracy = out.accuracy;
    report.leakage_audit_passed = true;
    report.wall_seconds = watch.seconds();
    return report;
}

namespace {

// Stratified subsample: per class, llround(fraction * class size) ids chosen
// by a seeded shuffle of the sorted id list.
Dataset stratified_subsample(const Dataset& pool, double fraction, std::uint64_t draw_seed) {
    std::set<std::string> chosen;
    int class_index = 0;
    for (Label cls : {Label::Fake, Label::Legitimate}) {
        std::vector<std::string> ids;
        for (const Article& a : pool.articles) {
            if (a.label == cls) ids.push_back(a.id);
        }
        std::sort(ids.begin(), ids.end());
        std::size_t take = static_cast<std::size_t>(
            std::llround(fraction * static_cast<double>(ids.size())));
        if (take == 0) {
            throw FractionTooSmall("fraction " + std::to_string(fraction) +
                                   " drops the whole " + to_string(cls) + " class");
        }
        SplitMix64 rng(derive_seed(draw_seed, static_cast<std::uint64_t>(class_index)));
        rng.shuffle(ids);
        ids.resize(std::min(take, ids.size()));
        chosen.insert(ids.begin(), ids.end());
        ++class_index;
    }
    Dataset out;
    out.name = pool.name;
    for (const Article& a : pool.articles) {
        if (chosen.count(a.id)) out.articles.push_back(a);
    }
    out.recount();
    return out;
}

}  // namespace

ExperimentReport run_learning_curve(const Dataset& dataset, const std::vector<double>& fractions,
                                    const FeatureConfig& config, const ForestParams& forest,
                                    const Resources& res, std::uint64_t seed, int repeats,
                                    int k, int jobs) {
    Stopwatch watch;
    if (fractions.empty()) throw FractionTooSmall("no fractions given");
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (fractions[i] <= 0.0 || fractions[i] > 1.0) {
            throw FractionTooSmall("fractions must lie in (0, 1]");
        }
        if (i > 0 && fractions[i] <= fractions[i - 1]) {
            throw FractionTooSmall("fractions must be strictly ascending");
        }
    }
    if (repeats < 1) throw BadConfig("repeats must be >= 1");

    FoldPlan plan = split_folds(dataset, k, seed);
    ExperimentReport report;
    report.protocol = "learning_curve";
    report.seed = seed;
    report.fractions = fractions;
    report.config_digest = config_digest(config, forest, {{"name", "learning_curve"},
                                                          {"folds", k},
                                                          {"fractions", fractions},
                                                          {"repeats", repeats}});
    for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
        double fraction = fractions[fi];
        std::vector<double> accs;
        ConfusionMatrix agg;
        for (int r = 0; r < repeats; ++r) {
            for (int fold = 0; fold < k; ++fold) {
                Dataset pool = subset_by_fold(dataset, plan, fold, false);
                Dataset test = subset_by_fold(dataset, plan, fold, true);
                std::uint64_t draw = derive_seed(derive_seed(seed, kSubsampleSalt, fi),
                                                 static_cast<std::uint64_t>(r),
                                                 static_cast<std::uint64_t>(fold));
                Dataset train = stratified_subsample(pool, fraction, draw);
                // pipeline seed matches run_in_domain's so fraction 1.0
                // reproduces the in-domain accuracies
                FittedPipeline fitted =
                    fit_pipeline(train, config, forest, res,
                                 derive_seed(seed, static_cast<std::uint64_t>(fold)), jobs);
                audit_leakage(fitted, test,
                              "learning_curve fraction " + std::to_string(fraction));
                EvalOutcome out = evaluate_on(fitted, res, test);
                accs.push_back(out.accuracy);
                agg.tp += out.confusion.tp;
                agg.fp += out.confusion.fp;
                agg.fn += out.confusion.fn;
                agg.tn += out.confusion.tn;
            }
        }
        char label[32];
        std::snprintf(label, sizeof(label), "fraction=%.3f", fraction);
        report.run_labels.push_back(label);
        report.accuracies.push_back(mean_of(accs));
        report.confusions.push_back(agg);
    }
    report.mean_accuracy = mean_of(report.accuracies);
    report.leakage_audit_passed = true;
    report.wall_seconds = watch.seconds();
    return report;
}

std::vector<ExperimentReport> run_multi_domain(const Dataset& dataset,
                                               const FeatureConfig& config,
                                               const ForestParams& forest,
                                               const Resources& res, std::uint64_t seed,
                                               int jobs) {
    Stopwatch watch;
    std::set<Domain> domains = dataset.domains();
    if (domains.size() < 2) {
        throw SingleDomainDataset("multi-domain analysis needs >= 2 domains, dataset '" +
                                  dataset.name + "' has " + std::to_string(domains.size()));
    }
    std::vector<ExperimentReport> reports;
    std::uint64_t domain_index = 0;
    for (Domain held_out : domains) {
        Dataset train = filter_domain(dataset, {held_out}, true);
        Dataset test = filter_domain(dataset, {held_out}, false);
        ExperimentReport report;
        report.protocol = "multi_domain";
        report.seed = seed;
        report.config_digest =
            config_digest(config, forest, {{"name", "multi_domain"},
                                           {"held_out", to_string(held_out)}});
        FittedPipeline fitted =
            fit_pipeline(train, config, forest, res, derive_seed(seed, domain_index), jobs);
        audit_leakage(fitted, test, "multi_domain holdout " + to_string(held_out));
        EvalOutcome out = evaluate_on(fitted, res, test);
        report.run_labels.push_back("holdout=" + to_string(held_out));
        report.accuracies.push_back(out.accuracy);
        report.confusions.push_back(out.confusion);
        report.mean_accuracy = out.accuracy;
        report.leakage_audit_passed = true;
        report.wall_seconds = watch.seconds();
        reports.push_back(std::move(report));
        ++domain_index;
    }
    return reports;
}

std::string render_curve_svg(const ExperimentReport& report) {
    if (report.fractions.size() < 2 || report.accuracies.size() != report.fractions.size()) {
        throw TooFewPoints("curve rendering needs >= 2 (fraction, accuracy) points");
    }
    const double width = 640, height = 420;
    const double ml = 60, mr = 20, mt = 20, mb = 50;  // margins
    const double px = width - ml - mr, py = height - mt - mb;
    auto x_of = [&](double fraction) { return ml + fraction * px; };
    auto y_of = [&](double acc) { return mt + (1.0 - acc) * py; };
    char buf[256];
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
           "viewBox=\"0 0 640 420\">\n";
    svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    // axes
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  ml, mt, ml, mt + py);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  ml, mt + py, ml + px, mt + py);
    svg += buf;
    // y grid and labels every 0.2
    for (int i = 0; i <= 5; ++i) {
        double acc = i / 5.0;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"#cccccc\"/>\n",
                      ml, y_of(acc), ml + px, y_of(acc));
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                      "text-anchor=\"end\">%.1f</text>\n",
                      ml - 6, y_of(acc) + 4, acc);
        svg += buf;
    }
    // x ticks at the fractions
    for (double f : report.fractions) {
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"black\"/>\n",
                      x_of(f), mt + py, x_of(f), mt + py + 5);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                      "text-anchor=\"middle\">%.2f</text>\n",
                      x_of(f), mt + py + 20, f);
        svg += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\" "
                  "text-anchor=\"middle\">training fraction</text>\n",
                  ml + px / 2, height - 10);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"15\" y=\"%.1f\" font-size=\"13\" text-anchor=\"middle\" "
                  "transform=\"rotate(-90 15 %.1f)\">accuracy</text>\n",
                  mt + py / 2, mt + py / 2);
    svg += buf;
    // the series
    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < report.fractions.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.2f,%.2f", i == 0 ? "" : " ",
                      x_of(report.fractions[i]), y_of(report.accuracies[i]));
        svg += buf;
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json confusions = nlohmann::json::array();
    for (const ConfusionMatrix& m : report.confusions) {
        confusions.push_back({{"tp", m.tp}, {"fp", m.fp}, {"fn", m.fn}, {"tn", m.tn}});
    }
    nlohmann::json j = {{"schema_version", "fakenews.report/1"},
                        {"protocol", report.protocol},
                        {"run_labels", report.run_labels},
                        {"accuracies", report.accuracies},
                        {"mean_accuracy", report.mean_accuracy},
                        {"confusions", confusions},
                        {"config_digest", report.config_digest},
                        {"seed", report.seed},
                        {"leakage_audit", report.leakage_audit_passed ? "pass" : "fail"}};
    if (!report.fractions.empty()) j["fractions"] = report.fractions;
    return j;
}

std::string report_to_csv(const ExperimentReport& report) {
    std::string csv = "protocol,run,accuracy,tp,fp,fn,tn\n";
    char buf[192];
    for (std::size_t i = 0; i < report.run_labels.size(); ++i) {
        const ConfusionMatrix& m = report.confusions[i];
        std::snprintf(buf, sizeof(buf), "%s,%s,%.10f,%lld,%lld,%lld,%lld\n",
                      report.protocol.c_str(), report.run_labels[i].c_str(),
                      report.accuracies[i], static_cast<long long>(m.tp),
                      static_cast<long long>(m.fp), static_cast<long long>(m.fn),
                      static_cast<long long>(m.tn));
        csv += buf;
    }
    std::snprintf(buf, sizeof(buf), "%s,mean,%.10f,,,,\n", report.protocol.c_str(),
                  report.mean_accuracy);
    csv += buf;
    return csv;
}

}  // namespace fakenews
