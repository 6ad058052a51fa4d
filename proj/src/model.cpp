#include "fakenews/model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "fakenews/errors.hpp"

namespace fakenews {

std::vector<std::size_t> bootstrap_indices(SplitMix64& rng, std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::size_t>(rng.below(n));
    return out;
}

namespace {

double gini(std::int64_t fake, std::int64_t legit) {
    double n = static_cast<double>(fake + legit);
    if (n <= 0) return 0.0;
    double pf = static_cast<double>(fake) / n;
    double pl = static_cast<double>(legit) / n;
    return 1.0 - pf * pf - pl * pl;
}

struct TreeBuilder {
    const FeatureMatrix& X;
    const std::vector<Label>& y;
    const ForestParams& params;
    int mtry;
    SplitMix64 rng;
    DecisionTree tree;

    TreeBuilder(const FeatureMatrix& x, const std::vector<Label>& labels,
                const ForestParams& p, std::uint64_t tree_seed)
        : X(x), y(labels), params(p), rng(tree_seed) {
        mtry = p.features_per_split > 0
                   ? std::min<int>(p.features_per_split, static_cast<int>(X.cols))
                   : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(X.cols))));
    }

    // Distinct feature indices via partial Fisher-Yates.
    std::vector<std::size_t> sample_features() {
        std::vector<std::size_t> all(X.cols);
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        for (int i = 0; i < mtry; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(all.size() - i));
            std::swap(all[i], all[j]);
        }
        all.resize(static_cast<std::size_t>(mtry));
        return all;
    }

    std::int32_t build(std::vector<std::size_t>& samples, int depth) {
        std::int64_t fake = 0;
        for (std::size_t s : samples) {
            if (y[s] == Label::Fake) ++fake;
        }
        std::int64_t legit = static_cast<std::int64_t>(samples.size()) - fake;

        std::int32_t id = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.push_back({});
        tree.nodes[id].count_fake = fake;
        tree.nodes[id].count_legit = legit;

        bool stop = fake == 0 || legit == 0 ||
                    samples.size() < static_cast<std::size_t>(params.min_samples_split) ||
                    (params.max_depth > 0 && depth >= params.max_depth);
        if (!stop) {
            double parent = gini(fake, legit);
            double best_gain = 0;
            std::size_t best_feature = 0;
            double best_threshold = 0;
            std::vector<std::pair<double, bool>> vals(samples.size());
            for (std::size_t f : sample_features()) {
                for (std::size_t i = 0; i < samples.size(); ++i) {
                    vals[i] = {X.at(samples[i], f), y[samples[i]] == Label::Fake};
                }
                std::sort(vals.begin(), vals.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                std::int64_t lf = 0, ll = 0;
                const double n = static_cast<double>(samples.size());
                for (std::size_t i = 1; i < vals.size(); ++i) {
                    if (vals[i - 1].second) {
                        ++lf;
                    } else {
                        ++ll;
                    }
                    if (vals[i].first == vals[i - 1].first) continue;
                    std::int64_t rf = fake - lf, rl = legit - ll;
                    double weighted =
                        (static_cast<double>(lf + ll) / n) * gini(lf, ll) +
                        (static_cast<double>(rf + rl) / n) * gini(rf, rl);
                    double gain = parent - weighted;
                    if (gain > best_gain + 1e-12) {
                        best_gain = gain;
                        best_feature = f;
                        best_threshold = (vals[i - 1].first + vals[i].first) / 2.0;
                    }
                }
            }
            if (best_gain > 0) {
                std::vector<std::size_t> left, right;
                left.reserve(samples.size());
                for (std::size_t s : samples) {
                    (X.at(s, best_feature) <= best_threshold ? left : right).push_back(s);
                }
                samples.clear();
                samples.shrink_to_fit();
                std::int32_t l = build(left, depth + 1);
                std::int32_t r = build(right, depth + 1);
                tree.nodes[id].feature = static_cast<std::int32_t>(best_feature);
                tree.nodes[id].threshold = best_threshold;
                tree.nodes[id].left = l;
                tree.nodes[id].right = r;
            }
        }
        return id;
    }
};

DecisionTree train_tree(const FeatureMatrix& X, const std::vector<Label>& y,
                        const ForestParams& params, std::size_t tree_index) {
    TreeBuilder builder(X, y, params, derive_seed(params.seed, tree_index));
    std::vector<std::size_t> samples;
    if (params.bootstrap) {
        samples = bootstrap_indices(builder.rng, X.rows);
    } else {
        samples.resize(X.rows);
        for (std::size_t i = 0; i < X.rows; ++i) samples[i] = i;
    }
    builder.build(samples, 0);
    return std::move(builder.tree);
}

void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= count) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

ForestModel train_forest(const FeatureMatrix& X, const std::vector<Label>& y,
                         const ForestParams& params, int jobs) {
    if (X.rows < 2) throw EmptyTrainingSet("forest training needs at least 2 rows");
    if (X.rows != y.size()) {
        throw LengthMismatch("X has " + std::to_string(X.rows) + " rows but y has " +
                             std::to_string(y.size()));
    }
    std::size_t fake = static_cast<std::size_t>(
        std::count(y.begin(), y.end(), Label::Fake));
    if (fake == 0 || fake == y.size()) {
        throw DegenerateLabels("training labels contain a single class");
    }
    for (double v : X.data) {
        if (!std::isfinite(v)) throw NonFiniteFeature("non-finite value in feature matrix");
    }
    if (params.n_trees < 1) throw BadConfig("n_trees must be >= 1");
    if (params.min_samples_split < 2) throw BadConfig("min_samples_split must be >= 2");

    ForestModel model;
    model.params = params;
    model.n_features = X.cols;
    model.trees.resize(static_cast<std::size_t>(params.n_trees));
    run_indexed(model.trees.size(), jobs, [&](std::size_t i) {
        model.trees[i] = train_tree(X, y, params, i);
    });
    return model;
}

std::pair<Label, double> predict(const ForestModel& model, const double* x, std::size_t n) {
    if (model.trees.empty()) throw UnfittedState("forest has no trees");
    if (n != model.n_features) {
        throw DimensionMismatch("input has " + std::to_string(n) + " features, model expects " +
                                std::to_string(model.n_features));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x[i])) throw NonFiniteFeature("non-finite value in input vector");
    }
    std::size_t fake_votes = 0;
    for (const DecisionTree& tree : model.trees) {
        const TreeNode* node = &tree.nodes[0];
        while (node->feature >= 0) {
            node = &tree.nodes[x[node->feature] <= node->threshold
                                   ? static_cast<std::size_t>(node->left)
                                   : static_cast<std::size_t>(node->right)];
        }
        if (node->count_fake >= node->count_legit) ++fake_votes;  // leaf tie -> Fake
    }
    double score = static_cast<double>(fake_votes) / static_cast<double>(model.trees.size());
    Label label = 2 * fake_votes >= model.trees.size() ? Label::Fake : Label::Legitimate;
    return {label, score};
}

std::pair<Label, double> predict(const ForestModel& model, const std::vector<double>& x) {
    return predict(model, x.data(), x.size());
}

std::vector<double> cross_validate(const FeatureMatrix& X, const std::vector<Label>& y,
                                   const std::vector<int>& fold_of_row, int k,
                                   const ForestParams& params, int jobs) {
    if (fold_of_row.size() != X.rows) {
        throw LengthMismatch("fold assignment does not cover all rows");
    }
    std::vector<double> accuracies;
    accuracies.reserve(static_cast<std::size_t>(k));
    for (int fold = 0; fold < k; ++fold) {
        FeatureMatrix train_x;
        train_x.cols = X.cols;
        std::vector<Label> train_y;
        std::vector<std::size_t> test_rows;
        for (std::size_t r = 0; r < X.rows; ++r) {
            if (fold_of_row[r] == fold) {
                test_rows.push_back(r);
            } else {
                train_x.data.insert(train_x.data.end(), X.row(r), X.row(r) + X.cols);
                train_y.push_back(y[r]);
                ++train_x.rows;
            }
        }
        ForestModel model;
        try {
            model = train_forest(train_x, train_y, params, jobs);
        } catch (const DataError& e) {
            throw DataError("fold " + std::to_string(fold) + ": " + e.what());
        } catch (const Error& e) {
            throw InternalError("fold " + std::to_string(fold) + ": " + e.what());
        }
        std::size_t correct = 0;
        for (std::size_t r : test_rows) {
            if (predict(model, X.row(r), X.cols).first == y[r]) ++correct;
        }
        accuracies.push_back(test_rows.empty()
                                 ? 0.0
                                 : static_cast<double>(correct) /
                                       static_cast<double>(test_rows.size()));
    }
    return accuracies;
}

std::vector<double> cross_validate(const FeatureMatrix& X, const std::vector<Label>& y,
                                   const std::vector<std::string>& row_ids,
                                   const FoldPlan& plan, const ForestParams& params,
                                   int jobs) {
    if (row_ids.size() != X.rows) throw LengthMismatch("row ids do not cover all rows");
    std::vector<int> fold_of_row(X.rows);
    for (std::size_t r = 0; r < X.rows; ++r) {
        auto it = plan.assignments.find(row_ids[r]);
        if (it == plan.assignments.end()) {
            throw LengthMismatch("fold plan misses row id '" + row_ids[r] + "'");
        }
        fold_of_row[r] = it->second;
    }
    return cross_validate(X, y, fold_of_row, plan.k, params, jobs);
}

nlohmann::json forest_to_json(const ForestModel& model) {
    nlohmann::json trees = nlohmann::json::array();
    for (const DecisionTree& tree : model.trees) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const TreeNode& n : tree.nodes) {
            nodes.push_back({n.feature, n.threshold, n.left, n.right, n.count_fake,
                             n.count_legit});
        }
        trees.push_back({{"nodes", std::move(nodes)}});
    }
    return {{"schema_version", "fakenews.forest/1"},
            {"params",
             {{"n_trees", model.params.n_trees},
              {"max_depth", model.params.max_depth},
              {"min_samples_split", model.params.min_samples_split},
              {"features_per_split", model.params.features_per_split},
              {"bootstrap", model.params.bootstrap},
              {"seed", model.params.seed}}},
            {"n_features", model.n_features},
            {"feature_schema", model.feature_schema},
            {"trees", std::move(trees)}};
}

ForestModel forest_from_json(const nlohmann::json& j) {
    if (j.value("schema_version", "") != "fakenews.forest/1") {
        throw SchemaMismatch("unsupported forest schema version");
    }
    ForestModel model;
    const auto& p = j.at("params");
    model.params.n_trees = p.at("n_trees").get<int>();
    model.params.max_depth = p.at("max_depth").get<int>();
    model.params.min_samples_split = p.at("min_samples_split").get<int>();
    model.params.features_per_split = p.at("features_per_split").get<int>();
    model.params.bootstrap = p.at("bootstrap").get<bool>();
    model.params.seed = p.at("seed").get<std::uint64_t>();
    model.n_features = j.at("n_features").get<std::size_t>();
    model.feature_schema = j.at("feature_schema").get<std::vector<std::string>>();
    for (const auto& jt : j.at("trees")) {
        DecisionTree tree;
        for (const auto& jn : jt.at("nodes")) {
            TreeNode n;
            n.feature = jn.at(0).get<std::int32_t>();
            n.threshold = jn.at(1).get<double>();
            n.left = jn.at(2).get<std::int32_t>();
            n.right = jn.at(3).get<std::int32_t>();
            n.count_fake = jn.at(4).get<std::int64_t>();
            n.count_legit = jn.at(5).get<std::int64_t>();
            if (n.feature >= 0 && static_cast<std::size_t>(n.feature) >= model.n_features) {
                throw SchemaMismatch("tree node references feature out of range");
            }
            tree.nodes.push_back(n);
        }
        if (tree.nodes.empty()) throw SchemaMismatch("tree with no nodes");
        model.trees.push_back(std::move(tree));
    }
    return model;
}

}  // namespace fakenews
