#include <doctest.h>

#include <cmath>
#include <set>

#include "fakenews/errors.hpp"
#include "fakenews/model.hpp"
#include "support/fixtures.hpp"

using namespace fakenews;
using fakenews::testing::make_blobs;

namespace {

double gini_of(std::int64_t fake, std::int64_t legit) {
    double n = static_cast<double>(fake + legit);
    if (n <= 0) return 0;
    double pf = fake / n, pl = legit / n;
    return 1.0 - pf * pf - pl * pl;
}

std::vector<double> row_vec(const FeatureMatrix& X, std::size_t r) {
    return {X.row(r), X.row(r) + X.cols};
}

}  // namespace

TEST_CASE("separable blobs train to perfect accuracy") {
    FeatureMatrix X;
    std::vector<Label> y;
    make_blobs(20, 123, X, y);
    ForestParams params;
    params.n_trees = 50;
    params.seed = 5;
    ForestModel model = train_forest(X, y, params);
    std::size_t correct = 0;
    for (std::size_t r = 0; r < X.rows; ++r) {
        if (predict(model, row_vec(X, r)).first == y[r]) ++correct;
    }
    CHECK(correct == X.rows);

    SUBCASE("points deep in the fake region score near one") {
        auto [label, score] = predict(model, {0.1, -0.2});
        CHECK(label == Label::Fake);
        CHECK(score >= 0.9);
    }
    SUBCASE("prediction rejects wrong dimensionality and non-finite input") {
        CHECK_THROWS_AS(predict(model, {1.0}), DimensionMismatch);
        CHECK_THROWS_AS(predict(model, {1.0, std::nan("")}), NonFiniteFeature);
    }
}

TEST_CASE("degenerate training inputs are rejected") {
    FeatureMatrix X(4, 2);
    ForestParams params;
    std::vector<Label> single(4, Label::Fake);
    CHECK_THROWS_AS(train_forest(X, single, params), DegenerateLabels);
    std::vector<Label> y = {Label::Fake, Label::Fake, Label::Legitimate, Label::Legitimate};
    X.at(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(train_forest(X, y, params), NonFiniteFeature);
}

TEST_CASE("training is deterministic across thread counts") {
    FeatureMatrix X;
    std::vector<Label> y;
    make_blobs(30, 9, X, y);
    ForestParams params;
    params.n_trees = 32;
    params.seed = 77;
    ForestModel a = train_forest(X, y, params, 1);
    ForestModel b = train_forest(X, y, params, 8);
    CHECK(forest_to_json(a) == forest_to_json(b));
    for (std::size_t r = 0; r < X.rows; ++r) {
        CHECK(predict(a, row_vec(X, r)) == predict(b, row_vec(X, r)));
    }
}

TEST_CASE("every stored split lowers the weighted gini") {
    FeatureMatrix X;
    std::vector<Label> y;
    make_blobs(25, 31, X, y);
    // overlap the blobs a little so trees actually have to work
    for (std::size_t r = 0; r < X.rows; ++r) {
        X.at(r, 0) = std::fmod(X.at(r, 0) * 7.3, 9.0);
    }
    ForestParams params;
    params.n_trees = 20;
    params.seed = 3;
    ForestModel model = train_forest(X, y, params);
    std::size_t internal_nodes = 0;
    for (const DecisionTree& tree : model.trees) {
        for (const TreeNode& node : tree.nodes) {
            if (node.feature < 0) continue;
            ++internal_nodes;
            const TreeNode& l = tree.nodes[node.left];
            const TreeNode& r = tree.nodes[node.right];
            CHECK(l.count_fake + l.count_legit + r.count_fake + r.count_legit ==
                  node.count_fake + node.count_legit);
            double n = static_cast<double>(node.count_fake + node.count_legit);
            double weighted =
                (l.count_fake + l.count_legit) / n * gini_of(l.count_fake, l.count_legit) +
                (r.count_fake + r.count_legit) / n * gini_of(r.count_fake, r.count_legit);
            CHECK(weighted <= gini_of(node.count_fake, node.count_legit) + 1e-12);
        }
    }
    CHECK(internal_nodes > 0);
}

TEST_CASE("prediction is invariant under a monotone feature transform") {
    FeatureMatrix X;
    std::vector<Label> y;
    make_blobs(15, 41, X, y);
    FeatureMatrix X_cubed = X;
    for (std::size_t r = 0; r < X.rows; ++r) {
        double v = X.at(r, 0);
        X_cubed.at(r, 0) = v * v * v;
    }
    ForestParams params;
    params.n_trees = 10;
    params.seed = 4;
    ForestModel plain = train_forest(X, y, params);
    ForestModel cubed = train_forest(X_cubed, y, params);
    for (std::size_t r = 0; r < X.rows; ++r) {
        CHECK(predict(plain, row_vec(X, r)).first == predict(cubed, row_vec(X_cubed, r)).first);
    }
}

TEST_CASE("bootstrap sampling matches an independent PRNG trace") {
    SplitMix64 a(99);
    std::vector<std::size_t> sample = bootstrap_indices(a, 12);
    REQUIRE(sample.size() == 12);
    SplitMix64 b(99);
    for (std::size_t v : sample) {
        CHECK(v == b.below(12));
        CHECK(v < 12);
    }
    // with replacement: 12 draws from 12 almost surely repeat for this seed
    std::set<std::size_t> distinct(sample.begin(), sample.end());
    CHECK(distinct.size() < sample.size());
}

TEST_CASE("tie between vote halves goes to Fake") {
    FeatureMatrix X;
    std::vector<Label> y;
    make_blobs(10, 2, X, y);
    ForestParams params;
    params.n_trees = 2;
    params.seed = 1;
    params.bootstrap = false;
    params.max_depth = 1;
    ForestModel model = train_forest(X, y, params);
    // craft a model with two single-leaf trees voting opposite ways
    model.trees.resize(2);
    model.trees[0].nodes = {TreeNode{-1, 0, -1, -1, 5, 1}};
    model.trees[1].nodes = {TreeNode{-1, 0, -1, -1, 1, 5}};
    auto [label, score] = predict(model, {0, 0});
    CHECK(label == Label::Fake);
    CHECK(score == doctest::Approx(0.5));
}

TEST_CASE("forest serialization round-trips exactly") {
    FeatureMatrix X;
    std::vector<Label> y;
    make_blobs(12, 8, X, y);
    ForestParams params;
    params.n_trees = 7;
    params.seed = 123;
    ForestModel model = train_forest(X, y, params);
    model.feature_schema = {"x", "y"};
    nlohmann::json j = forest_to_json(model);
    ForestModel back = forest_from_json(j);
    CHECK(forest_to_json(back).dump() == j.dump());
    for (std::size_t r = 0; r < X.rows; ++r) {
        CHECK(predict(model, row_vec(X, r)) == predict(back, row_vec(X, r)));
    }
    nlohmann::json bad = j;
    bad["schema_version"] = "something/9";
    CHECK_THROWS_AS(forest_from_json(bad), SchemaMismatch);
}

TEST_CASE("matrix-level cross validation") {
    SUBCASE("separable blobs score 1.0 in every fold") {
        FeatureMatrix X;
        std::vector<Label> y;
        make_blobs(25, 6, X, y);
        std::vector<int> folds(X.rows);
        for (std::size_t r = 0; r < X.rows; ++r) folds[r] = static_cast<int>(r % 5);
        ForestParams params;
        params.n_trees = 30;
        params.seed = 2;
        std::vector<double> accs = cross_validate(X, y, folds, 5, params);
        REQUIRE(accs.size() == 5);
        for (double a : accs) CHECK(a == doctest::Approx(1.0));
    }
    SUBCASE("the FoldPlan overload matches the index-based one") {
        FeatureMatrix X;
        std::vector<Label> y;
        make_blobs(10, 3, X, y);
        Dataset ds = fakenews::testing::toy_dataset("cvplan", 10);
        REQUIRE(ds.size() == X.rows);
        std::vector<std::string> ids;
        for (const Article& a : ds.articles) ids.push_back(a.id);
        FoldPlan plan = split_folds(ds, 2, 6);
        // labels must line up with the plan's stratification source
        for (std::size_t r = 0; r < ds.size(); ++r) y[r] = ds.articles[r].label;
        for (std::size_t r = 0; r < X.rows; ++r) {
            X.at(r, 0) = y[r] == Label::Fake ? 0.0 + X.at(r, 0) * 0.01 : 8.0;
        }
        ForestParams params;
        params.n_trees = 10;
        params.seed = 9;
        std::vector<int> fold_of_row(X.rows);
        for (std::size_t r = 0; r < X.rows; ++r) {
            fold_of_row[r] = plan.assignments.at(ids[r]);
        }
        CHECK(cross_validate(X, y, ids, plan, params) ==
              cross_validate(X, y, fold_of_row, plan.k, params));
    }
    SUBCASE("random labels on noise hover near chance") {
        SplitMix64 rng(1234);
        FeatureMatrix X(200, 10);
        for (double& v : X.data) v = rng.uniform01();
        std::vector<Label> y(200);
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] = i % 2 == 0 ? Label::Fake : Label::Legitimate;
        }
        std::vector<int> folds(X.rows);
        for (std::size_t r = 0; r < X.rows; ++r) folds[r] = static_cast<int>(r % 5);
        ForestParams params;
        params.n_trees = 40;
        params.seed = 10;
        std::vector<double> accs = cross_validate(X, y, folds, 5, params);
        double mean = 0;
        for (double a : accs) {
            CHECK(a >= 0.0);
            CHECK(a <= 1.0);
            mean += a;
        }
        mean /= static_cast<double>(accs.size());
        CHECK(mean > 0.3);
        CHECK(mean < 0.7);
    }
}
