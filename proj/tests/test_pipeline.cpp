#include <doctest.h>

#include <algorithm>
#include <set>

#include "fakenews/errors.hpp"
#include "fakenews/pipeline.hpp"
#include "fakenews/text.hpp"
#include "support/fixtures.hpp"

using namespace fakenews;
namespace ft = fakenews::testing;

TEST_CASE("dimension law") {
    SUBCASE("defaults reproduce the published budgets") {
        FeatureConfig config;
        CHECK(config.dimension() == 337);
        auto schema = feature_schema(config);
        REQUIRE(schema.size() == 337);
        auto count_prefix = [&schema](const std::string& prefix) {
            std::size_t n = 0;
            for (const auto& name : schema) {
                if (name.rfind(prefix, 0) == 0) ++n;
            }
            return n;
        };
        CHECK(count_prefix("glove_") == 200);
        CHECK(count_prefix("basic_") == 14);
        CHECK(count_prefix("grammar_") == 19);
        CHECK(count_prefix("tfidf_") == 100);
        CHECK(count_prefix("emotion_") == 4);
    }
    SUBCASE("scope multipliers and disabling") {
        FeatureConfig config;
        config.glove.scope = Scope::Both;
        CHECK(config.dimension() == 537);
        config.glove.enabled = false;
        config.tfidf.enabled = false;
        CHECK(config.dimension() == 14 + 19 + 4);
        config.basic.enabled = false;
        config.grammar.enabled = false;
        config.emotion.enabled = false;
        CHECK_THROWS_AS(config.dimension(), BadConfig);
    }
    SUBCASE("schema order is family-major, original before paraphrased") {
        FeatureConfig config = ft::toy_feature_config();
        auto schema = feature_schema(config);
        REQUIRE(schema.size() == config.dimension());
        CHECK(schema.front() == "glove_o_0");
        CHECK(schema[config.glove_k] == "basic_o_unique_word_count");
        CHECK(schema[config.glove_k + 7] == "basic_p_unique_word_count");
        CHECK(schema.back() == "emotion_p_subjectivity");
    }
}

TEST_CASE("fit_pipeline on the toy corpus") {
    Dataset train = ft::toy_dataset("toy-train", 10);
    Resources res = ft::toy_resources();
    FeatureConfig config = ft::toy_feature_config();
    ForestParams forest = ft::toy_forest_params();
    FittedPipeline fitted = fit_pipeline(train, config, forest, res, 42);

    CHECK(fitted.schema.size() == config.dimension());
    CHECK(fitted.forest.n_features == fitted.schema.size());
    CHECK(fitted.fit_ids.size() == train.size());
    CHECK(fitted.codebook.codes.size() == 3);

    SUBCASE("training articles classify correctly") {
        std::size_t correct = 0;
        for (const Article& a : train.articles) {
            if (predict_article(fitted, res, a).first == a.label) ++correct;
        }
        CHECK(correct == train.size());
    }
    SUBCASE("a fully grown un-bootstrapped single tree recalls every training label") {
        ForestParams exact;
        exact.n_trees = 1;
        exact.bootstrap = false;
        FittedPipeline one_tree = fit_pipeline(train, config, exact, res, 5);
        for (const Article& a : train.articles) {
            auto [label, score] = predict_article(one_tree, res, a);
            CHECK(label == a.label);
            CHECK(score == (a.label == Label::Fake ? 1.0 : 0.0));
        }
    }
    SUBCASE("prediction is repeatable") {
        const Article& a = train.articles.front();
        CHECK(predict_article(fitted, res, a) == predict_article(fitted, res, a));
    }
    SUBCASE("refit with the same seed reproduces the model exactly") {
        FittedPipeline again = fit_pipeline(train, config, forest, res, 42);
        CHECK(pipeline_to_json(again).dump() == pipeline_to_json(fitted).dump());
    }
    SUBCASE("refit with another seed differs") {
        FittedPipeline other = fit_pipeline(train, config, forest, res, 43);
        CHECK(pipeline_to_json(other).dump() != pipeline_to_json(fitted).dump());
    }
    SUBCASE("empty-body prediction propagates EmptyText with the id") {
        Article empty;
        empty.id = "oops/1";
        empty.body = "   ";
        empty.variant = Variant::Original;
        CHECK_THROWS_WITH_AS(predict_article(fitted, res, empty),
                             doctest::Contains("oops/1"), EmptyText);
    }
    SUBCASE("pipeline JSON round-trips exactly and keeps predictions") {
        nlohmann::json j = pipeline_to_json(fitted);
        FittedPipeline back = pipeline_from_json(j);
        CHECK(pipeline_to_json(back).dump() == j.dump());
        for (const Article& a : train.articles) {
            CHECK(predict_article(back, res, a) == predict_article(fitted, res, a));
        }
    }
}

TEST_CASE("fit_pipeline rejects degenerate corpora") {
    Resources res = ft::toy_resources();
    FeatureConfig config = ft::toy_feature_config();
    ForestParams forest = ft::toy_forest_params();
    Dataset empty;
    empty.name = "empty";
    CHECK_THROWS_AS(fit_pipeline(empty, config, forest, res, 1), EmptyTrainingSet);

    Dataset one_class = ft::toy_dataset("one", 6);
    one_class.articles.erase(
        std::remove_if(one_class.articles.begin(), one_class.articles.end(),
                       [](const Article& a) { return a.label == Label::Fake; }),
        one_class.articles.end());
    CHECK_THROWS_AS(fit_pipeline(one_class, config, forest, res, 1), DegenerateLabels);
}

TEST_CASE("featurize contract") {
    Dataset train = ft::toy_dataset("feat", 8);
    Resources res = ft::toy_resources();
    FeatureConfig config = ft::toy_feature_config();
    FittedPipeline fitted = fit_pipeline(train, config, ft::toy_forest_params(), res, 7);
    const Article& original = train.articles.front();
    Article paraphrased = spin(original, res.synonyms, fitted.config.spin);

    SUBCASE("pure function of its inputs") {
        auto v1 = featurize(original, paraphrased, fitted.config, fitted.codebook,
                            fitted.tfidf_vocab, res);
        auto v2 = featurize(original, paraphrased, fitted.config, fitted.codebook,
                            fitted.tfidf_vocab, res);
        CHECK(v1 == v2);
        CHECK(v1.size() == fitted.schema.size());
    }
    SUBCASE("two originals are rejected") {
        CHECK_THROWS_AS(featurize(original, original, fitted.config, fitted.codebook,
                                  fitted.tfidf_vocab, res),
                        VariantMismatch);
    }
    SUBCASE("mismatched ids are rejected") {
        Article other = spin(train.articles.back(), res.synonyms, fitted.config.spin);
        CHECK_THROWS_AS(featurize(original, other, fitted.config, fitted.codebook,
                                  fitted.tfidf_vocab, res),
                        VariantMismatch);
    }
    SUBCASE("unfitted codebook is rejected") {
        Codebook unfitted;
        CHECK_THROWS_AS(
            featurize(original, paraphrased, fitted.config, unfitted, fitted.tfidf_vocab, res),
            UnfittedState);
    }
    SUBCASE("glove-only k=1 vector is the embedded token count") {
        FeatureConfig tiny;
        tiny.glove = {true, Scope::OriginalOnly};
        tiny.basic.enabled = false;
        tiny.grammar.enabled = false;
        tiny.tfidf.enabled = false;
        tiny.emotion.enabled = false;
        tiny.glove_k = 1;
        tiny.spin = fitted.config.spin;
        std::set<std::string> vocab;
        for (const auto& [w, v] : res.embeddings.vectors) vocab.insert(w);
        Codebook one = build_codebook(res.embeddings, vocab, 1, 5);
        auto v = featurize(original, paraphrased, tiny, one, TfidfVocab{}, res);
        REQUIRE(v.size() == 1);
        // every token of the toy corpus has an embedding
        CHECK(v[0] == static_cast<double>(text::word_spans(original.body).size()));
    }
}

TEST_CASE("grammar overrides replace computed values for original variants") {
    Dataset train = ft::toy_dataset("ovr", 8);
    Resources res = ft::toy_resources();
    FeatureConfig config = ft::toy_feature_config();
    FittedPipeline fitted = fit_pipeline(train, config, ft::toy_forest_params(), res, 3);
    const Article& original = train.articles.front();
    Article paraphrased = spin(original, res.synonyms, fitted.config.spin);

    GrammarFeatureSet canned;
    canned.overall_score = 91;
    canned.words = 12345;
    canned.sentences = 9;
    canned.unique_words = 11;
    canned.rare_words = 4;
    canned.delivery = 2;
    Resources with_override = res;
    with_override.grammar_overrides[original.id] = canned;

    auto plain = featurize(original, paraphrased, fitted.config, fitted.codebook,
                           fitted.tfidf_vocab, res);
    auto overridden = featurize(original, paraphrased, fitted.config, fitted.codebook,
                                fitted.tfidf_vocab, with_override);
    REQUIRE(plain.size() == overridden.size());
    // locate the grammar_o_words column through the schema
    std::size_t words_col = 0;
    for (std::size_t i = 0; i < fitted.schema.size(); ++i) {
        if (fitted.schema[i] == "grammar_o_words") words_col = i;
    }
    CHECK(overridden[words_col] == doctest::Approx(12345.0));
    CHECK(plain[words_col] != doctest::Approx(12345.0));
}

TEST_CASE("featurize_dataset rows follow dataset order and parallelism is invisible") {
    Dataset train = ft::toy_dataset("rows", 10);
    Resources res = ft::toy_resources();
    FeatureConfig config = ft::toy_feature_config();
    FittedPipeline fitted = fit_pipeline(train, config, ft::toy_forest_params(), res, 11);
    std::vector<Label> labels1, labels4;
    std::vector<std::string> ids1, ids4;
    FeatureMatrix x1 = featurize_dataset(train, fitted.config, fitted.codebook,
                                         fitted.tfidf_vocab, res, 1, &labels1, &ids1);
    FeatureMatrix x4 = featurize_dataset(train, fitted.config, fitted.codebook,
                                         fitted.tfidf_vocab, res, 4, &labels4, &ids4);
    CHECK(x1.data == x4.data);
    CHECK(labels1 == labels4);
    CHECK(ids1 == ids4);
    REQUIRE(ids1.size() == train.size());
    for (std::size_t i = 0; i < train.size(); ++i) CHECK(ids1[i] == train.articles[i].id);
}
