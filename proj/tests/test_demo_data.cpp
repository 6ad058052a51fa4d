#include <doctest.h>

#include <fstream>

#include "demo_data.hpp"
#include "fakenews/config.hpp"
#include "fakenews/grammar.hpp"
#include "support/fixtures.hpp"

using namespace fakenews;
namespace ft = fakenews::testing;

TEST_CASE("demo kit matches the documented corpus shapes and is learnable") {
    ft::TempDir dir("demo_kit");
    demo::DemoKit kit = demo::generate(dir.path(), 42);

    Dataset amt = load_dataset(kit.fakenewsamt_root, "fakenewsamt-demo");
    CHECK(amt.size() == 480);
    CHECK(amt.count(Label::Fake) == 240);
    CHECK(amt.count(Label::Legitimate) == 240);
    CHECK(amt.domains().size() == 6);
    for (const auto& [domain, counts] : amt.class_counts) {
        CHECK(counts.first == 40);
        CHECK(counts.second == 40);
    }

    Dataset celeb = load_dataset(kit.celebrity_root, "celebrity-demo");
    CHECK(celeb.size() == 500);
    CHECK(celeb.domains() == std::set<Domain>{Domain::Celebrity});

    SUBCASE("domain filters carve the six-domain corpus as expected") {
        CHECK(filter_domain(amt, {Domain::Politics}, true).size() == 400);
        CHECK(filter_domain(amt, {Domain::Politics}, false).size() == 80);
    }

    SUBCASE("generation is deterministic") {
        ft::TempDir dir2("demo_kit2");
        demo::DemoKit kit2 = demo::generate(dir2.path(), 42);
        Dataset again = load_dataset(kit2.fakenewsamt_root, "fakenewsamt-demo");
        REQUIRE(again.size() == amt.size());
        for (std::size_t i = 0; i < amt.size(); ++i) {
            CHECK(again.articles[i].body == amt.articles[i].body);
        }
    }

    SUBCASE("config loads, validates and reaches dimension 337") {
        RunConfig cfg = load_run_config(kit.config);
        validate_paths(cfg, true);
        CHECK(cfg.features.dimension() == 337);
        CHECK(cfg.seed == 42);
        Resources res = load_resources(cfg);
        CHECK(res.embeddings.dim == 50);
        CHECK(res.embeddings.vectors.size() > 400);

        // the style signal separates the classes on grammar alerts
        double fake_alerts = 0, legit_alerts = 0;
        for (std::size_t i = 0; i < amt.size(); i += 7) {
            const Article& a = amt.articles[i];
            GrammarFeatureSet f = grammar_features(a, res.lists);
            (a.label == Label::Fake ? fake_alerts : legit_alerts) +=
                static_cast<double>(f.all_alerts);
        }
        CHECK(fake_alerts > legit_alerts * 2);

        // legitimate articles stay nearly alert-free (vocabulary consistent
        // with the generated dictionary)
        for (std::size_t i = 0; i < amt.size(); i += 11) {
            const Article& a = amt.articles[i];
            if (a.label == Label::Legitimate) {
                GrammarFeatureSet f = grammar_features(a, res.lists);
                CHECK(f.correctness_alerts <= 2);
            }
        }
    }
}
