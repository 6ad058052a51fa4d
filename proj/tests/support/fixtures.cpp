#include "support/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <unistd.h>

#include "fakenews/prng.hpp"

namespace fs = std::filesystem;

namespace fakenews::testing {

namespace {
std::atomic<unsigned> g_tmp_counter{0};
}

TempDir::TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() /
            ("fakenews_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(g_tmp_counter.fetch_add(1)));
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

void write_text(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

namespace {

const std::vector<std::string> kAlphaWords = {"alpha", "beta", "gamma", "delta", "epsilon"};
const std::vector<std::string> kOmegaWords = {"omega", "sigma", "tau", "rho", "kappa"};

}  // namespace

Dataset toy_dataset(const std::string& name, int per_class, const std::string& id_prefix) {
    Dataset ds;
    ds.name = name;
    SplitMix64 rng(fnv1a64(name));
    for (int label = 0; label < 2; ++label) {
        const auto& pool = label == 0 ? kAlphaWords : kOmegaWords;
        const char* mood = label == 0 ? "bad" : "good";
        for (int i = 0; i < per_class; ++i) {
            Article a;
            char id[64];
            std::snprintf(id, sizeof(id), "%s%s/%02d", id_prefix.c_str(),
                          label == 0 ? "fake" : "legit", i);
            a.id = id;
            a.label = label == 0 ? Label::Fake : Label::Legitimate;
            a.domain = i % 2 == 0 ? Domain::Technology : Domain::Business;
            std::string body;
            for (int s = 0; s < 3; ++s) {
                body += "The " + pool[rng.below(pool.size())] + " and the " +
                        pool[rng.below(pool.size())] + " were " + mood + ". ";
            }
            a.body = body;
            ds.articles.push_back(std::move(a));
        }
    }
    std::sort(ds.articles.begin(), ds.articles.end(),
              [](const Article& x, const Article& y) { return x.id < y.id; });
    ds.recount();
    return ds;
}

Resources toy_resources() {
    Resources res;
    std::vector<std::string> all = kAlphaWords;
    all.insert(all.end(), kOmegaWords.begin(), kOmegaWords.end());
    for (const char* w : {"the", "and", "were", "good", "bad"}) all.push_back(w);
    for (const std::string& w : all) res.lists.dictionary.insert(w);
    res.lists.common = {"the", "and", "were", "good", "bad"};
    for (const std::string& w : res.lists.common) res.lists.common_set.insert(w);
    res.lists.stopwords = {"the", "and", "were"};
    res.sentiment["good"] = {0.7, 0.6};
    res.sentiment["bad"] = {-0.7, 0.67};

    res.embeddings.dim = 4;
    auto put = [&](const std::string& w, double cx, double cy) {
        SplitMix64 noise(fnv1a64(w));
        std::vector<double> v(4);
        v[0] = cx + noise.uniform01() * 0.4;
        v[1] = cy + noise.uniform01() * 0.4;
        v[2] = noise.uniform01() * 0.4;
        v[3] = noise.uniform01() * 0.4;
        res.embeddings.vectors[w] = v;
    };
    for (const std::string& w : kAlphaWords) put(w, 6.0, 0.0);
    for (const std::string& w : kOmegaWords) put(w, 0.0, 6.0);
    for (const char* w : {"the", "and", "were", "good", "bad"}) put(w, 3.0, 3.0);
    return res;
}

FeatureConfig toy_feature_config() {
    FeatureConfig config;
    config.glove_k = 3;
    config.tfidf_top_n = 12;
    config.spin.rate = 0.4;
    return config;
}

ForestParams toy_forest_params() {
    ForestParams params;
    params.n_trees = 15;
    return params;
}

void make_blobs(std::size_t per_class, std::uint64_t seed, FeatureMatrix& X,
                std::vector<Label>& y) {
    X = FeatureMatrix(per_class * 2, 2);
    y.assign(per_class * 2, Label::Fake);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < per_class * 2; ++i) {
        bool fake = i < per_class;
        double cx = fake ? 0.0 : 8.0;
        double cy = fake ? 0.0 : 8.0;
        X.at(i, 0) = cx + (rng.uniform01() * 2.0 - 1.0);
        X.at(i, 1) = cy + (rng.uniform01() * 2.0 - 1.0);
        y[i] = fake ? Label::Fake : Label::Legitimate;
    }
}

}  // namespace fakenews::testing
