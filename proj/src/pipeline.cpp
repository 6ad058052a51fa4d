#include "fakenews/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "fakenews/errors.hpp"
#include "fakenews/text.hpp"

namespace fakenews {

namespace {

// salts for deriving per-component streams from the pipeline seed
constexpr std::uint64_t kSpinSalt = 0x5350494E;      // "SPIN"
constexpr std::uint64_t kCodebookSalt = 0x434F4445;  // "CODE"
constexpr std::uint64_t kForestSalt = 0x464F5245;    // "FORE"

int scope_multiplier(const FamilySettings& f) {
    if (!f.enabled) return 0;
    return f.scope == Scope::Both ? 2 : 1;
}

bool wants_original(const FamilySettings& f) {
    return f.enabled && f.scope != Scope::ParaphrasedOnly;
}

bool wants_paraphrased(const FamilySettings& f) {
    return f.enabled && f.scope != Scope::OriginalOnly;
}

void parallel_rows(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
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

std::string to_string(Scope s) {
    switch (s) {
        case Scope::OriginalOnly: return "original_only";
        case Scope::ParaphrasedOnly: return "paraphrased_only";
        case Scope::Both: return "both";
    }
    return "?";
}

Scope parse_scope(const std::string& s) {
    if (s == "original_only") return Scope::OriginalOnly;
    if (s == "paraphrased_only") return Scope::ParaphrasedOnly;
    if (s == "both") return Scope::Both;
    throw BadConfig("unknown scope: " + s + " (expected original_only|paraphrased_only|both)");
}

std::size_t FeatureConfig::dimension() const {
    if (!glove.enabled && !basic.enabled && !grammar.enabled && !tfidf.enabled &&
        !emotion.enabled) {
        throw BadConfig("no feature family enabled");
    }
    if (glove.enabled && glove_k < 1) throw BadConfig("glove_k must be >= 1");
    if (tfidf.enabled && tfidf_top_n < 1) throw BadConfig("tfidf_top_n must be >= 1");
    return static_cast<std::size_t>(glove_k) * scope_multiplier(glove) +
           7u * scope_multiplier(basic) + 19u * scope_multiplier(grammar) +
           static_cast<std::size_t>(tfidf_top_n) * scope_multiplier(tfidf) +
           2u * scope_multiplier(emotion);
}

namespace {

nlohmann::json family_to_json(const FamilySettings& f) {
    return {{"enabled", f.enabled}, {"scope", to_string(f.scope)}};
}

FamilySettings family_from_json(const nlohmann::json& j, const FamilySettings& defaults) {
    FamilySettings f = defaults;
    if (j.contains("enabled")) f.enabled = j.at("enabled").get<bool>();
    if (j.contains("scope")) f.scope = parse_scope(j.at("scope").get<std::string>());
    return f;
}

}  // namespace

nlohmann::json feature_config_to_json(const FeatureConfig& c) {
    return {{"glove", family_to_json(c.glove)},
            {"basic", family_to_json(c.basic)},
            {"grammar", family_to_json(c.grammar)},
            {"tfidf", family_to_json(c.tfidf)},
            {"emotion", family_to_json(c.emotion)},
            {"glove_k", c.glove_k},
            {"glove_normalize", c.glove_normalize},
            {"tfidf_top_n", c.tfidf_top_n},
            {"spin",
             {{"rate", c.spin.rate},
              {"seed", c.spin.seed},
              {"max_chunk_chars", c.spin.max_chunk_chars}}}};
}

FeatureConfig feature_config_from_json(const nlohmann::json& j) {
    FeatureConfig c;
    if (j.contains("glove")) c.glove = family_from_json(j.at("glove"), c.glove);
    if (j.contains("basic")) c.basic = family_from_json(j.at("basic"), c.basic);
    if (j.contains("grammar")) c.grammar = family_from_json(j.at("grammar"), c.grammar);
    if (j.contains("tfidf")) c.tfidf = family_from_json(j.at("tfidf"), c.tfidf);
    if (j.contains("emotion")) c.emotion = family_from_json(j.at("emotion"), c.emotion);
    if (j.contains("glove_k")) c.glove_k = j.at("glove_k").get<int>();
    if (j.contains("glove_normalize")) c.glove_normalize = j.at("glove_normalize").get<bool>();
    if (j.contains("tfidf_top_n")) c.tfidf_top_n = j.at("tfidf_top_n").get<int>();
    if (j.contains("spin")) {
        const auto& s = j.at("spin");
        if (s.contains("rate")) c.spin.rate = s.at("rate").get<double>();
        if (s.contains("seed")) c.spin.seed = s.at("seed").get<std::uint64_t>();
        if (s.contains("max_chunk_chars")) {
            c.spin.max_chunk_chars = s.at("max_chunk_chars").get<std::size_t>();
        }
        if (c.spin.rate < 0.0 || c.spin.rate > 1.0) {
            throw BadConfig("spin.rate must lie in [0,1]");
        }
        if (c.spin.max_chunk_chars < 1) throw BadConfig("spin.max_chunk_chars must be >= 1");
    }
    return c;
}

std::vector<std::string> feature_schema(const FeatureConfig& config) {
    std::vector<std::string> names;
    names.reserve(config.dimension());
    auto add_block = [&names](const FamilySettings& f, const std::string& family,
                              const std::vector<std::string>& fields) {
        for (const char* variant : {"o", "p"}) {
            if ((variant[0] == 'o' && !wants_original(f)) ||
                (variant[0] == 'p' && !wants_paraphrased(f))) {
                continue;
            }
            for (const std::string& field : fields) {
                names.push_back(family + "_" + variant + "_" + field);
            }
        }
    };
    std::vector<std::string> glove_fields;
    for (int i = 0; i < config.glove_k; ++i) glove_fields.push_back(std::to_string(i));
    add_block(config.glove, "glove", glove_fields);
    add_block(config.basic, "basic",
              {BasicFeatures::field_names().begin(), BasicFeatures::field_names().end()});
    add_block(config.grammar, "grammar",
              {GrammarFeatureSet::field_names().begin(),
               GrammarFeatureSet::field_names().end()});
    std::vector<std::string> tfidf_fields;
    for (int i = 0; i < config.tfidf_top_n; ++i) tfidf_fields.push_back(std::to_string(i));
    add_block(config.tfidf, "tfidf", tfidf_fields);
    add_block(config.emotion, "emotion", {"polarity", "subjectivity"});
    return names;
}

namespace {

void append_tfidf(std::vector<double>& out, const std::string& body, const TfidfVocab& vocab,
                  int top_n) {
    std::vector<double> v = tfidf_features(body, vocab);
    v.resize(static_cast<std::size_t>(top_n), 0.0);  // zero-pad up to the budget
    out.insert(out.end(), v.begin(), v.end());
}

void append_grammar(std::vector<double>& out, const Article& a, const Resources& res) {
    if (a.variant == Variant::Original) {
        auto it = res.grammar_overrides.find(a.id);
        if (it != res.grammar_overrides.end()) {
            const auto v = it->second.to_vector();
            out.insert(out.end(), v.begin(), v.end());
            return;
        }
    }
    const auto v = grammar_features(a, res.lists,
                                    res.reference_corpus ? &*res.reference_corpus : nullptr)
                       .to_vector();
    out.insert(out.end(), v.begin(), v.end());
}

}  // namespace

std::vector<double> featurize(const Article& original, const Article& paraphrased,
                              const FeatureConfig& config, const Codebook& codebook,
                              const TfidfVocab& tfidf_vocab, const Resources& res) {
    if (original.variant != Variant::Original || paraphrased.variant != Variant::Paraphrased ||
        original.id != paraphrased.id) {
        throw VariantMismatch("featurize needs the (original, paraphrased) pair of one id; got " +
                              original.id + "/" + to_string(original.variant) + " and " +
                              paraphrased.id + "/" + to_string(paraphrased.variant));
    }
    if (config.glove.enabled && codebook.codes.empty()) {
        throw UnfittedState("glove features requested but the codebook is not fitted");
    }
    if (config.tfidf.enabled && tfidf_vocab.n_docs == 0) {
        throw UnfittedState("tfidf features requested but the vocabulary is not fitted");
    }

    std::vector<double> out;
    out.reserve(config.dimension());
    auto for_variants = [&](const FamilySettings& f, auto&& emit) {
        if (wants_original(f)) emit(original);
        if (wants_paraphrased(f)) emit(paraphrased);
    };

    for_variants(config.glove, [&](const Article& a) {
        std::vector<double> v =
            glove_features(a.body, res.embeddings, codebook, config.glove_normalize);
        out.insert(out.end(), v.begin(), v.end());
    });
    for_variants(config.basic, [&](const Article& a) {
        const auto v = basic_features(a.body, res.lists.stopwords).to_vector();
        out.insert(out.end(), v.begin(), v.end());
    });
    for_variants(config.grammar, [&](const Article& a) { append_grammar(out, a, res); });
    for_variants(config.tfidf, [&](const Article& a) {
        append_tfidf(out, a.body, tfidf_vocab, config.tfidf_top_n);
    });
    for_variants(config.emotion, [&](const Article& a) {
        EmotionFeatures e = emotion_features(a.body, res.sentiment);
        out.push_back(e.polarity);
        out.push_back(e.subjectivity);
    });

    if (out.size() != config.dimension()) {
        throw InternalError("feature vector length " + std::to_string(out.size()) +
                            " violates the dimension law " +
                            std::to_string(config.dimension()));
    }
    return out;
}

FeatureMatrix featurize_dataset(const Dataset& dataset, const FeatureConfig& config,
                                const Codebook& codebook, const TfidfVocab& tfidf_vocab,
                                const Resources& res, int jobs,
                                std::vector<Label>* labels_out,
                                std::vector<std::string>* ids_out) {
    FeatureMatrix X(dataset.size(), config.dimension());
    if (labels_out) labels_out->resize(dataset.size());
    if (ids_out) ids_out->resize(dataset.size());
    parallel_rows(dataset.size(), jobs, [&](std::size_t i) {
        const Article& original = dataset.articles[i];
        Article paraphrased = spin(original, res.synonyms, config.spin);
        std::vector<double> row =
            featurize(original, paraphrased, config, codebook, tfidf_vocab, res);
        std::copy(row.begin(), row.end(), X.data.begin() + i * X.cols);
        if (labels_out) (*labels_out)[i] = original.label;
        if (ids_out) (*ids_out)[i] = original.id;
    });
    return X;
}

FittedPipeline fit_pipeline(const Dataset& train, const FeatureConfig& config,
                            const ForestParams& forest_params, const Resources& res,
                            std::uint64_t seed, int jobs) {
    if (train.articles.empty()) throw EmptyTrainingSet("pipeline fit on an empty dataset");
    std::size_t fake = train.count(Label::Fake);
    if (fake == 0 || fake == train.size()) {
        throw DegenerateLabels("training dataset '" + train.name + "' has a single class");
    }

    FittedPipeline p;
    p.seed = seed;
    p.config = config;
    p.config.spin.seed = derive_seed(seed, kSpinSalt);
    p.schema = feature_schema(p.config);

    if (config.glove.enabled) {
        std::set<std::string> vocab;
        for (const Article& a : train.articles) {
            for (std::string& w : text::words_lower(a.body)) vocab.insert(std::move(w));
        }
        p.codebook = build_codebook(res.embeddings, vocab, config.glove_k,
                                    derive_seed(seed, kCodebookSalt));
    }
    if (config.tfidf.enabled) {
        std::vector<std::string> bodies;
        bodies.reserve(train.size());
        for (const Article& a : train.articles) bodies.push_back(a.body);
        p.tfidf_vocab = fit_tfidf_vocab(bodies, config.tfidf_top_n);
    }

    std::vector<Label> labels;
    FeatureMatrix X = featurize_dataset(train, p.config, p.codebook, p.tfidf_vocab, res, jobs,
                                        &labels, &p.fit_ids);

    ForestParams fp = forest_params;
    fp.seed = derive_seed(seed, kForestSalt);
    ForestModel forest = train_forest(X, labels, fp, jobs);
    forest.feature_schema = p.schema;
    p.forest = std::move(forest);
    return p;
}

std::pair<Label, double> predict_article(const FittedPipeline& pipeline, const Resources& res,
                                         const Article& original) {
    if (!pipeline.fitted()) throw UnfittedState("pipeline has not been fitted");
    if (text::trim(original.body).empty()) {
        throw EmptyText("empty body for article " + original.id);
    }
    Article paraphrased = spin(original, res.synonyms, pipeline.config.spin);
    std::vector<double> x = featurize(original, paraphrased, pipeline.config,
                                      pipeline.codebook, pipeline.tfidf_vocab, res);
    return predict(pipeline.forest, x);
}

nlohmann::json pipeline_to_json(const FittedPipeline& p) {
    return {{"schema_version", "fakenews.pipeline/1"},
            {"seed", p.seed},
            {"config", feature_config_to_json(p.config)},
            {"codebook",
             {{"k", p.codebook.k},
              {"seed", p.codebook.seed},
              {"inertia", p.codebook.inertia},
              {"codes", p.codebook.codes}}},
            {"tfidf",
             {{"ngrams", p.tfidf_vocab.ngrams},
              {"doc_freq", p.tfidf_vocab.doc_freq},
              {"n_docs", p.tfidf_vocab.n_docs}}},
            {"forest", forest_to_json(p.forest)},
            {"schema", p.schema},
            {"fit_ids", p.fit_ids}};
}

FittedPipeline pipeline_from_json(const nlohmann::json& j) {
    if (j.value("schema_version", "") != "fakenews.pipeline/1") {
        throw SchemaMismatch("unsupported pipeline schema version");
    }
    FittedPipeline p;
    p.seed = j.at("seed").get<std::uint64_t>();
    p.config = feature_config_from_json(j.at("config"));
    const auto& cb = j.at("codebook");
    p.codebook.k = cb.at("k").get<int>();
    p.codebook.seed = cb.at("seed").get<std::uint64_t>();
    p.codebook.inertia = cb.at("inertia").get<double>();
    p.codebook.codes = cb.at("codes").get<std::vector<std::vector<double>>>();
    const auto& tf = j.at("tfidf");
    p.tfidf_vocab.ngrams = tf.at("ngrams").get<std::vector<std::string>>();
    p.tfidf_vocab.doc_freq = tf.at("doc_freq").get<std::vector<std::int64_t>>();
    p.tfidf_vocab.n_docs = tf.at("n_docs").get<std::int64_t>();
    for (std::size_t i = 0; i < p.tfidf_vocab.ngrams.size(); ++i) {
        p.tfidf_vocab.index.emplace(p.tfidf_vocab.ngrams[i], i);
    }
    p.forest = forest_from_json(j.at("forest"));
    p.schema = j.at("schema").get<std::vector<std::string>>();
    p.fit_ids = j.at("fit_ids").get<std::vector<std::string>>();
    if (p.schema.size() != p.forest.n_features) {
        throw SchemaMismatch("pipeline schema length does not match forest dimensionality");
    }
    return p;
}

}  // namespace fakenews
