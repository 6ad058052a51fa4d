#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fakenews/config.hpp"
#include "fakenews/errors.hpp"
#include "fakenews/eval.hpp"
#include "fakenews/pipeline.hpp"
#include "fakenews/prng.hpp"
#include "fakenews/text.hpp"

namespace fs = std::filesystem;
using namespace fakenews;

namespace {

// Collects artifacts under the output directory and records their digests in
// manifest.json at the end of a run.
class OutputDir {
public:
    explicit OutputDir(fs::path dir) : dir_(std::move(dir)) {
        if (dir_.empty()) throw BadConfig("an output directory is required (--out or out_dir)");
        fs::create_directories(dir_);
    }

    fs::path write(const std::string& name, const std::string& content) {
        fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw UnreadableFile("cannot write " + path.string());
        out << content;
        out.close();
        char digest[17];
        std::snprintf(digest, sizeof(digest), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(content)));
        artifacts_[name] = {content.size(), digest};
        return path;
    }

    void finish() {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& [name, info] : artifacts_) {
            list.push_back(
                {{"path", name}, {"bytes", info.first}, {"fnv1a64", info.second}});
        }
        nlohmann::json manifest = {{"artifacts", list}};
        std::ofstream out(dir_ / "manifest.json", std::ios::binary);
        out << manifest.dump(2) << "\n";
    }

private:
    fs::path dir_;
    std::map<std::string, std::pair<std::size_t, std::string>> artifacts_;
};

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    int jobs = 0;      // 0 = take from config
    long long seed = -1;  // <0 = take from config
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_config = true) {
    auto* opt = cmd->add_option("--config", args.config_path, "config file (JSON)");
    if (need_config) opt->required();
    cmd->add_option("--out", args.out_dir, "output directory (overrides config out_dir)");
    cmd->add_option("--jobs", args.jobs, "worker threads (never changes results)");
    cmd->add_option("--seed", args.seed, "seed override");
}

RunConfig make_config(const CommonArgs& args) {
    RunConfig cfg = load_run_config(args.config_path);
    if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
    if (args.jobs > 0) cfg.jobs = args.jobs;
    if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
    return cfg;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void print_report_summary(const ExperimentReport& report) {
    std::printf("%s: mean accuracy %.4f over %zu run(s)\n", report.protocol.c_str(),
                report.mean_accuracy, report.accuracies.size());
    for (std::size_t i = 0; i < report.run_labels.size(); ++i) {
        std::printf("  %-24s %.4f\n", report.run_labels[i].c_str(), report.accuracies[i]);
    }
    std::fprintf(stderr, "[%s] %.1fs, digest %s\n", report.protocol.c_str(),
                 report.wall_seconds, report.config_digest.c_str());
}

int cmd_validate(const CommonArgs& args) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    Dataset ds = load_configured_dataset(cfg.dataset);
    std::printf("dataset '%s': %zu articles, %zu fake / %zu legitimate, %zu domain(s)\n",
                ds.name.c_str(), ds.size(), ds.count(Label::Fake),
                ds.count(Label::Legitimate), ds.domains().size());
    if (cfg.secondary_dataset) {
        Dataset sec = load_configured_dataset(*cfg.secondary_dataset);
        std::printf("dataset '%s': %zu articles, %zu fake / %zu legitimate, %zu domain(s)\n",
                    sec.name.c_str(), sec.size(), sec.count(Label::Fake),
                    sec.count(Label::Legitimate), sec.domains().size());
    }
    std::printf("embeddings: %zu words x %zu dims\n", res.embeddings.vectors.size(),
                res.embeddings.dim);
    std::printf("feature dimension: %zu\n", cfg.features.dimension());
    std::printf("ok\n");
    return 0;
}

int cmd_featurize(const CommonArgs& args) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    Dataset ds = load_configured_dataset(cfg.dataset);
    FittedPipeline fitted =
        fit_pipeline(ds, cfg.features, cfg.forest, res, cfg.seed, cfg.jobs);
    std::vector<std::string> ids;
    FeatureMatrix X = featurize_dataset(ds, fitted.config, fitted.codebook,
                                        fitted.tfidf_vocab, res, cfg.jobs, nullptr, &ids);
    std::string csv = "id";
    for (const std::string& name : fitted.schema) csv += "," + name;
    csv += "\n";
    for (std::size_t r = 0; r < X.rows; ++r) {
        csv += ids[r];
        for (std::size_t c = 0; c < X.cols; ++c) csv += "," + format_value(X.at(r, c));
        csv += "\n";
    }
    OutputDir out(cfg.out_dir);
    out.write("features.csv", csv);
    nlohmann::json schema = {{"schema_version", "fakenews.feature_schema/1"},
                             {"columns", fitted.schema},
                             {"tfidf_ngrams", fitted.tfidf_vocab.ngrams},
                             {"features", feature_config_to_json(fitted.config)}};
    out.write("schema.json", schema.dump(2) + "\n");
    out.finish();
    std::printf("featurized %zu articles x %zu features\n", X.rows, X.cols);
    return 0;
}

int cmd_train(const CommonArgs& args) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    Dataset ds = load_configured_dataset(cfg.dataset);
    FittedPipeline fitted =
        fit_pipeline(ds, cfg.features, cfg.forest, res, cfg.seed, cfg.jobs);
    OutputDir out(cfg.out_dir);
    out.write("model.json", pipeline_to_json(fitted).dump(2) + "\n");
    out.finish();
    std::printf("trained on %zu articles; model dimension %zu\n", ds.size(),
                fitted.schema.size());
    return 0;
}

int cmd_evaluate(const CommonArgs& args, int folds_override) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    Dataset ds = load_configured_dataset(cfg.dataset);
    int k = folds_override > 0 ? folds_override : cfg.protocols.folds;
    ExperimentReport report =
        run_in_domain(ds, cfg.features, cfg.forest, res, k, cfg.seed, cfg.jobs);
    OutputDir out(cfg.out_dir);
    out.write("report.json", report_to_json(report).dump(2) + "\n");
    out.write("report.csv", report_to_csv(report));
    out.finish();
    print_report_summary(report);
    return 0;
}

int cmd_cross_domain(const CommonArgs& args, bool reverse) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg, /*need_secondary=*/true);
    Resources res = load_resources(cfg);
    Dataset primary = load_configured_dataset(cfg.dataset);
    Dataset secondary = load_configured_dataset(*cfg.secondary_dataset);
    const Dataset& train = reverse ? secondary : primary;
    const Dataset& test = reverse ? primary : secondary;
    ExperimentReport report =
        run_cross_domain(train, test, cfg.features, cfg.forest, res, cfg.seed, cfg.jobs);
    OutputDir out(cfg.out_dir);
    out.write("report.json", report_to_json(report).dump(2) + "\n");
    out.write("report.csv", report_to_csv(report));
    out.finish();
    print_report_summary(report);
    return 0;
}

int cmd_learning_curve(const CommonArgs& args) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    Dataset ds = load_configured_dataset(cfg.dataset);
    ExperimentReport report = run_learning_curve(ds, cfg.protocols.fractions, cfg.features,
                                                 cfg.forest, res, cfg.seed,
                                                 cfg.protocols.repeats, cfg.protocols.folds,
                                                 cfg.jobs);
    OutputDir out(cfg.out_dir);
    out.write("report.json", report_to_json(report).dump(2) + "\n");
    out.write("report.csv", report_to_csv(report));
    out.write("curve.svg", render_curve_svg(report));
    out.finish();
    print_report_summary(report);
    return 0;
}

int cmd_multi_domain(const CommonArgs& args) {
    RunConfig cfg = make_config(args);
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    Dataset ds = load_configured_dataset(cfg.dataset);
    std::vector<ExperimentReport> reports =
        run_multi_domain(ds, cfg.features, cfg.forest, res, cfg.seed, cfg.jobs);
    nlohmann::json all = nlohmann::json::array();
    std::string csv;
    for (const ExperimentReport& r : reports) {
        all.push_back(report_to_json(r));
        csv += report_to_csv(r);
        print_report_summary(r);
    }
    OutputDir out(cfg.out_dir);
    out.write("report.json", all.dump(2) + "\n");
    out.write("report.csv", csv);
    out.finish();
    return 0;
}

int cmd_predict(const CommonArgs& args, const std::string& text_file,
                const std::string& model_path) {
    RunConfig cfg = make_config(args);
    fs::path model = model_path.empty() ? cfg.resources.model : fs::path(model_path);
    if (model.empty()) {
        throw BadConfig("predict needs a model (--model or resources.model)");
    }
    if (!fs::is_regular_file(model)) {
        throw BadConfig("config key 'resources.model': file not found: " + model.string());
    }
    validate_paths(cfg);
    Resources res = load_resources(cfg);
    std::ifstream in(model);
    FittedPipeline fitted = pipeline_from_json(nlohmann::json::parse(in));

    std::ifstream text_in(text_file, std::ios::binary);
    if (!text_in) throw UnreadableFile("cannot open " + text_file);
    std::string body((std::istreambuf_iterator<char>(text_in)),
                     std::istreambuf_iterator<char>());
    Article article;
    article.id = fs::path(text_file).stem().string();
    article.body = text::normalize(body);
    if (text::trim(article.body).empty()) {
        throw EmptyText("empty text file: " + text_file);
    }
    auto [label, score] = predict_article(fitted, res, article);
    std::printf("%s %.4f\n", to_string(label).c_str(), score);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fake news detection pipeline: paraphrase, featurize, classify, evaluate"};
    app.require_subcommand(1);

    CommonArgs args;
    int folds_override = 0;
    bool reverse = false;
    std::string text_file, model_path;

    auto* validate = app.add_subcommand("validate", "check config and data, print dimensions");
    add_common(validate, args);
    auto* featurize = app.add_subcommand("featurize", "emit the feature matrix CSV");
    add_common(featurize, args);
    auto* train = app.add_subcommand("train", "fit the pipeline, emit model JSON");
    add_common(train, args);
    auto* evaluate = app.add_subcommand("evaluate", "in-domain k-fold cross-validation");
    add_common(evaluate, args);
    evaluate->add_option("--folds", folds_override, "fold count override");
    auto* cross = app.add_subcommand("cross-domain", "train on one dataset, test on the other");
    add_common(cross, args);
    cross->add_flag("--reverse", reverse, "train on secondary, test on primary");
    auto* curve = app.add_subcommand("learning-curve", "accuracy vs training fraction (+SVG)");
    add_common(curve, args);
    auto* multi = app.add_subcommand("multi-domain", "leave-one-domain-out evaluation");
    add_common(multi, args);
    auto* predict = app.add_subcommand("predict", "classify a single text file");
    add_common(predict, args);
    predict->add_option("file", text_file, "text file to classify")->required();
    predict->add_option("--model", model_path, "fitted pipeline JSON (from `train`)");
    auto* schema = app.add_subcommand("config-schema", "print the config file schema");

    CLI11_PARSE(app, argc, argv);

    try {
        if (schema->parsed()) {
            std::fputs(config_schema_text().c_str(), stdout);
            return 0;
        }
        if (validate->parsed()) return cmd_validate(args);
        if (featurize->parsed()) return cmd_featurize(args);
        if (train->parsed()) return cmd_train(args);
        if (evaluate->parsed()) return cmd_evaluate(args, folds_override);
        if (cross->parsed()) return cmd_cross_domain(args, reverse);
        if (curve->parsed()) return cmd_learning_curve(args);
        if (multi->parsed()) return cmd_multi_domain(args);
        if (predict->parsed()) return cmd_predict(args, text_file, model_path);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
