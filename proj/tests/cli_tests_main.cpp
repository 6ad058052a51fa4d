// End-to-end checks of the command-line tool: exit codes, validate output,
// train/predict flow, manifest digests. argv[1] is the fakenews binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "demo_data.hpp"
#include "support/fixtures.hpp"

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok: %s\n", what.c_str());
    } else {
        std::printf("FAILED: %s\n", what.c_str());
        ++g_failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout+stderr
};

RunResult run(const std::string& command) {
    RunResult r;
    std::string full = command + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <fakenews-binary>\n");
        return 2;
    }
    const std::string bin = std::string("'") + argv[1] + "'";
    fakenews::testing::TempDir dir("cli");
    fakenews::demo::DemoKit kit = fakenews::demo::generate(dir.path() / "kit", 42);

    // config-schema needs no config
    RunResult schema = run(bin + " config-schema");
    check(schema.exit_code == 0, "config-schema exits 0");
    check(schema.output.find("\"seed\"") != std::string::npos,
          "config-schema documents the seed key");

    // validate on the demo kit
    RunResult validate = run(bin + " validate --config " + q(kit.config));
    check(validate.exit_code == 0, "validate exits 0 on the demo kit");
    check(validate.output.find("feature dimension: 337") != std::string::npos,
          "validate prints dimension 337");
    check(validate.output.find("480 articles") != std::string::npos,
          "validate reports the 480-article corpus");

    // speed-trimmed config for train/predict
    nlohmann::json cfg = nlohmann::json::parse(slurp(kit.config), nullptr, true, true);
    cfg["dataset"] = {{"name", "celebrity-demo"}, {"root", kit.celebrity_root.string()}};
    cfg.erase("secondary_dataset");
    cfg["features"]["glove_k"] = 8;
    cfg["features"]["tfidf_top_n"] = 40;
    cfg["forest"]["n_trees"] = 12;
    std::filesystem::path small_cfg = dir.file("small.json");
    fakenews::testing::write_text(small_cfg, cfg.dump(2));

    // missing required key -> exit 2 naming it
    nlohmann::json broken = cfg;
    broken["resources"].erase("embeddings");
    fakenews::testing::write_text(dir.file("broken.json"), broken.dump(2));
    RunResult missing_key = run(bin + " validate --config " + q(dir.file("broken.json")));
    check(missing_key.exit_code == 2, "missing resources.embeddings exits 2");
    check(missing_key.output.find("resources.embeddings") != std::string::npos,
          "the offending key is named");

    // dangling path -> exit 2 naming the key
    nlohmann::json dangling = cfg;
    dangling["resources"]["embeddings"] = (dir.path() / "nope.txt").string();
    fakenews::testing::write_text(dir.file("dangling.json"), dangling.dump(2));
    RunResult missing_file = run(bin + " validate --config " + q(dir.file("dangling.json")));
    check(missing_file.exit_code == 2, "dangling embeddings path exits 2");

    // unparseable config -> exit 2
    fakenews::testing::write_text(dir.file("garbage.json"), "{not json");
    RunResult garbage = run(bin + " validate --config " + q(dir.file("garbage.json")));
    check(garbage.exit_code == 2, "unparseable config exits 2");

    // train -> model.json + manifest.json
    std::filesystem::path out1 = dir.path() / "train_out";
    RunResult train = run(bin + " train --config " + q(small_cfg) + " --out " + q(out1));
    check(train.exit_code == 0, "train exits 0");
    check(std::filesystem::is_regular_file(out1 / "model.json"), "train writes model.json");
    nlohmann::json manifest = nlohmann::json::parse(slurp(out1 / "manifest.json"));
    check(manifest.at("artifacts").size() == 1 &&
              manifest.at("artifacts")[0].at("path") == "model.json",
          "manifest lists the model artifact with a digest");

    // predict a fresh file against the trained model
    fakenews::testing::write_text(dir.file("story.txt"),
                                  "You will not believe the SHOCKING secret wedding that "
                                  "occured!! More at www.celebritynews.com right now, it "
                                  "was really bad stuff.\n");
    RunResult predict =
        run(bin + " predict --config " + q(small_cfg) + " --model " +
            q(out1 / "model.json") + " " + q(dir.file("story.txt")));
    check(predict.exit_code == 0, "predict exits 0");
    check(predict.output.find("fake") == 0 || predict.output.find("legitimate") == 0,
          "predict prints `label score`");

    // empty input file -> data error (exit 3)
    fakenews::testing::write_text(dir.file("empty.txt"), "   \n");
    RunResult empty = run(bin + " predict --config " + q(small_cfg) + " --model " +
                          q(out1 / "model.json") + " " + q(dir.file("empty.txt")));
    check(empty.exit_code == 3, "predict on an empty file exits 3");
    check(empty.output.find("empty") != std::string::npos, "the message mentions emptiness");

    // featurize: row count = dataset size, columns = schema + id
    std::filesystem::path feat_out = dir.path() / "feat_out";
    RunResult feat = run(bin + " featurize --config " + q(small_cfg) + " --out " + q(feat_out));
    check(feat.exit_code == 0, "featurize exits 0");
    {
        std::ifstream in(feat_out / "features.csv");
        std::string line;
        std::size_t rows = 0, header_cols = 0;
        if (std::getline(in, line)) {
            header_cols = 1 + static_cast<std::size_t>(
                                  std::count(line.begin(), line.end(), ','));
        }
        while (std::getline(in, line)) {
            if (!line.empty()) ++rows;
        }
        std::size_t dim = 8 + 14 + 19 + 40 + 4;  // small config budgets
        check(header_cols == dim + 1, "features.csv has schema+id columns");
        check(rows == 500, "features.csv has one row per article");
        check(std::filesystem::is_regular_file(feat_out / "schema.json"),
              "schema sidecar written");
    }

    // the worker-count flag must not change any output artifact
    std::filesystem::path jobs1 = dir.path() / "jobs1";
    std::filesystem::path jobs4 = dir.path() / "jobs4";
    RunResult e1 = run(bin + " evaluate --config " + q(small_cfg) + " --folds 2 --jobs 1 --out " +
                       q(jobs1));
    RunResult e4 = run(bin + " evaluate --config " + q(small_cfg) + " --folds 2 --jobs 4 --out " +
                       q(jobs4));
    check(e1.exit_code == 0 && e4.exit_code == 0, "evaluate runs exit 0");
    check(slurp(jobs1 / "report.json") == slurp(jobs4 / "report.json") &&
              !slurp(jobs1 / "report.json").empty(),
          "evaluate output identical for --jobs 1 and --jobs 4");

    // missing subcommand -> usage error
    RunResult bare = run(bin);
    check(bare.exit_code != 0, "bare invocation fails");

    if (g_failures > 0) {
        std::printf("%d CLI check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
