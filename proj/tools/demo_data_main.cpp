#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "demo_data.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate a deterministic demo corpus and resource kit"};
    std::string out_dir;
    std::uint64_t seed = 42;
    app.add_option("--out", out_dir, "output directory")->required();
    app.add_option("--seed", seed, "generator seed (default 42)");
    CLI11_PARSE(app, argc, argv);
    try {
        fakenews::demo::DemoKit kit = fakenews::demo::generate(out_dir, seed);
        std::printf("wrote demo kit under %s\n", out_dir.c_str());
        std::printf("config: %s\n", kit.config.string().c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
