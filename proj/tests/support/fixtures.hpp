#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fakenews/corpus.hpp"
#include "fakenews/model.hpp"
#include "fakenews/pipeline.hpp"

namespace fakenews::testing {

// Self-deleting scratch directory.
class TempDir {
public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& content);

// A small in-memory corpus with a clean lexical class signal: fake articles
// use the alpha-group vocabulary plus "bad", legitimate ones the omega group
// plus "good". Domains alternate Technology/Business.
Dataset toy_dataset(const std::string& name, int per_class, const std::string& id_prefix = "");

// Matching in-memory resources: 4-dim embeddings with separated clusters for
// the two vocabulary groups, word lists and a tiny sentiment lexicon.
Resources toy_resources();

// Feature config scaled down to the toy vocabulary (small codebook and
// tfidf budget) so fits stay instant.
FeatureConfig toy_feature_config();

ForestParams toy_forest_params();

// Two separated 2-D Gaussian-ish blobs; fake at (0,0), legitimate at (8,8).
void make_blobs(std::size_t per_class, std::uint64_t seed, FeatureMatrix& X,
                std::vector<Label>& y);

}  // namespace fakenews::testing
