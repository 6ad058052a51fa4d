#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace fakenews {

// Pretrained word vectors in the standard text format:
// `word v1 v2 ... vn`, one entry per line.
struct EmbeddingTable {
    std::size_t dim = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;
    std::size_t duplicate_count = 0;  // repeated words in the file (last wins)

    const std::vector<double>* find(const std::string& word) const {
        auto it = vectors.find(word);
        return it == vectors.end() ? nullptr : &it->second;
    }
};

// k cluster means over an embedding space; the quantizer behind the
// histogram feature.
struct Codebook {
    int k = 0;
    std::vector<std::vector<double>> codes;
    double inertia = 0;
    std::uint64_t seed = 0;
    // inertia after each Lloyd iteration, kept as a training diagnostic
    // (nonincreasing by construction; asserted in tests).
    std::vector<double> iteration_inertia;
};

EmbeddingTable load_embeddings(const std::filesystem::path& path, std::size_t expected_dim);

// Lloyd's algorithm over the vectors of vocab ∩ table.
//
// Initialization is greedy k-means++: the first center is drawn uniformly,
// each later center is chosen among a handful of D²-weighted candidate draws
// as the one minimizing total potential. All randomness comes from a
// SplitMix64 stream on `seed`. Iteration stops when the largest centroid
// shift drops below tol or after max_iter rounds. A cluster that empties is
// repaired by moving in the point farthest from its current centroid.
Codebook build_codebook(const EmbeddingTable& table, const std::set<std::string>& vocab,
                        int k, std::uint64_t seed, int max_iter = 300, double tol = 1e-4);

// Index of the nearest code by squared Euclidean distance, lowest index on
// ties.
std::size_t assign(const std::vector<double>& vector, const Codebook& codebook);

// k-bin histogram of the article's tokens over the codebook. Tokens without
// an embedding are skipped. With normalize, bins are divided by the number
// of embedded tokens (an all-zero histogram stays zero).
std::vector<double> glove_features(const std::string& body, const EmbeddingTable& table,
                                   const Codebook& codebook, bool normalize);

}  // namespace fakenews
