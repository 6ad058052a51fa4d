#include "fakenews/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fakenews/errors.hpp"
#include "fakenews/prng.hpp"
#include "fakenews/text.hpp"

namespace fakenews {

EmbeddingTable load_embeddings(const std::filesystem::path& path, std::size_t expected_dim) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open embeddings file " + path.string());
    EmbeddingTable table;
    table.dim = expected_dim;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = text::trim(line);
        if (row.empty()) continue;
        std::istringstream ss{std::string(row)};
        std::string word;
        ss >> word;
        std::vector<double> vec;
        vec.reserve(expected_dim);
        double v;
        while (ss >> v) vec.push_back(v);
        if (!ss.eof()) {
            throw DimensionMismatch("embeddings line " + std::to_string(lineno) +
                                    ": non-numeric component");
        }
        if (vec.size() != expected_dim) {
            throw DimensionMismatch("embeddings line " + std::to_string(lineno) + ": got " +
                                    std::to_string(vec.size()) + " components, expected " +
                                    std::to_string(expected_dim));
        }
        for (double x : vec) {
            if (!std::isfinite(x)) {
                throw DimensionMismatch("embeddings line " + std::to_string(lineno) +
                                        ": non-finite component");
            }
        }
        auto it = table.vectors.find(word);
        if (it != table.vectors.end()) {
            it->second = std::move(vec);  // duplicate word: last entry wins
            ++table.duplicate_count;
        } else {
            table.vectors.emplace(std::move(word), std::move(vec));
        }
    }
    if (table.vectors.empty()) throw EmptyFile("no entries in " + path.string());
    return table;
}

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// Greedy k-means++ over `points`; returns the chosen point indices.
std::vector<std::size_t> kmeanspp_init(const std::vector<const std::vector<double>*>& points,
                                       int k, SplitMix64& rng) {
    const std::size_t n = points.size();
    std::vector<std::size_t> centers;
    centers.reserve(static_cast<std::size_t>(k));
    centers.push_back(static_cast<std::size_t>(rng.below(n)));

    std::vector<double> dist2(n);
    double potential = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dist2[i] = sq_dist(*points[i], *points[centers[0]]);
        potential += dist2[i];
    }

    const int candidates = 2 + static_cast<int>(std::floor(std::log2(std::max(2, k))));
    while (static_cast<int>(centers.size()) < k) {
        std::size_t best_idx = 0;
        double best_potential = std::numeric_limits<double>::infinity();
        for (int c = 0; c < candidates; ++c) {
            std::size_t pick;
            if (potential <= 0) {
                // all remaining mass is on existing centers (duplicates);
                // fall back to uniform over non-center points
                pick = static_cast<std::size_t>(rng.below(n));
            } else {
                double target = rng.uniform01() * potential;
                double acc = 0;
                pick = n - 1;
                for (std::size_t i = 0; i < n; ++i) {
                    acc += dist2[i];
                    if (acc >= target) {
                        pick = i;
                        break;
                    }
                }
            }
            double cand_potential = 0;
            for (std::size_t i = 0; i < n; ++i) {
                cand_potential += std::min(dist2[i], sq_dist(*points[i], *points[pick]));
            }
            if (cand_potential < best_potential) {
                best_potential = cand_potential;
                best_idx = pick;
            }
        }
        centers.push_back(best_idx);
        potential = 0;
        for (std::size_t i = 0; i < n; ++i) {
            dist2[i] = std::min(dist2[i], sq_dist(*points[i], *points[best_idx]));
            potential += dist2[i];
        }
    }
    return centers;
}

}  // namespace

Codebook build_codebook(const EmbeddingTable& table, const std::set<std::string>& vocab,
                        int k, std::uint64_t seed, int max_iter, double tol) {
    // std::set keeps the selected words ordered, so point indices (and with
    // them every random draw) are reproducible.
    std::vector<const std::vector<double>*> points;
    for (const std::string& w : vocab) {
        if (const auto* v = table.find(w)) points.push_back(v);
    }
    const std::size_t n = points.size();
    if (k < 1 || n < static_cast<std::size_t>(k)) {
        throw InsufficientVocabulary("codebook needs at least " + std::to_string(k) +
                                     " embedded words, have " + std::to_string(n));
    }
    const std::size_t dim = table.dim;

    SplitMix64 rng(seed);
    std::vector<std::size_t> init = kmeanspp_init(points, k, rng);

    Codebook cb;
    cb.k = k;
    cb.seed = seed;
    cb.codes.reserve(static_cast<std::size_t>(k));
    for (std::size_t idx : init) cb.codes.push_back(*points[idx]);

    std::vector<std::size_t> assignment(n, 0);
    for (int iter = 0; iter < max_iter; ++iter) {
        double inertia = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_c = 0;
            for (std::size_t c = 0; c < cb.codes.size(); ++c) {
                double d = sq_dist(*points[i], cb.codes[c]);
                if (d < best) {
                    best = d;
                    best_c = c;
                }
            }
            assignment[i] = best_c;
            inertia += best;
        }

        // empty-cluster repair: hand over the point farthest from its centroid
        std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
        for (std::size_t a : assignment) ++counts[a];
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] > 0) continue;
            double worst = -1;
            std::size_t worst_i = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[assignment[i]] <= 1) continue;
                double d = sq_dist(*points[i], cb.codes[assignment[i]]);
                if (d > worst) {
                    worst = d;
                    worst_i = i;
                }
            }
            --counts[assignment[worst_i]];
            assignment[worst_i] = c;
            counts[c] = 1;
        }

        std::vector<std::vector<double>> next(static_cast<std::size_t>(k),
                                              std::vector<double>(dim, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) next[assignment[i]][d] += (*points[i])[d];
        }
        double max_shift2 = 0;
        for (std::size_t c = 0; c < next.size(); ++c) {
            for (double& x : next[c]) x /= static_cast<double>(counts[c]);
            max_shift2 = std::max(max_shift2, sq_dist(next[c], cb.codes[c]));
        }
        cb.codes.swap(next);
        cb.iteration_inertia.push_back(inertia);
        if (std::sqrt(max_shift2) < tol) break;
    }

    // final inertia against the converged codes
    cb.inertia = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& code : cb.codes) best = std::min(best, sq_dist(*points[i], code));
        cb.inertia += best;
    }
    return cb;
}

std::size_t assign(const std::vector<double>& vector, const Codebook& codebook) {
    if (codebook.codes.empty()) throw UnfittedState("codebook has no codes");
    if (vector.size() != codebook.codes.front().size()) {
        throw DimensionMismatch("vector length " + std::to_string(vector.size()) +
                                " != codebook dimension " +
                                std::to_string(codebook.codes.front().size()));
    }
    std::size_t best_c = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < codebook.codes.size(); ++c) {
        double d = sq_dist(vector, codebook.codes[c]);
        if (d < best) {
            best = d;
            best_c = c;
        }
    }
    return best_c;
}

std::vector<double> glove_features(const std::string& body, const EmbeddingTable& table,
                                   const Codebook& codebook, bool normalize) {
    std::vector<double> hist(static_cast<std::size_t>(codebook.k), 0.0);
    double total = 0;
    for (const std::string& w : text::words_lower(body)) {
        const auto* vec = table.find(w);
        if (!vec) continue;
        hist[assign(*vec, codebook)] += 1.0;
        total += 1.0;
    }
    if (normalize && total > 0) {
        for (double& x : hist) x /= total;
    }
    return hist;
}

}  // namespace fakenews
