#pragma once

#include <cstdint>
#include <cstddef>
#include <string_view>
#include <vector>

namespace fakenews {

// SplitMix64 (Steele, Lea & Flood 2014). Every random draw in the project
// goes through this generator so fold plans, spins, bootstraps and codebooks
// reproduce bit-for-bit on any platform; std::uniform_* distributions are
// not portable across standard libraries and are deliberately avoided.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

// FNV-1a 64-bit. Used for content-keyed seeds and artifact digests; not
// cryptographic.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 0xCBF29CE484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// Derives an independent child seed from (base, salt). Used to split the
// master seed by fold index, tree index, repeat index, etc.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    SplitMix64 g(base ^ (salt + 0x9E3779B97F4A7C15ULL) * 0xA24BAED4963EE407ULL);
    return g.next();
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(base, a), b);
}

}  // namespace fakenews
