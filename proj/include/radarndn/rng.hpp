#pragma once

#include <cstdint>
#include <string_view>

namespace radarndn {

/// SplitMix64 generator (Steele, Lea, Flood 2014 update function). Chosen over
/// std engines because its output and the u64->double conversion below are fully
/// pinned, so seeded runs are bit-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits of one draw.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool bernoulli(double p) { return next_double() < p; }

    /// Independent sub-stream derived from this stream's seed and a label.
    /// Splitting does not advance this generator.
    Rng split(std::uint64_t label) const {
        Rng child(state_ ^ mix(label));
        return child;
    }

    Rng split(std::string_view label) const { return split(fnv1a(label)); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z + 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t state_;
};

}  // namespace radarndn
