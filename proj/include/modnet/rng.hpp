#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace modnet {

// Deterministic random source used by every randomized routine in the library.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the C++
// standard, so identical seeds give identical streams on every platform. The
// std::*_distribution adaptors are *not* pinned by the standard, so all
// mappings from raw 64-bit words to bounded ints / doubles are implemented
// here explicitly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n). Unbiased via rejection sampling.
    std::uint64_t uniform_below(std::uint64_t n) {
        // 2^64 mod n; words below this threshold are rejected so that the
        // accepted range is an exact multiple of n.
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_double() < p; }

    // Fisher-Yates shuffle (deterministic given the seed).
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace modnet
