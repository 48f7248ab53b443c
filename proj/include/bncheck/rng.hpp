#pragma once

#include <cmath>
#include <cstdint>

#include "bncheck/linalg.hpp"

namespace bncheck {

// splitmix64 step: advances the state by the golden-ratio increment and
// returns the mixed output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seed of the index-th substream of a master seed: the master state is
// advanced by (index + 1) golden-ratio increments, then mixed. The contract
// is that the result depends only on (master, index), so independently
// seeded streams can run in any order or thread.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master + index * 0x9e3779b97f4a7c15ull;
    return splitmix64(state);
}

// xoshiro256++ with portable floating-point helpers. <random> distributions
// are implementation-defined, so byte-level reproducibility requires rolling
// the few draws we need by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t st = seed;
        for (auto& word : state_) word = splitmix64(st);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller without caching; u1 is shifted into (0, 1] so log stays finite.
    double normal() {
        const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform direction on the unit sphere in R^p.
    Vec unit_vector(std::size_t p) {
        while (true) {
            Vec v(p);
            double s = 0.0;
            for (auto& x : v) {
                x = normal();
                s += x * x;
            }
            if (s > 1e-24) {
                const double inv = 1.0 / std::sqrt(s);
                for (auto& x : v) x *= inv;
                return v;
            }
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace bncheck
