#pragma once

#include <cstdint>
#include <cmath>

namespace pomdplite {

/// Deterministic pseudo-random source (xoshiro256++ seeded via splitmix64).
///
/// Results are reproducible across platforms for a given seed, unlike the
/// standard-library distributions whose output is implementation-defined.
/// Every sampling routine in the library takes one of these explicitly;
/// there is no hidden global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
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

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Requires n > 0.
    std::uint64_t uniform_int(std::uint64_t n) {
        // Debiased multiply-shift (Lemire).
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Independent child stream; derive(i) != derive(j) for i != j.
    Rng derive(std::uint64_t stream_id) const {
        std::uint64_t x = state_[0] ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        std::uint64_t y = state_[3] + stream_id;
        return Rng(splitmix64(x) ^ splitmix64(y));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

}  // namespace pomdplite
