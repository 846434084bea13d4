#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <boost/container/small_vector.hpp>

namespace pomdplite {

/// Bit-packed value used for observable states and hidden-parameter values.
///
/// Domains define their own packing; the rest of the library only needs
/// equality, hashing and cheap copies. Four inline words cover every
/// built-in domain up to Battleship(10,5) without heap traffic.
using Bits = boost::container::small_vector<std::uint64_t, 4>;

inline Bits bits_of(std::uint64_t word) { return Bits{word}; }

inline std::uint64_t hash_bits(const Bits& b) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (b.size() * 0xff51afd7ed558ccdULL);
    for (std::uint64_t w : b) {
        w *= 0xff51afd7ed558ccdULL;
        w ^= w >> 33;
        w *= 0xc4ceb9fe1a85ec53ULL;
        h ^= w;
        h *= 0x2545f4914f6cdd1dULL;
    }
    return h ^ (h >> 29);
}

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return hash_bits(b); }
};

inline bool get_bit(const Bits& b, std::size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(Bits& b, std::size_t i, bool v) {
    if (v)
        b[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else
        b[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline int popcount(const Bits& b) {
    int n = 0;
    for (std::uint64_t w : b) n += std::popcount(w);
    return n;
}

}  // namespace pomdplite
