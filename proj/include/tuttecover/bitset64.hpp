#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace tuttecover {

/// Subsets of a ground set with at most 64 elements, one bit per element.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;

inline constexpr Mask bit_at(std::size_t i) { return Mask{1} << i; }

inline constexpr bool has_bit(Mask m, std::size_t i) { return (m >> i) & Mask{1}; }

inline constexpr int popcount(Mask m) { return std::popcount(m); }

/// Mask with the lowest n bits set; n == 64 yields all ones.
inline constexpr Mask full_mask(std::size_t n) {
    return n >= kMaxGroundSize ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::vector<std::size_t> bits_of(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

/// Fast 64-bit mixer (splitmix64 finalizer); used for reproducible
/// seeded choices and for hashing encodings.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Removes bit position `i` and shifts all higher bits down by one.
inline constexpr Mask squeeze_bit(Mask m, std::size_t i) {
    const Mask low = m & (bit_at(i) - 1);
    const Mask high = (m >> 1) & ~(bit_at(i) - 1);
    return low | high;
}

/// All k-subsets of {0,...,n-1} in increasing numeric order (Gosper's hack).
inline std::vector<Mask> k_subsets(std::size_t n, std::size_t k) {
    std::vector<Mask> out;
    if (k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const Mask limit = full_mask(n);
    Mask v = full_mask(k);
    while (v <= limit) {
        out.push_back(v);
        if (n >= kMaxGroundSize && v == (limit & ~(full_mask(n - k)))) break;
        const Mask t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
        if (v == 0) break;
    }
    return out;
}

}  // namespace tuttecover
