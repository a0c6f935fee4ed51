#pragma once

#include <bit>
#include <cstdint>

namespace seqlab {

using Index = std::uint64_t;

constexpr bool is_power_of_two(Index x) { return x != 0 && (x & (x - 1)) == 0; }

/// log2 of a power of two.
constexpr int log2_exact(Index x) { return std::countr_zero(x); }

constexpr bool bit_of(Index x, int k) { return ((x >> k) & 1u) != 0; }

constexpr int parity(Index x) { return std::popcount(x) & 1; }

/// Reverses the lowest `n` bits of `x`; higher bits must be zero.
constexpr Index reverse_bits(Index x, int n) {
  Index r = 0;
  for (int k = 0; k < n; ++k) {
    r = (r << 1) | ((x >> k) & 1u);
  }
  return r;
}

constexpr Index binary_to_gray(Index x) { return x ^ (x >> 1); }

/// Inverse Gray code: bit k of the result is the XOR of bits >= k of `g`.
constexpr Index gray_to_binary(Index g) {
  for (int shift = 1; shift < 64; shift <<= 1) {
    g ^= g >> shift;
  }
  return g;
}

/// Bit-wise dot product modulo 2.
constexpr int dot_mod2(Index a, Index b) { return parity(a & b); }

}  // namespace seqlab
