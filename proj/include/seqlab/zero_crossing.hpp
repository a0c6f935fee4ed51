#pragma once

#include <Eigen/Core>

#include "seqlab/bits.hpp"

namespace seqlab {

/// n-bit string s = s_{n-1} ... s_0 with s_j at significance 2^j.
class BitString {
 public:
  static constexpr int kMaxBits = 62;

  BitString(int n, Index value);

  /// Inverse of prefix_xor(): s_k = g_{n-k} ^ g_{n-k-1} with g_n = 0.
  static BitString from_prefix_xor(int n, Index g);

  int n() const { return n_; }
  Index value() const { return value_; }
  bool bit(int j) const { return bit_of(value_, j); }

  /// s(m): the m least-significant bits.
  BitString truncated(int m) const;

  /// g with g_{n-1} = s_0 and g_k = s_0 ^ ... ^ s_{n-1-k}. Computed with
  /// word operations: the inverse Gray code of the bit-reversed string.
  Index prefix_xor() const { return gray_to_binary(reverse_bits(value_, n_)); }

  /// "101"-style rendering, most significant bit first.
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int n_;
  Index value_;
};

/// (F(0), ..., F(2^n - 1)) with F(k) = (-1)^{s.k}.
Eigen::VectorXi sequence_of(const BitString& s);

/// Adjacent sign changes of sequence_of(s), counted directly.
Index zero_crossings_direct(const BitString& s);

/// Closed form: the integer whose bits are the prefix XORs g_k.
Index zero_crossings_gray(const BitString& s);

/// Bottom-up recursion Z_m = 2 Z_{m-1} + (s_0 ^ ... ^ s_{m-1}), Z_1 = s_0.
Index zero_crossings_recursive(const BitString& s);

}  // namespace seqlab
