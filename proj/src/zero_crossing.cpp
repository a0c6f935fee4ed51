#include "seqlab/zero_crossing.hpp"

#include <cstdlib>
#include <string>

#include "seqlab/errors.hpp"

namespace seqlab {

BitString::BitString(int n, Index value) : n_(n), value_(value) {
  if (n < 1 || n > kMaxBits) throw Error(Errc::InvalidSize, "bit string length " + std::to_string(n));
  if (value >= (Index{1} << n)) {
    throw Error(Errc::IndexOutOfRange, std::to_string(value) + " does not fit in " + std::to_string(n) + " bits");
  }
}

BitString BitString::from_prefix_xor(int n, Index g) {
  // s = reverse(gray(g)); the shift supplies g_n = 0
  BitString probe(n, g);
  return BitString(n, reverse_bits(binary_to_gray(probe.value()), n));
}

BitString BitString::truncated(int m) const {
  if (m < 1 || m > n_) throw Error(Errc::InvalidSize, "truncation to " + std::to_string(m) + " bits");
  return BitString(m, value_ & ((Index{1} << m) - 1));
}

std::string BitString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int j = 0; j < n_; ++j) {
    if (bit(j)) out[static_cast<std::size_t>(n_ - 1 - j)] = '1';
  }
  return out;
}

Eigen::VectorXi sequence_of(const BitString& s) {
  if (s.n() > 30) throw Error(Errc::TooLarge, "sequence of 2^" + std::to_string(s.n()) + " entries");
  const auto len = Eigen::Index{1} << s.n();
  Eigen::VectorXi seq(len);
  for (Eigen::Index k = 0; k < len; ++k) {
    seq[k] = dot_mod2(s.value(), static_cast<Index>(k)) ? -1 : 1;
  }
  return seq;
}

Index zero_crossings_direct(const BitString& s) {
  const Eigen::VectorXi seq = sequence_of(s);
  Index twice = 0;
  for (Eigen::Index k = 0; k + 1 < seq.size(); ++k) {
    twice += static_cast<Index>(std::abs(seq[k + 1] - seq[k]));
  }
  return twice / 2;
}

Index zero_crossings_gray(const BitString& s) { return s.prefix_xor(); }

Index zero_crossings_recursive(const BitString& s) {
  Index z = s.bit(0) ? 1 : 0;
  int running_parity = s.bit(0) ? 1 : 0;
  for (int m = 2; m <= s.n(); ++m) {
    running_parity ^= s.bit(m - 1) ? 1 : 0;
    z = 2 * z + static_cast<Index>(running_parity);
  }
  return z;
}

}  // namespace seqlab
