#pragma once

#include <Eigen/Core>

#include <cmath>
#include <string>

#include "seqlab/band.hpp"
#include "seqlab/bits.hpp"
#include "seqlab/errors.hpp"

// Classical Walsh-Hadamard machinery. All transforms here are orthonormal:
// the 1/sqrt(N) factor is applied inside, unlike most textbook FWHT codes.

namespace seqlab {

enum class WalshOrdering { natural, sequency };

inline std::string_view to_string(WalshOrdering o) {
  return o == WalshOrdering::natural ? "natural" : "sequency";
}

template <typename Scalar>
struct WalshSpectrum {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  WalshOrdering ordering = WalshOrdering::natural;
  Vector coefficients;

  Index size() const { return static_cast<Index>(coefficients.size()); }
};

/// Sequency-ordered Walsh function on [0, 1), evaluated by the two-scale
/// recursion. Support is taken half-open so that exactly one term of the
/// recursion is live at every x; W_k(x) = 0 outside [0, 1).
inline int walsh_function(Index k, double x) {
  if (!(x >= 0.0 && x < 1.0)) return 0;
  if (k == 0) return 1;
  const Index half = k >> 1;
  const int sign = (half & 1u) ? -1 : 1;
  const int lower = walsh_function(half, 2.0 * x);
  const int upper = walsh_function(half, 2.0 * x - 1.0);
  return (k & 1u) == 0 ? lower + sign * upper : lower - sign * upper;
}

/// Natural-order row index carrying sequency k: bit-reversed Gray code.
inline Index sequency_to_natural(Index k, int n) {
  if (n < 0 || n > 62 || k >= (Index{1} << n)) {
    throw Error(Errc::IndexOutOfRange, "sequency index " + std::to_string(k) + " for n=" + std::to_string(n));
  }
  return reverse_bits(binary_to_gray(k), n);
}

/// Inverse of sequency_to_natural: the sequency (sign-change count) of
/// natural-order row r.
inline Index natural_to_sequency(Index r, int n) {
  if (n < 0 || n > 62 || r >= (Index{1} << n)) {
    throw Error(Errc::IndexOutOfRange, "natural index " + std::to_string(r) + " for n=" + std::to_string(n));
  }
  return gray_to_binary(reverse_bits(r, n));
}

namespace detail {

inline int checked_order(Index len) {
  if (!is_power_of_two(len)) {
    throw Error(Errc::NotPowerOfTwo, "transform length " + std::to_string(len) + " is not a power of two");
  }
  return log2_exact(len);
}

}  // namespace detail

/// Orthonormal natural-order WHT, (1/sqrt(N)) H_N x, by the in-place
/// butterfly in O(N log N).
template <typename Derived>
WalshSpectrum<typename Derived::Scalar> fwht_natural(const Eigen::MatrixBase<Derived>& signal) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  static_assert(Derived::ColsAtCompileTime == 1 || Derived::RowsAtCompileTime == 1,
                "fwht_natural expects a vector expression");

  WalshSpectrum<Scalar> out;
  out.ordering = WalshOrdering::natural;
  out.coefficients = signal.derived();
  auto& v = out.coefficients;
  const auto len = static_cast<Index>(v.size());
  detail::checked_order(len);

  const auto N = static_cast<Eigen::Index>(len);
  for (Eigen::Index h = 1; h < N; h <<= 1) {
    for (Eigen::Index i = 0; i < N; i += 2 * h) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        const Scalar u = v[j];
        const Scalar w = v[j + h];
        v[j] = u + w;
        v[j + h] = u - w;
      }
    }
  }
  v *= Scalar(Real(1) / std::sqrt(Real(N)));
  return out;
}

/// Orthonormal sequency-order WHT: coefficient k is the natural-order
/// coefficient at sequency_to_natural(k).
template <typename Derived>
WalshSpectrum<typename Derived::Scalar> fwht_sequency(const Eigen::MatrixBase<Derived>& signal) {
  auto natural = fwht_natural(signal);
  const int n = detail::checked_order(natural.size());
  WalshSpectrum<typename Derived::Scalar> out;
  out.ordering = WalshOrdering::sequency;
  out.coefficients.resize(natural.coefficients.size());
  for (Index k = 0; k < natural.size(); ++k) {
    out.coefficients[static_cast<Eigen::Index>(k)] =
        natural.coefficients[static_cast<Eigen::Index>(sequency_to_natural(k, n))];
  }
  return out;
}

/// Sum of squared coefficient magnitudes over `band`, indices read in the
/// spectrum's own ordering.
template <typename Scalar>
typename Eigen::NumTraits<Scalar>::Real band_energy_classical(const WalshSpectrum<Scalar>& spectrum,
                                                               const SequencyBand& band) {
  band.validate(spectrum.size());
  return spectrum.coefficients.segment(static_cast<Eigen::Index>(band.a), static_cast<Eigen::Index>(band.width))
      .squaredNorm();
}

}  // namespace seqlab
