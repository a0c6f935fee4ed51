#pragma once

#include <string>

#include "seqlab/bits.hpp"
#include "seqlab/errors.hpp"

namespace seqlab {

/// Half-open sequency interval [a, a + width).
struct SequencyBand {
  Index a = 0;
  Index width = 1;

  Index end() const { return a + width; }
  bool contains(Index k) const { return k >= a && k < end(); }

  /// Throws BandOutOfRange unless 0 <= a < a + width <= n_indices.
  void validate(Index n_indices) const {
    if (width < 1 || a >= n_indices || width > n_indices - a) {
      throw Error(Errc::BandOutOfRange, "band [" + std::to_string(a) + ", " + std::to_string(a + width) +
                                            ") outside [0, " + std::to_string(n_indices) + ")");
    }
  }

  friend bool operator==(const SequencyBand&, const SequencyBand&) = default;
};

}  // namespace seqlab
