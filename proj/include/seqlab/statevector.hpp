#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <string_view>

#include "seqlab/bits.hpp"
#include "seqlab/gate.hpp"

namespace seqlab {

/// Dense statevector of `n_qubits` qubits. Basis index j stores bit j_k of
/// its binary expansion on qubit k (little-endian).
///
/// Public operations keep the amplitudes at unit norm.
class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(int n_qubits);

  /// Normalizes `amplitudes` (length 2^n, not all zero).
  static StateVector from_amplitudes(Eigen::VectorXcd amplitudes);

  static StateVector basis(int n_qubits, Index index);

  int n_qubits() const { return n_qubits_; }
  Index dim() const { return static_cast<Index>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> operator[](Index i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  /// Tensor product `*this ⊗ |0...0>` with `extra` zero qubits in the high
  /// positions.
  StateVector extended(int extra) const;

  void apply(const GateOp& gate);

 private:
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  int n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Normalized amplitude encoding of a real signal of length 2^n.
StateVector init_from_signal(const Eigen::VectorXd& signal);

/// Applies `gate` to `state` and returns the result.
StateVector apply_gate(StateVector state, const GateOp& gate);

/// Raw kernel on an amplitude vector of an `n_qubits` register. No norm
/// requirement, which makes it usable for linearity checks.
void apply_gate_inplace(Eigen::VectorXcd& amplitudes, int n_qubits, const GateOp& gate);

/// Throws QubitOutOfRange / DuplicateQubit when `gate` does not fit `n_qubits`.
void validate_gate(const GateOp& gate, int n_qubits);

/// Sum of |amplitude|^2 over basis indices accepted by `predicate`.
template <typename Predicate>
double probability_of(const StateVector& state, Predicate&& predicate) {
  double p = 0.0;
  const auto& amps = state.amplitudes();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (predicate(static_cast<Index>(i))) p += std::norm(amps[i]);
  }
  return p;
}

/// Identifier of the sampling algorithm, recorded in report metadata.
inline constexpr std::string_view kSamplerAlgorithm = "mt19937_64/inverse-cdf-53bit";

using Histogram = std::map<Index, std::uint64_t>;

/// `shots` i.i.d. computational-basis measurements. Deterministic for a
/// fixed seed.
Histogram sample_measurement(const StateVector& state, std::uint64_t shots, std::uint64_t rng_seed);

}  // namespace seqlab
