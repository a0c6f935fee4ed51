#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

#include "seqlab/gate.hpp"
#include "seqlab/statevector.hpp"

namespace seqlab {

/// Ordered gate list over a fixed number of qubits.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  std::size_t size() const { return ops_.size(); }

  Circuit& append(GateOp op);
  /// Appends every op of `other`; `other` may act on fewer qubits.
  Circuit& append(const Circuit& other);

 private:
  int n_qubits_;
  std::vector<GateOp> ops_;
};

/// Qubit roles of the band-detection register: data 0..n-1, then flag,
/// temp1, temp2, and n-1 comparator carries.
struct RegisterLayout {
  int n_data = 0;

  static RegisterLayout for_data(int n_data);

  int data(int k) const { return k; }
  int flag() const { return n_data; }
  int temp1() const { return n_data + 1; }
  int temp2() const { return n_data + 2; }
  int carry(int k) const { return n_data + 3 + k; }
  int n_carries() const { return n_data - 1; }
  int total_qubits() const { return 2 * n_data + 2; }

  Index data_mask() const { return (Index{1} << n_data) - 1; }
  /// Mask selecting temp1, temp2 and every carry.
  Index ancilla_mask() const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

struct GateCensus {
  std::size_t h = 0;
  std::size_t x = 0;
  std::size_t cnot = 0;
  std::size_t swap = 0;
  std::size_t toffoli = 0;
  std::size_t opaque = 0;

  std::size_t total() const { return h + x + cnot + swap + toffoli + opaque; }
  friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

/// Reverses the op order and inverts each op.
Circuit adjoint(const Circuit& circuit);

GateCensus gate_census(const Circuit& circuit);

inline constexpr int kMaxUnitaryQubits = 10;

/// Dense unitary; column j is the circuit applied to |j>. Limited to
/// kMaxUnitaryQubits and circuits without OPAQUE nodes.
Eigen::MatrixXcd unitary_matrix(const Circuit& circuit);

void apply_inplace(const Circuit& circuit, Eigen::VectorXcd& amplitudes);

StateVector apply(const Circuit& circuit, StateVector state);

/// Debug listing, one op per line: `KIND q0 q1 ...` (OPAQUE adds its label).
std::string dump(const Circuit& circuit);

}  // namespace seqlab
