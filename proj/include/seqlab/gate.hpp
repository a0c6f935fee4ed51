#pragma once

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace seqlab {

enum class GateKind { H, X, CNOT, SWAP, TOFFOLI, OPAQUE };

std::string_view to_string(GateKind kind);

/// In-place transformer over the full amplitude vector of a register.
using StateTransformer = std::function<void(Eigen::VectorXcd&)>;

/// Functionally simulated unitary. `forward` and `adjoint` must be exact
/// mutual inverses.
struct OpaqueUnitary {
  std::string label;
  StateTransformer forward;
  StateTransformer adjoint;
};

/// One gate of a circuit. Qubit order is significant: controls first, then
/// the target (CNOT, TOFFOLI). For OPAQUE, `qubits` lists the qubits the node
/// may touch and is informational only.
class GateOp {
 public:
  static GateOp h(int q);
  static GateOp x(int q);
  static GateOp cnot(int control, int target);
  static GateOp swap(int a, int b);
  static GateOp toffoli(int control0, int control1, int target);
  static GateOp opaque(std::string label, std::vector<int> qubits,
                       StateTransformer forward, StateTransformer adjoint);

  GateKind kind() const { return kind_; }
  const std::vector<int>& qubits() const { return qubits_; }
  const std::string& label() const;

  /// Inverse gate. Every non-opaque kind is self-inverse.
  GateOp inverse() const;

  void apply_opaque(Eigen::VectorXcd& amplitudes) const;

  friend bool operator==(const GateOp& a, const GateOp& b);

 private:
  GateOp(GateKind kind, std::vector<int> qubits);

  GateKind kind_;
  std::vector<int> qubits_;
  std::shared_ptr<const OpaqueUnitary> opaque_;
  bool adjointed_ = false;
};

}  // namespace seqlab
