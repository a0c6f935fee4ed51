#include "seqlab/gate.hpp"

#include <algorithm>
#include <utility>

#include "seqlab/errors.hpp"

namespace seqlab {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::TOFFOLI: return "TOFFOLI";
    case GateKind::OPAQUE: return "OPAQUE";
  }
  return "?";
}

GateOp::GateOp(GateKind kind, std::vector<int> qubits) : kind_(kind), qubits_(std::move(qubits)) {
  for (int q : qubits_) {
    if (q < 0) throw Error(Errc::QubitOutOfRange, "negative qubit index");
  }
  auto sorted = qubits_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::DuplicateQubit, std::string(to_string(kind)) + " with repeated qubit");
  }
}

GateOp GateOp::h(int q) { return GateOp(GateKind::H, {q}); }
GateOp GateOp::x(int q) { return GateOp(GateKind::X, {q}); }
GateOp GateOp::cnot(int control, int target) { return GateOp(GateKind::CNOT, {control, target}); }
GateOp GateOp::swap(int a, int b) { return GateOp(GateKind::SWAP, {a, b}); }

GateOp GateOp::toffoli(int control0, int control1, int target) {
  return GateOp(GateKind::TOFFOLI, {control0, control1, target});
}

GateOp GateOp::opaque(std::string label, std::vector<int> qubits, StateTransformer forward,
                      StateTransformer adjoint) {
  GateOp op(GateKind::OPAQUE, std::move(qubits));
  op.opaque_ = std::make_shared<const OpaqueUnitary>(
      OpaqueUnitary{std::move(label), std::move(forward), std::move(adjoint)});
  return op;
}

const std::string& GateOp::label() const {
  static const std::string empty;
  return opaque_ ? opaque_->label : empty;
}

GateOp GateOp::inverse() const {
  GateOp inv = *this;
  if (kind_ == GateKind::OPAQUE) inv.adjointed_ = !adjointed_;
  return inv;
}

void GateOp::apply_opaque(Eigen::VectorXcd& amplitudes) const {
  if (!opaque_) return;
  if (adjointed_) {
    opaque_->adjoint(amplitudes);
  } else {
    opaque_->forward(amplitudes);
  }
}

bool operator==(const GateOp& a, const GateOp& b) {
  return a.kind_ == b.kind_ && a.qubits_ == b.qubits_ && a.opaque_ == b.opaque_ &&
         a.adjointed_ == b.adjointed_;
}

}  // namespace seqlab
