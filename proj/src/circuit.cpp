#include "seqlab/circuit.hpp"

#include <sstream>
#include <utility>

#include "seqlab/errors.hpp"

namespace seqlab {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw Error(Errc::InvalidSize, "circuit needs at least one qubit");
}

Circuit& Circuit::append(GateOp op) {
  validate_gate(op, n_qubits_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() > n_qubits_) {
    throw Error(Errc::QubitOutOfRange, "appending a " + std::to_string(other.n_qubits()) +
                                           "-qubit circuit to a " + std::to_string(n_qubits_) +
                                           "-qubit circuit");
  }
  ops_.insert(ops_.end(), other.ops().begin(), other.ops().end());
  return *this;
}

RegisterLayout RegisterLayout::for_data(int n_data) {
  if (n_data < 1) throw Error(Errc::InvalidSize, "data register needs at least one qubit");
  return RegisterLayout{n_data};
}

Index RegisterLayout::ancilla_mask() const {
  Index mask = (Index{1} << temp1()) | (Index{1} << temp2());
  for (int k = 0; k < n_carries(); ++k) mask |= Index{1} << carry(k);
  return mask;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  const auto& ops = circuit.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.append(it->inverse());
  return out;
}

GateCensus gate_census(const Circuit& circuit) {
  GateCensus c;
  for (const auto& op : circuit.ops()) {
    switch (op.kind()) {
      case GateKind::H: ++c.h; break;
      case GateKind::X: ++c.x; break;
      case GateKind::CNOT: ++c.cnot; break;
      case GateKind::SWAP: ++c.swap; break;
      case GateKind::TOFFOLI: ++c.toffoli; break;
      case GateKind::OPAQUE: ++c.opaque; break;
    }
  }
  return c;
}

Eigen::MatrixXcd unitary_matrix(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  if (n > kMaxUnitaryQubits) {
    throw Error(Errc::TooLarge, "unitary of " + std::to_string(n) + " qubits");
  }
  for (const auto& op : circuit.ops()) {
    if (op.kind() == GateKind::OPAQUE) {
      throw Error(Errc::OpaqueNotMaterializable, "circuit contains opaque node '" + op.label() + "'");
    }
  }
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::VectorXcd col = u.col(j);
    apply_inplace(circuit, col);
    u.col(j) = col;
  }
  return u;
}

void apply_inplace(const Circuit& circuit, Eigen::VectorXcd& amplitudes) {
  if (amplitudes.size() != (Eigen::Index{1} << circuit.n_qubits())) {
    throw Error(Errc::SizeMismatch, "amplitude vector does not match a " +
                                        std::to_string(circuit.n_qubits()) + "-qubit circuit");
  }
  for (const auto& op : circuit.ops()) apply_gate_inplace(amplitudes, circuit.n_qubits(), op);
}

StateVector apply(const Circuit& circuit, StateVector state) {
  if (state.n_qubits() != circuit.n_qubits()) {
    throw Error(Errc::SizeMismatch, "state has " + std::to_string(state.n_qubits()) +
                                        " qubits, circuit has " + std::to_string(circuit.n_qubits()));
  }
  for (const auto& op : circuit.ops()) state.apply(op);
  return state;
}

std::string dump(const Circuit& circuit) {
  std::ostringstream os;
  for (const auto& op : circuit.ops()) {
    os << to_string(op.kind());
    for (int q : op.qubits()) os << ' ' << q;
    if (op.kind() == GateKind::OPAQUE) os << " # " << op.label();
    os << '\n';
  }
  return os.str();
}

}  // namespace seqlab
