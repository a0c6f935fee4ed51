#include "seqlab/qwht.hpp"

#include <string>

#include "seqlab/errors.hpp"

namespace seqlab {

Circuit build_qwht(int n) {
  if (n < 1) throw Error(Errc::InvalidSize, "QWHT needs n >= 1, got " + std::to_string(n));
  Circuit c(n);
  for (int k = 0; k < n; ++k) c.append(GateOp::h(k));
  for (int k = 0; k + 1 < n; ++k) c.append(GateOp::cnot(k, k + 1));
  for (int k = 0; k < n / 2; ++k) c.append(GateOp::swap(k, n - 1 - k));
  return c;
}

Circuit build_natural_wht(int n) {
  if (n < 1) throw Error(Errc::InvalidSize, "WHT needs n >= 1, got " + std::to_string(n));
  Circuit c(n);
  for (int k = 0; k < n; ++k) c.append(GateOp::h(k));
  return c;
}

StateVector apply_qwht(StateVector state) {
  const Circuit c = build_qwht(state.n_qubits());
  return apply(c, std::move(state));
}

StateVector apply_qwht(StateVector state, const RegisterLayout& layout) {
  if (state.n_qubits() != layout.total_qubits()) {
    throw Error(Errc::SizeMismatch, "state of " + std::to_string(state.n_qubits()) +
                                        " qubits does not match a layout of " +
                                        std::to_string(layout.total_qubits()));
  }
  const Circuit c = build_qwht(layout.n_data);
  for (const auto& op : c.ops()) state.apply(op);
  return state;
}

}  // namespace seqlab
