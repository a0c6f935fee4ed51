#include "seqlab/band_oracle.hpp"

#include <string>
#include <utility>
#include <vector>

#include "seqlab/errors.hpp"

namespace seqlab {
namespace {

void check_constant(const RegisterLayout& layout, Index constant) {
  const Index full = Index{1} << layout.n_data;
  if (constant > full) {
    throw Error(Errc::ConstantOutOfRange,
                "comparator constant " + std::to_string(constant) + " exceeds 2^" + std::to_string(layout.n_data));
  }
}

void check_target(const RegisterLayout& layout, int target) {
  const bool is_data = target >= 0 && target < layout.n_data;
  const bool is_carry = target >= layout.carry(0) && target < layout.carry(layout.n_carries());
  if (is_data || is_carry || target < 0 || target >= layout.total_qubits()) {
    throw Error(Errc::InvalidConfig, "comparator target " + std::to_string(target) + " is not a free ancilla");
  }
}

// One stage of the carry chain of x + addend: carry_i = MAJ(x_i, addend_i,
// carry_{i-1}), specialised to the classical addend bit.
void carry_stage(Circuit& c, const RegisterLayout& layout, Index addend, int i, int out) {
  const int x = layout.data(i);
  const bool addend_bit = bit_of(addend, i);
  if (i == 0) {
    if (addend_bit) c.append(GateOp::cnot(x, out));
    return;
  }
  const int prev = layout.carry(i - 1);
  if (addend_bit) {
    // out ^= x | prev  ==  out ^= ~(~x & ~prev)
    c.append(GateOp::x(x));
    c.append(GateOp::x(prev));
    c.append(GateOp::toffoli(x, prev, out));
    c.append(GateOp::x(out));
    c.append(GateOp::x(prev));
    c.append(GateOp::x(x));
  } else {
    c.append(GateOp::toffoli(x, prev, out));
  }
}

}  // namespace

std::string_view to_string(OracleRealization r) {
  return r == OracleRealization::semantic ? "semantic" : "gate_level";
}

Circuit comparator_ge(const RegisterLayout& layout, Index constant, int target) {
  check_constant(layout, constant);
  check_target(layout, target);
  const int n = layout.n_data;
  const Index full = Index{1} << n;
  Circuit c(layout.total_qubits());
  if (constant == 0) {
    c.append(GateOp::x(target));
    return c;
  }
  if (constant == full) return c;

  // x >= constant  <=>  x + (2^n - constant) carries out of bit n-1
  const Index addend = full - constant;
  for (int i = 0; i + 1 < n; ++i) carry_stage(c, layout, addend, i, layout.carry(i));
  carry_stage(c, layout, addend, n - 1, target);
  for (int i = n - 2; i >= 0; --i) carry_stage(c, layout, addend, i, layout.carry(i));
  return c;
}

Circuit comparator_ge(int n, Index constant) {
  const auto layout = RegisterLayout::for_data(n);
  return comparator_ge(layout, constant, layout.temp1());
}

Circuit comparator_lt(const RegisterLayout& layout, Index constant, int target) {
  check_constant(layout, constant);
  check_target(layout, target);
  const Index full = Index{1} << layout.n_data;
  Circuit c(layout.total_qubits());
  if (constant == 0) return c;
  if (constant == full) {
    c.append(GateOp::x(target));
    return c;
  }
  c.append(comparator_ge(layout, constant, target));
  c.append(GateOp::x(target));
  return c;
}

Circuit comparator_lt(int n, Index constant) {
  const auto layout = RegisterLayout::for_data(n);
  return comparator_lt(layout, constant, layout.temp2());
}

Circuit build_band_oracle(int n, const SequencyBand& band, OracleRealization realization) {
  const auto layout = RegisterLayout::for_data(n);
  band.validate(Index{1} << n);
  Circuit c(layout.total_qubits());

  if (realization == OracleRealization::semantic) {
    const Index mask = layout.data_mask();
    const Index flag_bit = Index{1} << layout.flag();
    auto flip = [mask, flag_bit, band](Eigen::VectorXcd& amps) {
      const auto dim = static_cast<Index>(amps.size());
      for (Index idx = 0; idx < dim; ++idx) {
        if ((idx & flag_bit) == 0 && band.contains(idx & mask)) {
          std::swap(amps[static_cast<Eigen::Index>(idx)], amps[static_cast<Eigen::Index>(idx | flag_bit)]);
        }
      }
    };
    std::vector<int> qubits;
    for (int k = 0; k < n; ++k) qubits.push_back(layout.data(k));
    qubits.push_back(layout.flag());
    c.append(GateOp::opaque("band[" + std::to_string(band.a) + "," + std::to_string(band.end()) + ")",
                            std::move(qubits), flip, flip));
    return c;
  }

  const Circuit lower = comparator_ge(layout, band.a, layout.temp1());
  const Circuit upper = comparator_lt(layout, band.end(), layout.temp2());
  c.append(lower);
  c.append(upper);
  c.append(GateOp::toffoli(layout.temp1(), layout.temp2(), layout.flag()));
  c.append(adjoint(upper));
  c.append(adjoint(lower));
  return c;
}

double flag_probability(const StateVector& state, const RegisterLayout& layout) {
  if (state.n_qubits() != layout.total_qubits()) {
    throw Error(Errc::SizeMismatch, "state does not match the band-detection layout");
  }
  const Index flag_bit = Index{1} << layout.flag();
  return probability_of(state, [flag_bit](Index i) { return (i & flag_bit) != 0; });
}

}  // namespace seqlab
