#pragma once

#include "seqlab/band.hpp"
#include "seqlab/circuit.hpp"
#include "seqlab/statevector.hpp"

namespace seqlab {

enum class OracleRealization { semantic, gate_level };

std::string_view to_string(OracleRealization r);

/// Toggles `target` iff the data register value is >= `constant`.
///
/// Gate-level ripple comparison: the carry-out of x + (2^n - constant)
/// is computed through the carry ancillas of `layout` with X/CNOT/Toffoli
/// only, copied onto `target`, and the carries are uncomputed before
/// returning. The constants 0 and 2^n compile to a single X and to the
/// empty circuit. Throws ConstantOutOfRange for constant > 2^n.
Circuit comparator_ge(const RegisterLayout& layout, Index constant, int target);
Circuit comparator_ge(int n, Index constant);  // target = temp1

/// Toggles `target` iff the data register value is < `constant`.
Circuit comparator_lt(const RegisterLayout& layout, Index constant, int target);
Circuit comparator_lt(int n, Index constant);  // target = temp2

/// Band membership oracle on the register of RegisterLayout::for_data(n):
/// |i>|f> -> |i>|f ^ [a <= i < a+M]> with every temp and carry ancilla
/// returned to its input value.
Circuit build_band_oracle(int n, const SequencyBand& band, OracleRealization realization);

/// Pr(flag = 1) of a state on the layout's register.
double flag_probability(const StateVector& state, const RegisterLayout& layout);

}  // namespace seqlab
