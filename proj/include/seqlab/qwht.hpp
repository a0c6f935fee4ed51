#pragma once

#include "seqlab/circuit.hpp"
#include "seqlab/statevector.hpp"

namespace seqlab {

/// Sequency-ordered quantum Walsh-Hadamard transform on qubits 0..n-1:
/// H on every qubit, CNOT(k -> k+1) for ascending k (in-place prefix XOR),
/// then SWAP(k, n-1-k) to bit-reverse.
Circuit build_qwht(int n);

/// The natural-order transform H^{(x)n}.
Circuit build_natural_wht(int n);

/// Applies the sequency QWHT to a state whose whole register is data.
StateVector apply_qwht(StateVector state);

/// Applies the sequency QWHT to the data qubits of a band-detection
/// register. Throws SizeMismatch if `state` does not match `layout`.
StateVector apply_qwht(StateVector state, const RegisterLayout& layout);

}  // namespace seqlab
