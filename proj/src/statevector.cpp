#include "seqlab/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seqlab/errors.hpp"

namespace seqlab {
namespace {

constexpr int kMaxQubits = 30;

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1) throw Error(Errc::InvalidSize, "statevector needs at least one qubit");
  if (n_qubits > kMaxQubits) {
    throw Error(Errc::TooLarge, std::to_string(n_qubits) + " qubits exceeds the simulator limit");
  }
}

// Inserts a zero bit at position `q`, shifting higher bits up.
inline Index insert_zero(Index k, int q) {
  const Index low = k & ((Index{1} << q) - 1);
  return ((k >> q) << (q + 1)) | low;
}

void apply_h(Eigen::VectorXcd& a, int q) {
  const double r = 1.0 / std::sqrt(2.0);
  const Index half = static_cast<Index>(a.size()) / 2;
  const Index stride = Index{1} << q;
  for (Index k = 0; k < half; ++k) {
    const auto i0 = static_cast<Eigen::Index>(insert_zero(k, q));
    const auto i1 = static_cast<Eigen::Index>(insert_zero(k, q) | stride);
    const auto u = a[i0];
    const auto v = a[i1];
    a[i0] = r * (u + v);
    a[i1] = r * (u - v);
  }
}

void apply_x(Eigen::VectorXcd& a, int q) {
  const Index half = static_cast<Index>(a.size()) / 2;
  const Index stride = Index{1} << q;
  for (Index k = 0; k < half; ++k) {
    const Index i0 = insert_zero(k, q);
    std::swap(a[static_cast<Eigen::Index>(i0)], a[static_cast<Eigen::Index>(i0 | stride)]);
  }
}

// Visits every index whose bits at `qs` are all zero. `qs` must be sorted.
template <std::size_t K, typename F>
void for_each_base(Index dim, const std::array<int, K>& qs, F&& f) {
  const Index count = dim >> K;
  for (Index k = 0; k < count; ++k) {
    Index base = k;
    for (int q : qs) base = insert_zero(base, q);
    f(base);
  }
}

template <std::size_t K>
std::array<int, K> sorted_qubits(const std::vector<int>& qubits) {
  std::array<int, K> qs{};
  std::copy_n(qubits.begin(), K, qs.begin());
  std::sort(qs.begin(), qs.end());
  return qs;
}

void apply_cnot(Eigen::VectorXcd& a, int control, int target) {
  const Index cbit = Index{1} << control;
  const Index tbit = Index{1} << target;
  for_each_base(static_cast<Index>(a.size()), sorted_qubits<2>({control, target}), [&](Index base) {
    const Index i0 = base | cbit;
    std::swap(a[static_cast<Eigen::Index>(i0)], a[static_cast<Eigen::Index>(i0 | tbit)]);
  });
}

void apply_swap(Eigen::VectorXcd& a, int qa, int qb) {
  const Index abit = Index{1} << qa;
  const Index bbit = Index{1} << qb;
  for_each_base(static_cast<Index>(a.size()), sorted_qubits<2>({qa, qb}), [&](Index base) {
    std::swap(a[static_cast<Eigen::Index>(base | abit)], a[static_cast<Eigen::Index>(base | bbit)]);
  });
}

void apply_toffoli(Eigen::VectorXcd& a, int c0, int c1, int target) {
  const Index cbits = (Index{1} << c0) | (Index{1} << c1);
  const Index tbit = Index{1} << target;
  for_each_base(static_cast<Index>(a.size()), sorted_qubits<3>({c0, c1, target}), [&](Index base) {
    const Index i0 = base | cbits;
    std::swap(a[static_cast<Eigen::Index>(i0)], a[static_cast<Eigen::Index>(i0 | tbit)]);
  });
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(Index{1} << n_qubits));
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(Eigen::VectorXcd amplitudes) {
  const auto len = static_cast<Index>(amplitudes.size());
  if (!is_power_of_two(len) || len < 2) {
    throw Error(Errc::NotPowerOfTwo, "amplitude vector of length " + std::to_string(len));
  }
  const int n = log2_exact(len);
  check_qubit_count(n);
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(Errc::ZeroVector, "amplitude vector has zero norm");
  if (!std::isfinite(norm)) throw Error(Errc::ParseError, "amplitude vector is not finite");
  amplitudes /= norm;
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int n_qubits, Index index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(index));
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::extended(int extra) const {
  if (extra < 0) throw Error(Errc::InvalidSize, "negative qubit extension");
  check_qubit_count(n_qubits_ + extra);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim() << extra));
  amps.head(amplitudes_.size()) = amplitudes_;
  return StateVector(n_qubits_ + extra, std::move(amps));
}

void StateVector::apply(const GateOp& gate) { apply_gate_inplace(amplitudes_, n_qubits_, gate); }

StateVector init_from_signal(const Eigen::VectorXd& signal) {
  const auto len = static_cast<Index>(signal.size());
  if (!is_power_of_two(len) || len < 2) {
    throw Error(Errc::NotPowerOfTwo, "signal length " + std::to_string(len) + " is not 2^n with n >= 1");
  }
  if (!signal.allFinite()) throw Error(Errc::ParseError, "signal contains NaN or Inf");
  if (signal.isZero(0.0)) throw Error(Errc::ZeroVector, "signal is identically zero");
  return StateVector::from_amplitudes(signal.cast<std::complex<double>>());
}

void validate_gate(const GateOp& gate, int n_qubits) {
  for (int q : gate.qubits()) {
    if (q >= n_qubits) {
      throw Error(Errc::QubitOutOfRange, std::string(to_string(gate.kind())) + " on qubit " +
                                              std::to_string(q) + " of a " + std::to_string(n_qubits) +
                                              "-qubit register");
    }
  }
}

void apply_gate_inplace(Eigen::VectorXcd& amplitudes, int n_qubits, const GateOp& gate) {
  validate_gate(gate, n_qubits);
  const auto& q = gate.qubits();
  switch (gate.kind()) {
    case GateKind::H: apply_h(amplitudes, q[0]); break;
    case GateKind::X: apply_x(amplitudes, q[0]); break;
    case GateKind::CNOT: apply_cnot(amplitudes, q[0], q[1]); break;
    case GateKind::SWAP: apply_swap(amplitudes, q[0], q[1]); break;
    case GateKind::TOFFOLI: apply_toffoli(amplitudes, q[0], q[1], q[2]); break;
    case GateKind::OPAQUE: gate.apply_opaque(amplitudes); break;
  }
}

StateVector apply_gate(StateVector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

Histogram sample_measurement(const StateVector& state, std::uint64_t shots, std::uint64_t rng_seed) {
  if (shots < 1) throw Error(Errc::InvalidConfig, "shots must be >= 1");
  const auto& amps = state.amplitudes();
  std::vector<double> cdf(static_cast<std::size_t>(amps.size()));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  std::mt19937_64 rng(rng_seed);
  Histogram hist;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto idx = static_cast<Index>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (idx == cdf.size()) {
      // rounding pushed u onto the total; fall back to the last outcome with mass
      idx = cdf.size() - 1;
      while (idx > 0 && std::norm(amps[static_cast<Eigen::Index>(idx)]) == 0.0) --idx;
    }
    ++hist[idx];
  }
  return hist;
}

}  // namespace seqlab
