#include "seqlab/amplitude_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "seqlab/errors.hpp"
#include "seqlab/qwht.hpp"

namespace seqlab {
namespace {

constexpr double kEndpointSnap = 1e-13;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t round_seed(std::uint64_t seed, std::size_t round) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(round)));
}

int n_data_of(const Eigen::VectorXd& signal) {
  const auto len = static_cast<Index>(signal.size());
  if (!is_power_of_two(len) || len < 2) {
    throw Error(Errc::NotPowerOfTwo, "signal length " + std::to_string(len) + " is not 2^n with n >= 1");
  }
  return log2_exact(len);
}

std::uint64_t count_flag_hits(const StateVector& state, const RegisterLayout& layout, std::uint64_t shots,
                              std::uint64_t seed) {
  const Index flag_bit = Index{1} << layout.flag();
  std::uint64_t hits = 0;
  for (const auto& [idx, count] : sample_measurement(state, shots, seed)) {
    if (idx & flag_bit) hits += count;
  }
  return hits;
}

double snap_probability(double p) {
  p = std::clamp(p, 0.0, 1.0);
  if (p < kEndpointSnap) return 0.0;
  if (p > 1.0 - kEndpointSnap) return 1.0;
  return p;
}

double angle_of(double p) { return std::asin(std::sqrt(std::clamp(p, 0.0, 1.0))); }

}  // namespace

std::string_view to_string(EstimationMode mode) {
  switch (mode) {
    case EstimationMode::exact: return "exact";
    case EstimationMode::sampled: return "sampled";
    case EstimationMode::mlqae: return "mlqae";
  }
  return "?";
}

EstimationMode parse_estimation_mode(std::string_view text) {
  if (text == "exact") return EstimationMode::exact;
  if (text == "sampled") return EstimationMode::sampled;
  if (text == "mlqae") return EstimationMode::mlqae;
  throw Error(Errc::InvalidConfig, "unknown estimation mode '" + std::string(text) + "'");
}

std::vector<int> default_schedule(int rounds) {
  std::vector<int> s;
  if (rounds >= 1) s.push_back(0);
  for (int k = 1; k < rounds; ++k) s.push_back(1 << (k - 1));
  return s;
}

void EstimationConfig::validate() const {
  if (mode != EstimationMode::exact && shots_per_round < 1) {
    throw Error(Errc::InvalidConfig, "shots_per_round must be >= 1");
  }
  if (mode == EstimationMode::mlqae) {
    if (schedule.empty()) throw Error(Errc::InvalidConfig, "MLQAE schedule is empty");
    for (int m : schedule) {
      if (m < 0) throw Error(Errc::InvalidConfig, "negative Grover power in schedule");
    }
    if (grid_points < 2) throw Error(Errc::InvalidConfig, "grid_points must be >= 2");
  }
}

Circuit state_preparation(const Eigen::VectorXd& signal, const RegisterLayout& layout) {
  if (n_data_of(signal) != layout.n_data) {
    throw Error(Errc::LayoutMismatch, "signal length does not match the data register");
  }
  // validates finiteness and nonzero norm
  const StateVector target = init_from_signal(signal);

  Eigen::VectorXd psi = target.amplitudes().real();
  const double phase = psi[0] < 0.0 ? -1.0 : 1.0;
  psi *= phase;
  // Householder reflection mapping e0 to psi; symmetric orthogonal, so its
  // own inverse, and so is the signed version.
  Eigen::VectorXd v = -psi;
  v[0] += 1.0;
  const double vv = v.squaredNorm();
  const bool identity = vv < 1e-300;
  const auto block = static_cast<Eigen::Index>(Index{1} << layout.n_data);

  auto reflect = [v = Eigen::VectorXcd(v.cast<std::complex<double>>()), vv, phase, identity,
                  block](Eigen::VectorXcd& amps) {
    for (Eigen::Index off = 0; off < amps.size(); off += block) {
      auto seg = amps.segment(off, block);
      if (!identity) {
        const std::complex<double> proj = v.dot(seg);
        seg -= (2.0 / vv) * proj * v;
      }
      if (phase < 0.0) seg = -seg;
    }
  };

  Circuit c(layout.total_qubits());
  std::vector<int> qubits;
  for (int k = 0; k < layout.n_data; ++k) qubits.push_back(layout.data(k));
  c.append(GateOp::opaque("prep", std::move(qubits), reflect, reflect));
  return c;
}

Circuit build_a_operator(const Circuit& prep, const Circuit& oracle, const RegisterLayout& layout) {
  const int total = layout.total_qubits();
  if (prep.n_qubits() != total || oracle.n_qubits() != total) {
    throw Error(Errc::LayoutMismatch, "prep/oracle do not span the " + std::to_string(total) + "-qubit layout");
  }
  Circuit a(total);
  a.append(prep);
  a.append(build_qwht(layout.n_data));
  a.append(oracle);
  return a;
}

Circuit grover_operator(const Circuit& prep, const Circuit& oracle, const RegisterLayout& layout) {
  const Circuit a = build_a_operator(prep, oracle, layout);
  Circuit q(layout.total_qubits());
  // S_chi: Z on the flag
  q.append(GateOp::h(layout.flag()));
  q.append(GateOp::x(layout.flag()));
  q.append(GateOp::h(layout.flag()));
  q.append(adjoint(a));
  auto reflect_zero = [](Eigen::VectorXcd& amps) { amps[0] = -amps[0]; };
  std::vector<int> all(static_cast<std::size_t>(layout.total_qubits()));
  for (int k = 0; k < layout.total_qubits(); ++k) all[static_cast<std::size_t>(k)] = k;
  q.append(GateOp::opaque("S0", std::move(all), reflect_zero, reflect_zero));
  q.append(a);
  return q;
}

double log_likelihood(double theta, const std::vector<int>& schedule, const std::vector<std::uint64_t>& hits,
                      std::uint64_t shots) {
  double ll = 0.0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const double angle = (2.0 * schedule[k] + 1.0) * theta;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    const auto h = static_cast<double>(hits[k]);
    const auto miss = static_cast<double>(shots - hits[k]);
    if (hits[k] > 0) ll += h * std::log(s * s);
    if (shots > hits[k]) ll += miss * std::log(c * c);
  }
  return ll;
}

MaximumLikelihood maximize_likelihood(const std::vector<int>& schedule, const std::vector<std::uint64_t>& hits,
                                      std::uint64_t shots, int grid_points) {
  if (schedule.size() != hits.size()) throw Error(Errc::InvalidConfig, "schedule/hits length mismatch");
  const double hi = std::numbers::pi / 2.0;
  const double step = hi / (grid_points - 1);

  int best_i = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double ll = log_likelihood(i * step, schedule, hits, shots);
    if (ll > best) {
      best = ll;
      best_i = i;
    }
  }

  // golden-section refinement inside the neighbouring grid cells
  double lo_t = std::max(0.0, (best_i - 1) * step);
  double hi_t = std::min(hi, (best_i + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi_t - inv_phi * (hi_t - lo_t);
  double x2 = lo_t + inv_phi * (hi_t - lo_t);
  double f1 = log_likelihood(x1, schedule, hits, shots);
  double f2 = log_likelihood(x2, schedule, hits, shots);
  for (int it = 0; it < 100 && hi_t - lo_t > 1e-15; ++it) {
    if (f1 >= f2) {
      hi_t = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi_t - inv_phi * (hi_t - lo_t);
      f1 = log_likelihood(x1, schedule, hits, shots);
    } else {
      lo_t = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo_t + inv_phi * (hi_t - lo_t);
      f2 = log_likelihood(x2, schedule, hits, shots);
    }
  }
  double theta = 0.5 * (lo_t + hi_t);
  if (!(log_likelihood(theta, schedule, hits, shots) >= best)) theta = best_i * step;

  // observed Fisher information, -d^2 logL / dtheta^2
  double info = 0.0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const double a = 2.0 * schedule[k] + 1.0;
    const double s2 = std::pow(std::sin(a * theta), 2);
    const double c2 = std::pow(std::cos(a * theta), 2);
    if (hits[k] > 0) info += 2.0 * a * a * static_cast<double>(hits[k]) / s2;
    if (shots > hits[k]) info += 2.0 * a * a * static_cast<double>(shots - hits[k]) / c2;
  }
  return {theta, info};
}

EstimationResult estimate(const Eigen::VectorXd& signal, const SequencyBand& band, const EstimationConfig& config) {
  config.validate();
  const int n = n_data_of(signal);
  band.validate(Index{1} << n);
  const auto layout = RegisterLayout::for_data(n);

  const Circuit prep = state_preparation(signal, layout);
  const Circuit oracle = build_band_oracle(n, band, config.realization);
  const Circuit a = build_a_operator(prep, oracle, layout);
  const StateVector psi = apply(a, StateVector(layout.total_qubits()));

  EstimationResult r;
  r.mode = config.mode;
  switch (config.mode) {
    case EstimationMode::exact: {
      r.p_est = snap_probability(flag_probability(psi, layout));
      r.theta_est = angle_of(r.p_est);
      break;
    }
    case EstimationMode::sampled: {
      const auto h = count_flag_hits(psi, layout, config.shots_per_round, round_seed(config.rng_seed, 0));
      const auto shots = static_cast<double>(config.shots_per_round);
      r.shots = config.shots_per_round;
      r.hits = {h};
      r.p_est = static_cast<double>(h) / shots;
      r.theta_est = angle_of(r.p_est);
      r.stderr_est = std::sqrt(r.p_est * (1.0 - r.p_est) / shots);
      break;
    }
    case EstimationMode::mlqae: {
      const Circuit q = grover_operator(prep, oracle, layout);
      r.shots = config.shots_per_round;
      r.schedule = config.schedule;
      StateVector current = psi;
      int power = 0;
      for (std::size_t k = 0; k < config.schedule.size(); ++k) {
        const int m = config.schedule[k];
        if (m < power) {
          current = psi;
          power = 0;
        }
        for (; power < m; ++power) current = apply(q, std::move(current));
        r.hits.push_back(count_flag_hits(current, layout, config.shots_per_round, round_seed(config.rng_seed, k)));
      }
      const auto ml = maximize_likelihood(config.schedule, r.hits, config.shots_per_round, config.grid_points);
      r.theta_est = ml.theta;
      const double s = std::sin(ml.theta);
      r.p_est = s * s;
      double se_theta = std::numeric_limits<double>::infinity();
      if (std::isinf(ml.fisher_information)) {
        se_theta = 0.0;
      } else if (ml.fisher_information > 0.0) {
        se_theta = 1.0 / std::sqrt(ml.fisher_information);
      }
      const double slope = std::abs(std::sin(2.0 * ml.theta));
      r.stderr_est = slope == 0.0 ? 0.0 : slope * se_theta;
      break;
    }
  }
  if (config.mode == EstimationMode::sampled) r.schedule = {0};
  return r;
}

}  // namespace seqlab
