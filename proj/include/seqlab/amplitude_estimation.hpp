#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string_view>
#include <vector>

#include "seqlab/band.hpp"
#include "seqlab/band_oracle.hpp"
#include "seqlab/circuit.hpp"
#include "seqlab/statevector.hpp"

namespace seqlab {

enum class EstimationMode { exact, sampled, mlqae };

std::string_view to_string(EstimationMode mode);
EstimationMode parse_estimation_mode(std::string_view text);

/// Default Grover power schedule (0, 1, 2, 4, ..., 2^{rounds-2}).
std::vector<int> default_schedule(int rounds = 5);

struct EstimationConfig {
  EstimationMode mode = EstimationMode::exact;
  std::uint64_t shots_per_round = 1000;
  std::vector<int> schedule = default_schedule();
  std::uint64_t rng_seed = 0;
  int grid_points = 10000;
  OracleRealization realization = OracleRealization::gate_level;

  /// Throws InvalidConfig on inconsistent fields.
  void validate() const;
};

struct EstimationResult {
  double p_est = 0.0;
  double theta_est = 0.0;  ///< p_est = sin^2(theta_est), theta in [0, pi/2]
  double stderr_est = 0.0;
  EstimationMode mode = EstimationMode::exact;
  std::uint64_t shots = 0;  ///< per round; 0 in exact mode
  std::vector<int> schedule;
  std::vector<std::uint64_t> hits;  ///< flag=1 counts per schedule entry
};

/// Opaque amplitude-encoding node: |0...0> -> |signal/||signal||> on the
/// data qubits of `layout`, ancillas untouched. Realized as a phased
/// Householder reflection per ancilla block, so forward and adjoint are
/// exact inverses.
Circuit state_preparation(const Eigen::VectorXd& signal, const RegisterLayout& layout);

/// A = prep, then QWHT on the data qubits, then the band oracle.
Circuit build_a_operator(const Circuit& prep, const Circuit& oracle, const RegisterLayout& layout);

/// Q = A S0 A^dagger S_chi as an op list (S_chi applied first). S_chi is a
/// Z on the flag qubit; S0 = I - 2|0><0| on the full register.
/// Throws LayoutMismatch if prep or oracle do not span `layout`.
Circuit grover_operator(const Circuit& prep, const Circuit& oracle, const RegisterLayout& layout);

/// Maximum-likelihood angle from per-round hit counts. Exposed for testing.
struct MaximumLikelihood {
  double theta = 0.0;
  double fisher_information = 0.0;
};
MaximumLikelihood maximize_likelihood(const std::vector<int>& schedule, const std::vector<std::uint64_t>& hits,
                                      std::uint64_t shots, int grid_points);

/// Log-likelihood of theta under the Grover-schedule Bernoulli model.
double log_likelihood(double theta, const std::vector<int>& schedule, const std::vector<std::uint64_t>& hits,
                      std::uint64_t shots);

/// Estimates the sequency-band probability mass of `signal` in `band`.
EstimationResult estimate(const Eigen::VectorXd& signal, const SequencyBand& band, const EstimationConfig& config);

}  // namespace seqlab
