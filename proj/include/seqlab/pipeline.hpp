#pragma once

#include <Eigen/Core>

#include <array>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "seqlab/amplitude_estimation.hpp"
#include "seqlab/band.hpp"
#include "seqlab/circuit.hpp"
#include "seqlab/statevector.hpp"

namespace seqlab {

inline constexpr int kReportSchemaVersion = 1;

/// Post-oracle register kept in quantum form: the flag qubit coherently
/// marks band membership.
struct CoherentOutput {
  StateVector state;
  RegisterLayout layout;
};

using Algorithm1Output = std::variant<CoherentOutput, EstimationResult>;

/// Prepare, transform to sequency basis, mark the band, and either return
/// the coherent register (`estimate == false`) or a probability estimate.
Algorithm1Output run_algorithm1(const Eigen::VectorXd& signal, const SequencyBand& band, bool estimate,
                                const EstimationConfig& config = {});

/// Three-way partition [0,b), [b,b+M), [b+M,N) of the sequency axis.
struct BandEnergyReport {
  int n = 0;
  std::string label;
  std::string signal_hash;  ///< FNV-1a 64 over the printed signal values
  Index b = 0;
  Index m = 0;
  std::array<double, 3> band_probabilities{};
  std::array<double, 3> band_stderr{};
  EstimationMode mode = EstimationMode::exact;
  std::uint64_t shots = 0;
  std::vector<int> schedule;
  std::uint64_t seed = 0;
  Eigen::VectorXd signal;
  Eigen::VectorXd spectrum;  ///< sequency-ordered coefficients of the normalized signal

  std::array<SequencyBand, 3> bands() const;
};

/// Runs the pipeline on each band of the partition. Empty bands report 0.
BandEnergyReport band_energy_report(const Eigen::VectorXd& signal, std::string label, Index b, Index m,
                                    const EstimationConfig& config = {});

std::string signal_hash(const Eigen::VectorXd& signal);

/// %.17g rendering used by every CSV writer.
std::string format_real(double v);

std::string to_json(const BandEnergyReport& report);
std::string index_value_csv(const Eigen::VectorXd& values);
std::string band_energy_csv(const BandEnergyReport& report);

/// Minimal bar chart, one bar per value.
std::string bar_chart_svg(const std::vector<double>& values, const std::vector<std::string>& labels,
                          const std::string& title);

enum class Scenario { dc, edge, alternating };

Scenario parse_scenario(std::string_view text);
std::string_view to_string(Scenario s);

/// n = 3 test signals: all-ones, a sign step at j = 6, and (-1)^j.
Eigen::VectorXd scenario_signal(Scenario s);

inline constexpr Index kScenarioB = 2;
inline constexpr Index kScenarioM = 3;

/// Exact-mode report for a scenario at b = 2, M = 3. When `out_dir` is
/// non-empty writes <scenario>_{time_domain,sequency_spectrum,band_energy}
/// .csv/.svg and <scenario>_report.json into it (IOError on failure).
BandEnergyReport reproduce(Scenario scenario, const std::filesystem::path& out_dir = {});

/// Rows of the n = 3 zero-crossing table.
struct Table1Row {
  std::string s;
  Eigen::VectorXi sequence;
  Index zero_crossings = 0;
};

std::vector<Table1Row> table1_rows();
std::string table1_csv();
std::string table1_text();

/// Reads one real per line and/or comma-separated. Rejects empty input,
/// non-numeric tokens, NaN/Inf, non-power-of-two lengths and zero vectors.
Eigen::VectorXd parse_signal(const std::string& text);
Eigen::VectorXd ingest_signal(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace seqlab
