#include "seqlab/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "seqlab/band_oracle.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/qwht.hpp"
#include "seqlab/walsh.hpp"
#include "seqlab/zero_crossing.hpp"

namespace seqlab {
namespace {

int checked_n(const Eigen::VectorXd& signal) {
  const auto len = static_cast<Index>(signal.size());
  if (!is_power_of_two(len) || len < 2) {
    throw Error(Errc::NotPowerOfTwo, "signal length " + std::to_string(len) + " is not 2^n with n >= 1");
  }
  return log2_exact(len);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Algorithm1Output run_algorithm1(const Eigen::VectorXd& signal, const SequencyBand& band, bool estimate,
                                const EstimationConfig& config) {
  const int n = checked_n(signal);
  band.validate(Index{1} << n);
  if (estimate) return seqlab::estimate(signal, band, config);

  const auto layout = RegisterLayout::for_data(n);
  const Circuit prep = state_preparation(signal, layout);
  const Circuit oracle = build_band_oracle(n, band, config.realization);
  const Circuit a = build_a_operator(prep, oracle, layout);
  return CoherentOutput{apply(a, StateVector(layout.total_qubits())), layout};
}

std::array<SequencyBand, 3> BandEnergyReport::bands() const {
  const Index total = Index{1} << n;
  return {SequencyBand{0, b}, SequencyBand{b, m}, SequencyBand{b + m, total - b - m}};
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string signal_hash(const Eigen::VectorXd& signal) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Eigen::Index i = 0; i < signal.size(); ++i) {
    for (char c : format_real(signal[i]) + "\n") {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BandEnergyReport band_energy_report(const Eigen::VectorXd& signal, std::string label, Index b, Index m,
                                    const EstimationConfig& config) {
  const int n = checked_n(signal);
  const Index total = Index{1} << n;
  if (m < 1 || b > total || m > total - b) {
    throw Error(Errc::BandOutOfRange, "partition b=" + std::to_string(b) + " M=" + std::to_string(m) +
                                          " does not fit N=" + std::to_string(total));
  }
  config.validate();

  BandEnergyReport r;
  r.n = n;
  r.label = std::move(label);
  r.signal_hash = signal_hash(signal);
  r.b = b;
  r.m = m;
  r.mode = config.mode;
  r.seed = config.rng_seed;
  r.signal = signal;
  r.spectrum = fwht_sequency(init_from_signal(signal).amplitudes().real()).coefficients;

  const auto bands = r.bands();
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].width == 0) continue;
    EstimationConfig cfg = config;
    cfg.rng_seed = config.rng_seed + i;
    const auto est = estimate(signal, bands[i], cfg);
    r.band_probabilities[i] = est.p_est;
    r.band_stderr[i] = est.stderr_est;
    r.shots = est.shots;
    r.schedule = est.schedule;
  }
  return r;
}

std::string to_json(const BandEnergyReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["label"] = report.label;
  j["signal_hash"] = report.signal_hash;
  j["n"] = report.n;
  j["b"] = report.b;
  j["m"] = report.m;
  ordered_json bands = ordered_json::array();
  const auto bs = report.bands();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    bands.push_back({{"lower", bs[i].a},
                     {"upper", bs[i].end()},
                     {"probability", report.band_probabilities[i]},
                     {"stderr", report.band_stderr[i]}});
  }
  j["bands"] = bands;
  ordered_json est;
  est["mode"] = std::string(to_string(report.mode));
  est["shots_per_round"] = report.shots;
  est["schedule"] = report.schedule;
  est["seed"] = report.seed;
  est["sampler"] = std::string(kSamplerAlgorithm);
  j["estimation"] = est;
  j["spectrum"] = std::vector<double>(report.spectrum.data(), report.spectrum.data() + report.spectrum.size());
  return j.dump(2) + "\n";
}

std::string index_value_csv(const Eigen::VectorXd& values) {
  std::string out = "index,value\n";
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    out += std::to_string(i) + "," + format_real(values[i]) + "\n";
  }
  return out;
}

std::string band_energy_csv(const BandEnergyReport& report) {
  Eigen::VectorXd v(3);
  v << report.band_probabilities[0], report.band_probabilities[1], report.band_probabilities[2];
  return index_value_csv(v);
}

std::string bar_chart_svg(const std::vector<double>& values, const std::vector<std::string>& labels,
                          const std::string& title) {
  const double width = 640, height = 320, margin = 40;
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) vmax = 1.0;
  const double plot_h = height - 2 * margin;
  const double zero_y = margin + plot_h / 2;
  const double slot = values.empty() ? 0.0 : (width - 2 * margin) / static_cast<double>(values.size());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << escape_xml(title) << "</text>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << fixed(zero_y, 2) << "\" x2=\"" << width - margin << "\" y2=\""
     << fixed(zero_y, 2) << "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double h = values[i] / vmax * (plot_h / 2);
    const double x = margin + slot * static_cast<double>(i) + slot * 0.1;
    const double y = h >= 0 ? zero_y - h : zero_y;
    os << "<rect x=\"" << fixed(x, 2) << "\" y=\"" << fixed(y, 2) << "\" width=\"" << fixed(slot * 0.8, 2)
       << "\" height=\"" << fixed(std::abs(h), 2) << "\" fill=\"steelblue\"/>\n";
    const std::string label = i < labels.size() ? labels[i] : std::to_string(i);
    os << "<text x=\"" << fixed(x + slot * 0.4, 2) << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\" font-size=\"11\">" << escape_xml(label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

Scenario parse_scenario(std::string_view text) {
  if (text == "dc") return Scenario::dc;
  if (text == "edge") return Scenario::edge;
  if (text == "alternating") return Scenario::alternating;
  throw Error(Errc::InvalidConfig, "unknown scenario '" + std::string(text) + "'");
}

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::dc: return "dc";
    case Scenario::edge: return "edge";
    case Scenario::alternating: return "alternating";
  }
  return "?";
}

Eigen::VectorXd scenario_signal(Scenario s) {
  Eigen::VectorXd x(8);
  for (Eigen::Index j = 0; j < 8; ++j) {
    switch (s) {
      case Scenario::dc: x[j] = 1.0; break;
      case Scenario::edge: x[j] = j < 6 ? 1.0 : -1.0; break;
      case Scenario::alternating: x[j] = (j % 2 == 0) ? 1.0 : -1.0; break;
    }
  }
  return x;
}

BandEnergyReport reproduce(Scenario scenario, const std::filesystem::path& out_dir) {
  const std::string name(to_string(scenario));
  BandEnergyReport r = band_energy_report(scenario_signal(scenario), name, kScenarioB, kScenarioM);
  if (out_dir.empty()) return r;

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IOError, "cannot create " + out_dir.string() + ": " + ec.message());

  auto as_vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  std::vector<std::string> idx_labels;
  for (Eigen::Index i = 0; i < r.signal.size(); ++i) idx_labels.push_back(std::to_string(i));
  std::vector<std::string> band_labels;
  for (const auto& b : r.bands()) {
    band_labels.push_back("[" + std::to_string(b.a) + "," + std::to_string(b.end()) + ")");
  }
  const std::vector<double> energies(r.band_probabilities.begin(), r.band_probabilities.end());

  write_file(out_dir / (name + "_time_domain.csv"), index_value_csv(r.signal));
  write_file(out_dir / (name + "_sequency_spectrum.csv"), index_value_csv(r.spectrum));
  write_file(out_dir / (name + "_band_energy.csv"), band_energy_csv(r));
  write_file(out_dir / (name + "_time_domain.svg"), bar_chart_svg(as_vec(r.signal), idx_labels, name + ": signal"));
  write_file(out_dir / (name + "_sequency_spectrum.svg"),
             bar_chart_svg(as_vec(r.spectrum), idx_labels, name + ": sequency spectrum"));
  write_file(out_dir / (name + "_band_energy.svg"), bar_chart_svg(energies, band_labels, name + ": band energy"));
  write_file(out_dir / (name + "_report.json"), to_json(r));
  return r;
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (Index v = 0; v < 8; ++v) {
    const BitString s(3, v);
    rows.push_back({s.to_string(), sequence_of(s), zero_crossings_direct(s)});
  }
  return rows;
}

std::string table1_csv() {
  std::string out = "s,sequence,zero_crossings\n";
  for (const auto& row : table1_rows()) {
    out += row.s + ",";
    for (Eigen::Index k = 0; k < row.sequence.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row.sequence[k]);
    }
    out += "," + std::to_string(row.zero_crossings) + "\n";
  }
  return out;
}

std::string table1_text() {
  std::ostringstream os;
  os << std::left << std::setw(6) << "s" << std::setw(34) << "sequence (F(0..7))" << "zero-crossings\n";
  for (const auto& row : table1_rows()) {
    std::string seq = "(";
    for (Eigen::Index k = 0; k < row.sequence.size(); ++k) {
      if (k) seq += ", ";
      seq += (row.sequence[k] > 0 ? " 1" : "-1");
    }
    seq += ")";
    os << std::setw(6) << row.s << std::setw(34) << seq << row.zero_crossings << "\n";
  }
  return os.str();
}

Eigen::VectorXd parse_signal(const std::string& text) {
  std::vector<double> values;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const std::string token =
          trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      double v = 0.0;
      const auto* first = token.data();
      const auto* last = token.data() + token.size();
      const auto res = std::from_chars(first, last, v);
      if (token.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad value '" + token + "'");
      }
      if (!std::isfinite(v)) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": non-finite value '" + token + "'");
      }
      values.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (values.empty()) throw Error(Errc::ParseError, "no values");
  Eigen::VectorXd signal = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  checked_n(signal);
  if (signal.isZero(0.0)) throw Error(Errc::ZeroVector, "signal is identically zero");
  return signal;
}

Eigen::VectorXd ingest_signal(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IOError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_signal(buf.str());
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IOError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(Errc::IOError, "write failed for " + path.string());
}

}  // namespace seqlab
