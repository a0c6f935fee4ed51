// seqlab command-line front end.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqlab/seqlab.hpp"

namespace {

using namespace seqlab;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SEQLAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::InvalidConfig, std::string("SEQLAB_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

std::vector<int> parse_schedule(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidConfig, "bad schedule entry '" + tok + "'");
    }
  }
  return out;
}

Eigen::VectorXd run_transform(const Eigen::VectorXd& signal, const std::string& order, const std::string& engine) {
  const bool sequency = order == "sequency";
  if (engine == "classical") {
    return sequency ? fwht_sequency(signal).coefficients : fwht_natural(signal).coefficients;
  }
  const StateVector state = init_from_signal(signal);
  const int n = state.n_qubits();
  const Circuit c = sequency ? build_qwht(n) : build_natural_wht(n);
  // undo the amplitude normalization so both engines agree
  return apply(c, state).amplitudes().real() * signal.norm();
}

int fail(Errc code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = std::string(to_string(code));
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequency-band analysis: Walsh transforms, zero-crossings, band-energy estimation"};
  app.require_subcommand(1);

  // transform
  auto* transform = app.add_subcommand("transform", "Walsh-Hadamard transform of a signal file");
  std::string t_in, t_order = "sequency", t_engine = "classical", t_out;
  transform->add_option("--in", t_in, "Input signal (one value per line or comma-separated)")->required();
  transform->add_option("--order", t_order, "Coefficient ordering")->check(CLI::IsMember({"natural", "sequency"}));
  transform->add_option("--engine", t_engine, "Classical FWHT or simulated circuit")
      ->check(CLI::IsMember({"classical", "quantum"}));
  transform->add_option("--out", t_out, "Write CSV here instead of stdout");

  // zero-crossings
  auto* zc = app.add_subcommand("zero-crossings", "Sign changes of ((-1)^{s.k}) for k = 0..2^n-1");
  int zc_n = 0;
  std::uint64_t zc_s = 0;
  zc->add_option("--n", zc_n, "Number of bits")->required();
  zc->add_option("--s", zc_s, "Bit string as an integer")->required();

  // table1
  auto* t1 = app.add_subcommand("table1", "Zero-crossing table for n = 3");
  std::string t1_format = "text", t1_out;
  t1->add_option("--format", t1_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  t1->add_option("--out", t1_out, "Write here instead of stdout");

  // band-energy
  auto* be = app.add_subcommand("band-energy", "Probability mass of a sequency band [a, a+M)");
  std::string be_in, be_mode = "exact", be_schedule, be_out, be_realization = "gate_level";
  Index be_a = 0, be_m = 1;
  std::uint64_t be_shots = 1000;
  std::optional<std::uint64_t> be_seed;
  bool be_coherent = false;
  be->add_option("--in", be_in, "Input signal file")->required();
  be->add_option("--a", be_a, "First sequency index of the band")->required();
  be->add_option("--m", be_m, "Band width M")->required();
  be->add_option("--estimate", be_mode, "Estimation mode")->check(CLI::IsMember({"exact", "sampled", "mlqae"}));
  be->add_option("--shots", be_shots, "Shots per round (sampled, mlqae)");
  be->add_option("--seed", be_seed, "RNG seed (falls back to SEQLAB_SEED, then 0)");
  be->add_option("--schedule", be_schedule, "Comma-separated Grover powers for mlqae");
  be->add_option("--realization", be_realization, "Oracle realization")
      ->check(CLI::IsMember({"gate_level", "semantic"}));
  be->add_flag("--coherent", be_coherent, "Skip estimation; summarize the coherent flagged register");
  be->add_option("--out", be_out, "Write JSON here instead of stdout");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "Band-energy scenarios at n=3, b=2, M=3");
  std::string rep_scenario, rep_out;
  rep->add_option("--scenario", rep_scenario, "dc, edge or alternating")
      ->required()
      ->check(CLI::IsMember({"dc", "edge", "alternating"}));
  rep->add_option("--out", rep_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail(Errc::InvalidConfig, e.what());
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  try {
    if (*transform) {
      const Eigen::VectorXd signal = ingest_signal(t_in);
      emit(index_value_csv(run_transform(signal, t_order, t_engine)), t_out);
    } else if (*zc) {
      const BitString s(zc_n, zc_s);
      std::ostringstream os;
      os << "n=" << s.n() << " s=" << s.to_string() << " sequence=";
      const auto seq = sequence_of(s);
      for (Eigen::Index k = 0; k < seq.size(); ++k) os << (k ? " " : "") << seq[k];
      os << " direct=" << zero_crossings_direct(s) << " gray=" << zero_crossings_gray(s)
         << " recursive=" << zero_crossings_recursive(s) << "\n";
      std::cout << os.str();
    } else if (*t1) {
      emit(t1_format == "csv" ? table1_csv() : table1_text(), t1_out);
    } else if (*be) {
      const Eigen::VectorXd signal = ingest_signal(be_in);
      EstimationConfig cfg;
      cfg.mode = parse_estimation_mode(be_mode);
      cfg.shots_per_round = be_shots;
      cfg.rng_seed = resolve_seed(be_seed);
      if (!be_schedule.empty()) cfg.schedule = parse_schedule(be_schedule);
      cfg.realization = be_realization == "semantic" ? OracleRealization::semantic : OracleRealization::gate_level;
      if (be_coherent) {
        const auto out = std::get<CoherentOutput>(run_algorithm1(signal, SequencyBand{be_a, be_m}, false, cfg));
        const Index anc = out.layout.ancilla_mask();
        nlohmann::ordered_json j;
        j["schema_version"] = kReportSchemaVersion;
        j["a"] = be_a;
        j["m"] = be_m;
        j["total_qubits"] = out.layout.total_qubits();
        j["flag_qubit"] = out.layout.flag();
        j["flag_probability"] = flag_probability(out.state, out.layout);
        j["ancilla_residual"] = probability_of(out.state, [anc](Index i) { return (i & anc) != 0; });
        emit(j.dump(2) + "\n", be_out);
      } else {
        emit(to_json(band_energy_report(signal, be_in, be_a, be_m, cfg)), be_out);
      }
    } else if (*rep) {
      const auto report = reproduce(parse_scenario(rep_scenario), rep_out);
      std::cout << to_json(report);
    }
  } catch (const Error& e) {
    return fail(e.code(), e.message());
  } catch (const std::exception& e) {
    return fail(Errc::IOError, e.what());
  }
  return 0;
}
