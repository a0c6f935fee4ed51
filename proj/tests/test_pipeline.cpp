#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "seqlab/errors.hpp"
#include "seqlab/pipeline.hpp"
#include "seqlab/walsh.hpp"
#include "test_support.hpp"

using namespace seqlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected seqlab::Error");
  return Errc::IOError;
}

double classical_mass(const Eigen::VectorXd& x, SequencyBand band) {
  return band_energy_classical(fwht_sequency(Eigen::VectorXd(x / x.norm())), band);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("seqlab_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("table1 matches the golden fixture", "[pipeline]") {
  CHECK(table1_csv() == slurp(std::filesystem::path(SEQLAB_TEST_DATA_DIR) / "table1.csv"));

  const auto rows = table1_rows();
  REQUIRE(rows.size() == 8);
  CHECK(rows[3].s == "011");
  Eigen::VectorXi seq011(8);
  seq011 << 1, -1, -1, 1, 1, -1, -1, 1;
  CHECK(rows[3].sequence == seq011);
  CHECK(rows[3].zero_crossings == 4);
  CHECK(rows[7].zero_crossings == 5);
  std::vector<Index> counts;
  for (const auto& r : rows) counts.push_back(r.zero_crossings);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(table1_text().find("011") != std::string::npos);
}

TEST_CASE("run_algorithm1 branches", "[pipeline]") {
  const Eigen::VectorXd dc = Eigen::VectorXd::Ones(8);
  const auto coherent = run_algorithm1(dc, {2, 3}, false);
  REQUIRE(std::holds_alternative<CoherentOutput>(coherent));
  const auto& out = std::get<CoherentOutput>(coherent);
  CHECK(out.layout == RegisterLayout::for_data(3));
  CHECK(out.state.n_qubits() == out.layout.total_qubits());
  CHECK(flag_probability(out.state, out.layout) < 1e-12);
  CHECK(std::abs(out.state.amplitudes().norm() - 1.0) < 1e-12);

  const auto est = run_algorithm1(dc, {0, 2}, true);
  REQUIRE(std::holds_alternative<EstimationResult>(est));
  CHECK(std::get<EstimationResult>(est).p_est == 1.0);

  const auto alt = run_algorithm1(scenario_signal(Scenario::alternating), {5, 3}, true);
  CHECK(std::abs(std::get<EstimationResult>(alt).p_est - 1.0) < 1e-12);

  CHECK(code_of([&] { run_algorithm1(dc, {7, 2}, false); }) == Errc::BandOutOfRange);
  CHECK(code_of([] { run_algorithm1(Eigen::VectorXd::Ones(6), {0, 1}, true); }) == Errc::NotPowerOfTwo);
}

TEST_CASE("full-pipeline agreement with the classical oracle", "[pipeline][property]") {
  std::mt19937_64 rng(61);
  for (int n = 2; n <= 4; ++n) {
    const Index N = Index{1} << n;
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd x = testing::random_signal(rng, n);
      for (Index a = 0; a < N; ++a) {
        for (Index m = 1; a + m <= N; ++m) {
          const auto r = std::get<EstimationResult>(run_algorithm1(x, {a, m}, true));
          REQUIRE(std::abs(r.p_est - classical_mass(x, {a, m})) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("scenarios", "[pipeline]") {
  const auto dc = reproduce(Scenario::dc);
  CHECK(std::abs(dc.band_probabilities[0] - 1.0) < 1e-12);
  CHECK(std::abs(dc.band_probabilities[1]) < 1e-12);
  CHECK(std::abs(dc.band_probabilities[2]) < 1e-12);

  const auto alt = reproduce(Scenario::alternating);
  CHECK(std::abs(alt.band_probabilities[0]) < 1e-12);
  CHECK(std::abs(alt.band_probabilities[1]) < 1e-12);
  CHECK(std::abs(alt.band_probabilities[2] - 1.0) < 1e-12);

  const auto edge = reproduce(Scenario::edge);
  const Eigen::VectorXd e = scenario_signal(Scenario::edge);
  CHECK(e == (Eigen::VectorXd(8) << 1, 1, 1, 1, 1, 1, -1, -1).finished());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(edge.band_probabilities[i] - classical_mass(e, edge.bands()[i])) < 1e-12);
  }
  CHECK(edge.band_probabilities[0] > 0.0);
  CHECK(edge.band_probabilities[1] > 0.0);

  CHECK(parse_scenario("edge") == Scenario::edge);
  CHECK(code_of([] { parse_scenario("ramp"); }) == Errc::InvalidConfig);
}

TEST_CASE("report closure", "[pipeline][property]") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const Index N = Index{1} << n;
    const Eigen::VectorXd x = testing::random_signal(rng, n);
    std::uniform_int_distribution<Index> pick_b(0, N - 1);
    const Index b = pick_b(rng);
    std::uniform_int_distribution<Index> pick_m(1, N - b);
    const auto r = band_energy_report(x, "random", b, pick_m(rng));
    const double sum = r.band_probabilities[0] + r.band_probabilities[1] + r.band_probabilities[2];
    REQUIRE(std::abs(sum - 1.0) < 1e-9);
  }

  EstimationConfig c;
  c.mode = EstimationMode::sampled;
  c.shots_per_round = 20000;
  c.rng_seed = 3;
  const auto s = band_energy_report(scenario_signal(Scenario::edge), "edge", 2, 3, c);
  const double sum = s.band_probabilities[0] + s.band_probabilities[1] + s.band_probabilities[2];
  CHECK(std::abs(sum - 1.0) < 0.03);
  CHECK(s.shots == 20000);

  CHECK(code_of([] { band_energy_report(Eigen::VectorXd::Ones(8), "x", 6, 3); }) == Errc::BandOutOfRange);
  CHECK(code_of([] { band_energy_report(Eigen::VectorXd::Ones(8), "x", 2, 0); }) == Errc::BandOutOfRange);
}

TEST_CASE("report serialization", "[pipeline]") {
  const auto r = reproduce(Scenario::dc);
  CHECK(band_energy_csv(r) == "index,value\n0,1\n1,0\n2,0\n");
  CHECK(index_value_csv(scenario_signal(Scenario::alternating)).rfind("index,value\n0,1\n1,-1\n", 0) == 0);
  CHECK(format_real(0.1) == "0.10000000000000001");

  const std::string json = to_json(r);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find(r.signal_hash) != std::string::npos);
  CHECK(r.signal_hash.rfind("fnv1a64:", 0) == 0);
  CHECK(r.signal_hash.size() == 8 + 16);
  CHECK(signal_hash(scenario_signal(Scenario::dc)) != signal_hash(scenario_signal(Scenario::edge)));

  const std::string svg = bar_chart_svg({1.0, -0.5}, {"a", "<b>"}, "t&t");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("&lt;b&gt;") != std::string::npos);
  CHECK(svg.find("t&amp;t") != std::string::npos);
}

TEST_CASE("reproduce writes artifacts deterministically", "[pipeline]") {
  const auto d1 = scratch_dir("repro1");
  const auto d2 = scratch_dir("repro2");
  reproduce(Scenario::edge, d1);
  reproduce(Scenario::edge, d2);
  for (const char* stem : {"time_domain", "sequency_spectrum", "band_energy"}) {
    for (const char* ext : {".csv", ".svg"}) {
      const std::string f = std::string("edge_") + stem + ext;
      REQUIRE(std::filesystem::exists(d1 / f));
      CHECK(slurp(d1 / f) == slurp(d2 / f));
    }
  }
  CHECK(slurp(d1 / "edge_report.json") == slurp(d2 / "edge_report.json"));
  CHECK(slurp(d1 / "edge_report.json") == to_json(reproduce(Scenario::edge)));

  // determinism holds for seeded stochastic modes too
  EstimationConfig c;
  c.mode = EstimationMode::mlqae;
  c.shots_per_round = 300;
  c.rng_seed = 42;
  const auto x = scenario_signal(Scenario::edge);
  CHECK(to_json(band_energy_report(x, "edge", 2, 3, c)) == to_json(band_energy_report(x, "edge", 2, 3, c)));

  const auto file = scratch_dir("repro_file");
  write_file(file, "x");
  CHECK(code_of([&] { reproduce(Scenario::dc, file / "sub"); }) == Errc::IOError);
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
  std::filesystem::remove_all(file);
}

TEST_CASE("parse_signal and ingest_signal", "[pipeline]") {
  CHECK(parse_signal("1\n1\n1\n1\n") == Eigen::VectorXd::Ones(4));
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(8);
  e0[0] = 1;
  CHECK(parse_signal("1,0,0,0,0,0,0,0") == e0);
  CHECK(parse_signal(" 0.5 , -2\r\n3e-1,4\n\n") == (Eigen::VectorXd(4) << 0.5, -2, 0.3, 4).finished());

  CHECK(code_of([] { parse_signal("1\n2\n3\n4\n5\n6\n"); }) == Errc::NotPowerOfTwo);
  CHECK(code_of([] { parse_signal("1\nnan\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_signal("1\ninf\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_signal("1\nabc\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_signal("1x,2\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_signal(""); }) == Errc::ParseError);
  CHECK(code_of([] { parse_signal("0,0,0,0"); }) == Errc::ZeroVector);

  const std::filesystem::path data(SEQLAB_TEST_DATA_DIR);
  CHECK(ingest_signal(data / "dc.csv") == Eigen::VectorXd::Ones(8));
  CHECK(ingest_signal(data / "alternating.csv") == scenario_signal(Scenario::alternating));
  CHECK(code_of([&] { ingest_signal(data / "missing.csv"); }) == Errc::IOError);
}
