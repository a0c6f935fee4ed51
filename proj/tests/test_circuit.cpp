#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "seqlab/circuit.hpp"
#include "seqlab/errors.hpp"
#include "test_support.hpp"

using namespace seqlab;

namespace {

Circuit random_circuit(std::mt19937_64& rng, int n, int length) {
  Circuit c(n);
  std::uniform_int_distribution<int> kind(0, n >= 3 ? 4 : (n == 2 ? 3 : 1));
  std::uniform_int_distribution<int> qubit(0, n - 1);
  auto distinct = [&](int count) {
    std::vector<int> qs;
    while (static_cast<int>(qs.size()) < count) {
      const int q = qubit(rng);
      if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    }
    return qs;
  };
  for (int i = 0; i < length; ++i) {
    switch (kind(rng)) {
      case 0: c.append(GateOp::h(qubit(rng))); break;
      case 1: c.append(GateOp::x(qubit(rng))); break;
      case 2: { auto q = distinct(2); c.append(GateOp::cnot(q[0], q[1])); break; }
      case 3: { auto q = distinct(2); c.append(GateOp::swap(q[0], q[1])); break; }
      default: { auto q = distinct(3); c.append(GateOp::toffoli(q[0], q[1], q[2])); break; }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("adjoint", "[gate-ir]") {
  Circuit c(2);
  c.append(GateOp::h(0)).append(GateOp::cnot(0, 1));
  const Circuit adj = adjoint(c);
  REQUIRE(adj.size() == 2);
  CHECK(adj.ops()[0] == GateOp::cnot(0, 1));
  CHECK(adj.ops()[1] == GateOp::h(0));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit r = random_circuit(rng, 3, 25);
    const Circuit back = adjoint(adjoint(r));
    REQUIRE(back.ops() == r.ops());

    const auto psi = StateVector::from_amplitudes(testing::random_state(rng, 3));
    const auto round = apply(adjoint(r), apply(r, psi));
    REQUIRE((round.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("opaque nodes swap forward and adjoint", "[gate-ir]") {
  auto rotate = [](Eigen::VectorXcd& a) {
    const auto first = a[0];
    for (Eigen::Index i = 0; i + 1 < a.size(); ++i) a[i] = a[i + 1];
    a[a.size() - 1] = first;
  };
  auto unrotate = [](Eigen::VectorXcd& a) {
    const auto last = a[a.size() - 1];
    for (Eigen::Index i = a.size() - 1; i > 0; --i) a[i] = a[i - 1];
    a[0] = last;
  };
  Circuit c(3);
  c.append(GateOp::h(1)).append(GateOp::opaque("cycle", {0, 1, 2}, rotate, unrotate));
  std::mt19937_64 rng(5);
  const auto psi = StateVector::from_amplitudes(testing::random_state(rng, 3));
  const auto round = apply(adjoint(c), apply(c, psi));
  CHECK((round.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(gate_census(c).opaque == 1);
  CHECK(dump(c) == "H 1\nOPAQUE 0 1 2 # cycle\n");

  try {
    unitary_matrix(c);
    FAIL("expected OpaqueNotMaterializable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OpaqueNotMaterializable);
  }
}

TEST_CASE("unitary_matrix", "[gate-ir]") {
  CHECK(unitary_matrix(Circuit(2)).isApprox(Eigen::MatrixXcd::Identity(4, 4)));

  Circuit h(1);
  h.append(GateOp::h(0));
  Eigen::MatrixXcd expect(2, 2);
  expect << 1, 1, 1, -1;
  expect /= std::sqrt(2.0);
  CHECK((unitary_matrix(h) - expect).cwiseAbs().maxCoeff() < 1e-15);

  try {
    unitary_matrix(Circuit(kMaxUnitaryQubits + 1));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("unitarity and matrix/statevector agreement", "[gate-ir][property]") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Circuit c = random_circuit(rng, n, 4 * n);
      const Eigen::MatrixXcd u = unitary_matrix(c);
      const auto dim = u.rows();
      REQUIRE((u * u.adjoint() - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);

      const Eigen::VectorXcd psi = testing::random_state(rng, n);
      const auto out = apply(c, StateVector::from_amplitudes(psi));
      REQUIRE((out.amplitudes() - u * psi).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("circuit validation and census", "[gate-ir]") {
  Circuit c(2);
  CHECK_THROWS_AS(c.append(GateOp::x(2)), Error);
  CHECK(gate_census(Circuit(4)) == GateCensus{});
  CHECK(gate_census(Circuit(4)).total() == 0);

  Circuit big(3);
  CHECK_THROWS_AS(c.append(big), Error);
  CHECK_NOTHROW(big.append(c));
}

TEST_CASE("register layout", "[gate-ir]") {
  const auto l = RegisterLayout::for_data(4);
  CHECK(l.flag() == 4);
  CHECK(l.temp1() == 5);
  CHECK(l.temp2() == 6);
  CHECK(l.carry(0) == 7);
  CHECK(l.carry(l.n_carries() - 1) == 9);
  CHECK(l.total_qubits() == 10);
  CHECK(l.ancilla_mask() == 0b1111100000u);
  CHECK(RegisterLayout::for_data(1).total_qubits() == 4);
  CHECK_THROWS_AS(RegisterLayout::for_data(0), Error);
}
