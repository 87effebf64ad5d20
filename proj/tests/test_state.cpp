#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "h2vqe/molecule.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/state.hpp"
#include "test_helpers.hpp"

using namespace h2vqe;

namespace {

double quadratic_form(const PauliSum& h, const StateVector& s) {
  const Matrix m = matrix_of_sum(h);
  complexd acc{0.0, 0.0};
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) acc += std::conj(s[i]) * m(i, j) * s[j];
  return acc.real();
}

}  // namespace

TEST_CASE("basis_state places the amplitude at the labeled element") {
  CHECK(std::abs(basis_state("01")[1] - complexd{1.0, 0.0}) == 0.0);
  CHECK(std::abs(basis_state("11")[3] - complexd{1.0, 0.0}) == 0.0);
  CHECK(basis_state("0").dim() == 2);
  CHECK(std::abs(basis_state("0")[0] - complexd{1.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(basis_state("02"), ValidationError);
  CHECK_THROWS_AS(basis_state("012"), ValidationError);
}

TEST_CASE("ExpXY matches its closed-form action") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  for (int trial = 0; trial < 200; ++trial) {
    const double t = angle(rng);
    const double c = std::cos(t), s = std::sin(t);

    const StateVector on01 = apply(Gate::exp_xy(t), basis_state("01"));
    CHECK(std::abs(on01[1] - complexd{c, 0.0}) < 1e-15);
    CHECK(std::abs(on01[2] - complexd{s, 0.0}) < 1e-15);

    const StateVector on00 = apply(Gate::exp_xy(t), basis_state("00"));
    CHECK(std::abs(on00[0] - complexd{c, 0.0}) < 1e-15);
    CHECK(std::abs(on00[3] - complexd{-s, 0.0}) < 1e-15);
  }
}

TEST_CASE("ExpXY(0) is the identity") {
  std::mt19937_64 rng(19);
  const StateVector s = h2vqe::testing::random_state(2, rng);
  const StateVector out = apply(Gate::exp_xy(0.0), s);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(out[i] - s[i]) == 0.0);
}

TEST_CASE("every gate preserves the norm") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-6.3, 6.3);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector s2 = h2vqe::testing::random_state(2, rng);
    const StateVector s1 = h2vqe::testing::random_state(1, rng);
    const double t = angle(rng);

    const Gate two_qubit[] = {Gate::x(1), Gate::y(2),       Gate::z(1),
                              Gate::h(2), Gate::rx(t, 1),   Gate::ry(t, 2),
                              Gate::rz(t, 1), Gate::cnot(1, 2), Gate::cnot(2, 1),
                              Gate::exp_xy(t)};
    for (const Gate& g : two_qubit)
      CHECK(std::abs(apply(g, s2).norm_squared() - 1.0) < 1e-12);

    const Gate one_qubit[] = {Gate::x(1),     Gate::y(1),     Gate::z(1),
                              Gate::h(1),     Gate::rx(t, 1), Gate::ry(t, 1),
                              Gate::rz(t, 1)};
    for (const Gate& g : one_qubit)
      CHECK(std::abs(apply(g, s1).norm_squared() - 1.0) < 1e-12);
  }
}

TEST_CASE("gate arity mismatches are rejected") {
  CHECK_THROWS_AS(apply(Gate::cnot(1, 2), basis_state("0")), DimensionError);
  CHECK_THROWS_AS(apply(Gate::exp_xy(0.5), basis_state("1")), DimensionError);
  CHECK_THROWS_AS(apply(Gate::x(2), basis_state("0")), DimensionError);
  CHECK_THROWS_AS(apply(Gate::cnot(1, 1), basis_state("01")), ValidationError);
}

TEST_CASE("ExpXY composes additively in its angle") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  for (const char* ref : {"01", "00"}) {
    for (int trial = 0; trial < 50; ++trial) {
      const double t1 = angle(rng), t2 = angle(rng);
      const StateVector chained =
          apply(Gate::exp_xy(t1), apply(Gate::exp_xy(t2), basis_state(ref)));
      const StateVector direct = apply(Gate::exp_xy(t1 + t2), basis_state(ref));
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(chained[i] - direct[i]) < 1e-12);
    }
  }
}

TEST_CASE("expectation values on reference states") {
  CHECK(expectation(PauliString("ZZ"), basis_state("01")) == -1.0);
  const StateVector bell = StateVector::normalized({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
  CHECK(expectation(PauliString("XX"), bell) == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("expectation of the R=0.70 Hamiltonian at theta = 0") {
  const auto table = h2vqe::testing::bundled_table();
  const CoefficientRow& row = table.row_at(0.70);
  const StateVector psi = apply(Gate::exp_xy(0.0), basis_state("01"));
  CHECK(expectation(hamiltonian_2q(row), psi) == Catch::Approx(-0.19151).margin(1e-12));
}

TEST_CASE("expectation equals the dense quadratic form") {
  std::mt19937_64 rng(31);
  const auto table = h2vqe::testing::bundled_table();
  const PauliSum h2 = hamiltonian_2q(table.row_at(1.20));
  const PauliSum h1 = hamiltonian_1q_A(table.row_at(1.20));
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector s2 = h2vqe::testing::random_state(2, rng);
    CHECK(expectation(h2, s2) == Catch::Approx(quadratic_form(h2, s2)).margin(1e-12));
    const StateVector s1 = h2vqe::testing::random_state(1, rng);
    CHECK(expectation(h1, s1) == Catch::Approx(quadratic_form(h1, s1)).margin(1e-12));
  }
}

TEST_CASE("Pauli expectation stays within [-1, 1]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector s = h2vqe::testing::random_state(2, rng);
    const double v = expectation(PauliString("XX"), s);
    CHECK(v >= -1.0 - 1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
}

TEST_CASE("expectation rejects dimension mismatches") {
  CHECK_THROWS_AS(expectation(PauliString("ZZ"), basis_state("0")), DimensionError);
  CHECK_THROWS_AS(expectation(PauliSum{{1.0, PauliString("Z")}}, basis_state("01")),
                  DimensionError);
}
