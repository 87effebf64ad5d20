#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/molecule.hpp"
#include "h2vqe/state.hpp"
#include "test_helpers.hpp"

using namespace h2vqe;

namespace {
constexpr double kPi = 3.14159265358979323846;
const AnsatzFamily kAllFamilies[] = {AnsatzFamily::TwoQubitXYOn01, AnsatzFamily::TwoQubitXYOn00,
                                     AnsatzFamily::OneQubitMinusY, AnsatzFamily::OneQubitPlusY};
}  // namespace

TEST_CASE("reference points of the trial families") {
  SECTION("theta = 0 gives the Hartree-Fock reference") {
    const StateVector s = prepare(AnsatzFamily::TwoQubitXYOn01, 0.0);
    CHECK(std::abs(s[1] - complexd{1.0, 0.0}) == 0.0);
  }
  SECTION("theta = pi/2 rotates |01> fully onto |10>") {
    const StateVector s = prepare(AnsatzFamily::TwoQubitXYOn01, kPi / 2.0);
    CHECK(std::abs(s[2] - complexd{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(s[1]) < 1e-15);
  }
  SECTION("theta = pi/4 on |00> gives the antisymmetric combination") {
    const StateVector s = prepare(AnsatzFamily::TwoQubitXYOn00, kPi / 4.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s[0] - complexd{r, 0.0}) < 1e-15);
    CHECK(std::abs(s[3] - complexd{-r, 0.0}) < 1e-15);
  }
}

TEST_CASE("one-qubit families obey the pinned rotation convention") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = angle(rng);
    const StateVector minus = prepare(AnsatzFamily::OneQubitMinusY, t);
    CHECK(std::abs(minus[0] - complexd{std::cos(t), 0.0}) < 1e-14);
    CHECK(std::abs(minus[1] - complexd{std::sin(t), 0.0}) < 1e-14);
    const StateVector plus = prepare(AnsatzFamily::OneQubitPlusY, t);
    CHECK(std::abs(plus[0] - complexd{std::cos(t), 0.0}) < 1e-14);
    CHECK(std::abs(plus[1] - complexd{-std::sin(t), 0.0}) < 1e-14);
  }
}

TEST_CASE("prepared states are unit norm with real amplitudes") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(-6.3, 6.3);
  for (AnsatzFamily family : kAllFamilies) {
    for (int trial = 0; trial < 50; ++trial) {
      const StateVector s = prepare(family, angle(rng));
      CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
      for (std::size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s[i].imag()) == 0.0);
    }
  }
}

TEST_CASE("two-qubit energies equal one-qubit energies at matching theta") {
  // Under |01> -> |0>, |10> -> |1> the A-block curves coincide; likewise for
  // |00> -> |0>, |11> -> |1> and the B block.
  const auto table = h2vqe::testing::bundled_table();
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> angle(-1.6, 1.6);
  for (const auto& row : {table.row_at(0.30), table.row_at(0.90), table.row_at(1.80)}) {
    const PauliSum h2 = hamiltonian_2q(row);
    const PauliSum ha = hamiltonian_1q_A(row);
    const PauliSum hb = hamiltonian_1q_B(row);
    for (int trial = 0; trial < 100; ++trial) {
      const double t = angle(rng);
      CHECK(expectation(h2, prepare(AnsatzFamily::TwoQubitXYOn01, t)) ==
            Catch::Approx(expectation(ha, prepare(AnsatzFamily::OneQubitMinusY, t)))
                .margin(1e-12));
      CHECK(expectation(h2, prepare(AnsatzFamily::TwoQubitXYOn00, t)) ==
            Catch::Approx(expectation(hb, prepare(AnsatzFamily::OneQubitPlusY, t)))
                .margin(1e-12));
    }
  }
}

TEST_CASE("energy curves have period pi in theta") {
  const auto table = h2vqe::testing::bundled_table();
  const auto& row = table.row_at(0.60);
  const PauliSum hs[] = {hamiltonian_2q(row), hamiltonian_2q(row), hamiltonian_1q_A(row),
                         hamiltonian_1q_B(row)};
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> angle(-1.6, 1.6);
  for (int f = 0; f < 4; ++f) {
    for (int trial = 0; trial < 50; ++trial) {
      const double t = angle(rng);
      const double e0 = expectation(hs[f], prepare(kAllFamilies[f], t));
      const double e1 = expectation(hs[f], prepare(kAllFamilies[f], t + kPi));
      CHECK(e0 == Catch::Approx(e1).margin(1e-12));
    }
  }
}

TEST_CASE("subspace images") {
  CHECK(subspace_image(AnsatzFamily::TwoQubitXYOn01) == std::vector<std::string>{"01", "10"});
  CHECK(subspace_image(AnsatzFamily::TwoQubitXYOn00) == std::vector<std::string>{"00", "11"});
  CHECK_THROWS_AS(subspace_image(AnsatzFamily::OneQubitMinusY), ValidationError);
}

TEST_CASE("two-qubit families never leave their subspace") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> angle(-6.3, 6.3);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector a = prepare(AnsatzFamily::TwoQubitXYOn01, angle(rng));
    CHECK(std::abs(a[0]) == 0.0);
    CHECK(std::abs(a[3]) == 0.0);
    const StateVector b = prepare(AnsatzFamily::TwoQubitXYOn00, angle(rng));
    CHECK(std::abs(b[1]) == 0.0);
    CHECK(std::abs(b[2]) == 0.0);
  }
}
