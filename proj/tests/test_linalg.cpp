#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "h2vqe/linalg.hpp"
#include "test_helpers.hpp"

using namespace h2vqe;

namespace {

// Independent spectral checks: the eigenvalue multiset of a Hermitian matrix
// must reproduce tr(M) and ||M||_F^2 regardless of how it was computed.
void check_spectral_sums(const Matrix& m, const std::vector<double>& eig) {
  double trace = 0.0, fro2 = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    trace += m(i, i).real();
    for (std::size_t j = 0; j < m.dim(); ++j) fro2 += std::norm(m(i, j));
  }
  double sum = 0.0, sum2 = 0.0;
  for (double v : eig) {
    sum += v;
    sum2 += v * v;
  }
  CHECK(std::abs(sum - trace) < 1e-10);
  CHECK(std::abs(sum2 - fro2) < 1e-9);
}

}  // namespace

TEST_CASE("closed-form 2x2 eigenvalues") {
  // [[d1, c], [c, d2]] -> (d1+d2)/2 -/+ sqrt(((d1-d2)/2)^2 + c^2)
  const double d1 = 0.3, d2 = -1.1, c = 0.25;
  const auto [lo, hi] = eigvals_2x2(d1, d2, complexd{c, 0.0});
  const double mid = 0.5 * (d1 + d2);
  const double h = std::sqrt(0.25 * (d1 - d2) * (d1 - d2) + c * c);
  CHECK(lo == Catch::Approx(mid - h).margin(1e-15));
  CHECK(hi == Catch::Approx(mid + h).margin(1e-15));
}

TEST_CASE("exact_spectrum of the identity") {
  Matrix id = Matrix::identity(2);
  const auto eig = exact_spectrum(id);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == Catch::Approx(1.0).margin(1e-14));
  CHECK(eig[1] == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("exact_spectrum rejects non-Hermitian input") {
  Matrix m(2);
  m(0, 0) = 1.0;
  m(0, 1) = complexd{0.0, 1.0};
  m(1, 0) = complexd{0.0, 1.0};  // should be -i for hermiticity
  m(1, 1) = 2.0;
  CHECK_THROWS_AS(exact_spectrum(m), ValidationError);
}

TEST_CASE("exact_spectrum rejects dimensions above 8") {
  CHECK_THROWS_AS(exact_spectrum(Matrix::identity(16)), DimensionError);
}

TEST_CASE("jacobi eigensystem on random Hermitian matrices") {
  std::mt19937_64 rng(7);
  for (std::size_t dim : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix m = h2vqe::testing::random_hermitian(dim, rng);
      const Eigensystem es = jacobi_eigensystem(m);
      CHECK(es.residual <= 1e-10);
      CHECK(std::is_sorted(es.values.begin(), es.values.end()));
      check_spectral_sums(m, es.values);

      // Eigenvector columns must be orthonormal.
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
          complexd dot{0.0, 0.0};
          for (std::size_t i = 0; i < dim; ++i)
            dot += std::conj(es.vectors(i, a)) * es.vectors(i, b);
          CHECK(std::abs(dot - (a == b ? complexd{1.0, 0.0} : complexd{})) < 1e-11);
        }
    }
  }
}

TEST_CASE("closed form and Jacobi agree on 2x2 Hermitian matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = h2vqe::testing::random_hermitian(2, rng);
    const auto [lo, hi] = eigvals_2x2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
    const auto eig = jacobi_eigensystem(m).values;
    CHECK(std::abs(eig[0] - lo) < 1e-12);
    CHECK(std::abs(eig[1] - hi) < 1e-12);
  }
}

TEST_CASE("eigenvalues scale linearly with the matrix") {
  std::mt19937_64 rng(13);
  const Matrix m = h2vqe::testing::random_hermitian(4, rng);
  Matrix scaled = m;
  scaled *= complexd{2.5, 0.0};
  const auto base = exact_spectrum(m);
  const auto stretched = exact_spectrum(scaled);
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(stretched[i] == Catch::Approx(2.5 * base[i]).margin(1e-11));
}
