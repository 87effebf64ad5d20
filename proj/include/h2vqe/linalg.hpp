#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "h2vqe/errors.hpp"

namespace h2vqe {

using complexd = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, complexd{0.0, 0.0}) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  complexd& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const complexd& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    if (o.dim_ != dim_) throw DimensionError("matrix dimension mismatch in addition");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }

  Matrix& operator*=(complexd s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend Matrix operator*(const Matrix& l, const Matrix& r) {
    if (l.dim_ != r.dim_) throw DimensionError("matrix dimension mismatch in product");
    Matrix out(l.dim_);
    for (std::size_t i = 0; i < l.dim_; ++i)
      for (std::size_t k = 0; k < l.dim_; ++k) {
        const complexd lik = l(i, k);
        if (lik == complexd{}) continue;
        for (std::size_t j = 0; j < l.dim_; ++j) out(i, j) += lik * r(k, j);
      }
    return out;
  }

  Matrix adjoint() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  /// max_ij |A_ij - conj(A_ji)|
  double hermiticity_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  double max_abs_diff(const Matrix& o) const {
    if (o.dim_ != dim_) throw DimensionError("matrix dimension mismatch in comparison");
    double r = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) r = std::max(r, std::abs(a_[k] - o.a_[k]));
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<complexd> a_;
};

inline void require_hermitian(const Matrix& m, double tol, const char* what) {
  if (m.hermiticity_residual() > tol)
    throw ValidationError(std::string(what) + ": matrix is not Hermitian");
}

/// Eigenvalues (ascending) and matching eigenvector columns of a Hermitian matrix.
struct Eigensystem {
  std::vector<double> values;
  Matrix vectors;    // column k is the eigenvector of values[k]
  double residual;   // max entry of |M - V diag(values) V^dagger|
};

/// Ascending eigenvalues of a real-diagonal 2x2 Hermitian block [[d1, c], [conj(c), d2]].
inline std::pair<double, double> eigvals_2x2(double d1, double d2, complexd c) {
  const double mean = 0.5 * (d1 + d2);
  const double h = std::hypot(0.5 * (d1 - d2), std::abs(c));
  return {mean - h, mean + h};
}

namespace detail {

inline double offdiag_norm(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

inline Eigensystem sorted_eigensystem(const Matrix& original, Matrix diag, Matrix vecs) {
  const std::size_t n = diag.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return diag(a, a).real() < diag(b, b).real(); });

  Eigensystem es;
  es.values.resize(n);
  es.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = diag(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = vecs(i, order[k]);
  }

  Matrix recon(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      complexd acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k)
        acc += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
      recon(i, j) = acc;
    }
  es.residual = recon.max_abs_diff(original);
  return es;
}

}  // namespace detail

/// Cyclic Jacobi diagonalization for complex Hermitian matrices.
/// Sweeps until the off-diagonal norm drops below tol * max(1, ||M||_F).
inline Eigensystem jacobi_eigensystem(const Matrix& m, double tol = 1e-14, int max_sweeps = 64) {
  require_hermitian(m, 1e-12, "jacobi_eigensystem");
  const std::size_t n = m.dim();
  Matrix a = m;
  Matrix v = Matrix::identity(n);

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += std::norm(a(i, j));
  scale = std::max(1.0, std::sqrt(scale));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (detail::offdiag_norm(a) <= tol * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complexd apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= tol * scale / static_cast<double>(n * n)) continue;

        // Conjugate phase turns the pivot block into a real symmetric one:
        // with g = conj(apq/|apq|), G = [[c, s], [-s*g, c*g]] is unitary and
        // G^dagger A G has a real pivot block, zeroed by the usual real rotation.
        const complexd g = std::conj(apq / r);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const complexd akp = a(k, p);
          const complexd akq = a(k, q);
          a(k, p) = c * akp - s * g * akq;
          a(k, q) = s * akp + c * g * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complexd apk = a(p, k);
          const complexd aqk = a(q, k);
          a(p, k) = c * apk - s * std::conj(g) * aqk;
          a(q, k) = s * apk + c * std::conj(g) * aqk;
        }
        a(p, q) = complexd{0.0, 0.0};
        a(q, p) = complexd{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
          const complexd vkp = v(k, p);
          const complexd vkq = v(k, q);
          v(k, p) = c * vkp - s * g * vkq;
          v(k, q) = s * vkp + c * g * vkq;
        }
      }
    }
  }
  return detail::sorted_eigensystem(m, a, v);
}

/// Full eigensystem of a Hermitian matrix of dimension <= 8.
/// 2x2 inputs use the closed form; larger ones go through cyclic Jacobi.
inline Eigensystem exact_eigensystem(const Matrix& m) {
  if (m.dim() == 0 || m.dim() > 8)
    throw DimensionError("exact_eigensystem: dimension must be in [1, 8]");
  require_hermitian(m, 1e-12, "exact_eigensystem");

  if (m.dim() == 1) {
    Eigensystem es;
    es.values = {m(0, 0).real()};
    es.vectors = Matrix::identity(1);
    es.residual = 0.0;
    return es;
  }
  if (m.dim() == 2) {
    const double d1 = m(0, 0).real();
    const double d2 = m(1, 1).real();
    const complexd c = m(0, 1);
    const auto [lo, hi] = eigvals_2x2(d1, d2, c);

    Matrix vecs(2);
    if (std::abs(c) < 1e-300) {
      // Already diagonal; keep basis order consistent with ascending values.
      const bool swap = d1 > d2;
      vecs(0, 0) = swap ? 0.0 : 1.0;
      vecs(1, 0) = swap ? 1.0 : 0.0;
      vecs(0, 1) = swap ? 1.0 : 0.0;
      vecs(1, 1) = swap ? 0.0 : 1.0;
    } else {
      for (int k = 0; k < 2; ++k) {
        const double lambda = (k == 0) ? lo : hi;
        complexd v0 = c;
        complexd v1 = complexd{lambda - d1, 0.0};
        const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
        vecs(0, k) = v0 / nrm;
        vecs(1, k) = v1 / nrm;
      }
    }
    Matrix diag(2);
    diag(0, 0) = lo;
    diag(1, 1) = hi;
    return detail::sorted_eigensystem(m, diag, vecs);
  }
  return jacobi_eigensystem(m);
}

/// Ascending eigenvalues of a Hermitian matrix of dimension <= 8.
/// Post: the implied reconstruction residual is at most 1e-10.
inline std::vector<double> exact_spectrum(const Matrix& m) {
  Eigensystem es = exact_eigensystem(m);
  if (es.residual > 1e-10)
    throw Error("exact_spectrum: reconstruction residual above 1e-10");
  return es.values;
}

}  // namespace h2vqe
