#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "h2vqe/errors.hpp"
#include "h2vqe/linalg.hpp"
#include "h2vqe/molecule.hpp"
#include "h2vqe/pauli.hpp"

namespace h2vqe {

/// Exact spectra of one tabulated Hamiltonian, computed along two independent
/// routes: closed-form 2x2 block eigenvalues, and cyclic Jacobi on the full
/// 4x4 realization. Both must agree for a report to be produced.
struct SpectrumReport {
  double R = 0.0;
  std::array<double, 4> eigenvalues_4q{};      // ascending
  std::array<double, 2> eigenvalues_A{};       // ascending, span{|01>, |10>}
  std::array<double, 2> eigenvalues_B{};       // ascending, span{|00>, |11>}
  double residual = 0.0;                       // worst reconstruction/eigenpair error
};

inline SpectrumReport full_report(const CoefficientRow& row) {
  SpectrumReport report;
  report.R = row.R;

  // Route 1: block decomposition plus the closed 2x2 form.
  const PauliSum h2 = hamiltonian_2q(row);
  const auto [block_a, block_b] = block_decompose_h2(h2);
  const auto ea = eigvals_2x2(block_a(0, 0).real(), block_a(1, 1).real(), block_a(0, 1));
  const auto eb = eigvals_2x2(block_b(0, 0).real(), block_b(1, 1).real(), block_b(0, 1));
  report.eigenvalues_A = {ea.first, ea.second};
  report.eigenvalues_B = {eb.first, eb.second};

  // Route 2: Jacobi on the dense realization, eigenvectors included.
  const Matrix m4 = matrix_of_sum(h2);
  const Eigensystem es = jacobi_eigensystem(m4);
  std::copy(es.values.begin(), es.values.end(), report.eigenvalues_4q.begin());
  report.residual = es.residual;

  // Worst eigenpair residual ||Hv - lambda v||.
  for (std::size_t k = 0; k < 4; ++k) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      complexd hv{0.0, 0.0};
      for (std::size_t j = 0; j < 4; ++j) hv += m4(i, j) * es.vectors(j, k);
      r2 += std::norm(hv - es.values[k] * es.vectors(i, k));
    }
    report.residual = std::max(report.residual, std::sqrt(r2));
  }

  // The two routes must agree before the report leaves the oracle.
  std::array<double, 4> merged = {ea.first, ea.second, eb.first, eb.second};
  std::sort(merged.begin(), merged.end());
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(merged[k] - report.eigenvalues_4q[k]) > 1e-10)
      throw Error("full_report: closed-form and Jacobi spectra disagree beyond 1e-10");
  if (report.residual > 1e-10)
    throw Error("full_report: eigensystem residual above 1e-10");
  return report;
}

}  // namespace h2vqe
