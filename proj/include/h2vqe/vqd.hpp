#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/errors.hpp"
#include "h2vqe/molecule.hpp"
#include "h2vqe/nelder_mead.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/state.hpp"

namespace h2vqe {

enum class Formulation { TwoQubit, OneQubit };
enum class Block { A, B };

inline const char* to_string(Formulation f) {
  return f == Formulation::TwoQubit ? "two_qubit" : "one_qubit";
}
inline const char* to_string(Block b) { return b == Block::A ? "A" : "B"; }

inline Block block_of(AnsatzFamily family) {
  return (family == AnsatzFamily::TwoQubitXYOn01 || family == AnsatzFamily::OneQubitMinusY)
             ? Block::A
             : Block::B;
}

inline Formulation formulation_of(AnsatzFamily family) {
  return ansatz_num_qubits(family) == 2 ? Formulation::TwoQubit : Formulation::OneQubit;
}

inline AnsatzFamily family_for(Formulation f, Block b) {
  if (f == Formulation::TwoQubit)
    return b == Block::A ? AnsatzFamily::TwoQubitXYOn01 : AnsatzFamily::TwoQubitXYOn00;
  return b == Block::A ? AnsatzFamily::OneQubitMinusY : AnsatzFamily::OneQubitPlusY;
}

/// Penalty term beta |phi><phi| added to the objective to push an already
/// found eigenstate out of the search.
struct DeflationTerm {
  double beta;  // Hartree, > 0
  StateVector state;
};

/// One solved curve point.
struct EnergyPoint {
  double R = 0.0;  // Angstrom; stamped by the sweep drivers
  Formulation formulation = Formulation::OneQubit;
  Block block = Block::A;
  int level = 0;  // 0 = block ground, 1 = block excited
  double energy = 0.0;
  double theta_opt = 0.0;
  int evaluations = 0;
  bool converged = true;
};

/// Requested penalty weight cannot lift the ground state above the target
/// level; carries the minimum that would.
struct BetaTooSmallError : Error {
  double beta;
  double required_above;
  BetaTooSmallError(double beta_in, double spread)
      : Error("deflation weight " + std::to_string(beta_in) + " Ha is too small: it must exceed " +
              "the spectral spread " + std::to_string(spread) +
              " Ha of the Hamiltonian on the ansatz subspace, or the deflated minimum stays at "
              "the ground state"),
        beta(beta_in),
        required_above(spread) {}
};

/// theta -> <psi(theta)|H|psi(theta)> + sum_i beta_i |<phi_i|psi(theta)>|^2
inline std::function<double(double)> vqe_objective(const PauliSum& h, AnsatzFamily family,
                                                   std::vector<DeflationTerm> deflation = {}) {
  if (h.num_qubits() != ansatz_num_qubits(family))
    throw DimensionError("vqe_objective: Hamiltonian and ansatz qubit counts differ");
  for (const auto& d : deflation) {
    if (d.state.num_qubits() != ansatz_num_qubits(family))
      throw DimensionError("vqe_objective: deflation state dimension mismatch");
    if (!(d.beta > 0.0)) throw ValidationError("vqe_objective: deflation beta must be > 0");
  }
  return [h, family, deflation = std::move(deflation)](double theta) {
    const StateVector psi = prepare(family, theta);
    double value = expectation(h, psi);
    for (const auto& d : deflation) value += d.beta * std::norm(inner_product(d.state, psi));
    return value;
  };
}

namespace detail {

inline double fold_theta(double theta) {
  // Energies have period pi; report theta in [-pi/2, pi/2].
  return std::remainder(theta, std::acos(-1.0));
}

inline std::vector<double> default_starts() {
  const double pi = std::acos(-1.0);
  return {-pi / 4.0, 0.0, pi / 4.0};
}

inline EnergyPoint solve_level(const PauliSum& h, AnsatzFamily family,
                               std::vector<DeflationTerm> deflation, int level,
                               const NelderMeadConfig& cfg) {
  const auto objective = vqe_objective(h, family, std::move(deflation));
  const OptimizationResult opt = minimize_multistart(objective, cfg, default_starts());

  EnergyPoint p;
  p.formulation = formulation_of(family);
  p.block = block_of(family);
  p.level = level;
  p.theta_opt = fold_theta(opt.best_point);
  // Report the plain expectation value at the optimum; for a deflated solve
  // the penalty vanishes there up to optimizer tolerance.
  p.energy = expectation(h, prepare(family, p.theta_opt));
  p.evaluations = opt.evaluations;
  p.converged = opt.converged;
  return p;
}

}  // namespace detail

/// Spectral spread (max - min eigenvalue) of h restricted to the subspace the
/// ansatz family explores; the oracle bound a valid deflation weight must beat.
inline double subspace_spread(const PauliSum& h, AnsatzFamily family) {
  if (h.num_qubits() != ansatz_num_qubits(family))
    throw DimensionError("subspace_spread: Hamiltonian and ansatz qubit counts differ");
  std::vector<double> eig;
  if (h.num_qubits() == 1) {
    eig = exact_spectrum(matrix_of_sum(h));
  } else {
    const auto [block_a, block_b] = block_decompose_h2(h);
    eig = exact_spectrum(block_of(family) == Block::A ? block_a : block_b);
  }
  return eig.back() - eig.front();
}

/// Deflation weight used when the caller does not pin one: large enough for
/// every block of every tabulated Hamiltonian, with a 1.5x validity margin.
inline double default_beta(const PauliSum& h, AnsatzFamily family) {
  return std::max(3.0, 1.5 * subspace_spread(h, family));
}

/// VQE ground-state search over the family's parameter.
inline EnergyPoint solve_ground(const PauliSum& h, AnsatzFamily family,
                                const NelderMeadConfig& cfg = {}) {
  return detail::solve_level(h, family, {}, 0, cfg);
}

/// VQD excited-state search: minimizes <H> + beta |<phi_ground|psi>|^2.
///
/// beta == 0 is the degenerate no-penalty case and returns the ground point
/// again; a positive beta must exceed the spectral spread of h on the ansatz
/// subspace (checked against the oracle) or the search is rejected.
inline EnergyPoint solve_excited(const PauliSum& h, AnsatzFamily family,
                                 const EnergyPoint& ground, double beta,
                                 const NelderMeadConfig& cfg = {}) {
  if (beta < 0.0) throw ValidationError("solve_excited: beta must be >= 0");
  std::vector<DeflationTerm> deflation;
  if (beta > 0.0) {
    const double spread = subspace_spread(h, family);
    if (beta <= spread) throw BetaTooSmallError(beta, spread);
    deflation.push_back({beta, prepare(family, ground.theta_opt)});
  }
  return detail::solve_level(h, family, std::move(deflation), 1, cfg);
}

/// Ground and excited level of both blocks at one internuclear distance.
/// Points come back ordered A0, A1, B0, B1 with R stamped; their sorted
/// energies reproduce the full two-qubit spectrum.
inline std::array<EnergyPoint, 4> solve_all_levels(const CoefficientRow& row, Formulation f,
                                                   std::optional<double> beta = std::nullopt,
                                                   const NelderMeadConfig& cfg = {}) {
  std::array<EnergyPoint, 4> out;
  std::size_t slot = 0;
  for (Block b : {Block::A, Block::B}) {
    const AnsatzFamily family = family_for(f, b);
    const PauliSum h = f == Formulation::TwoQubit
                           ? hamiltonian_2q(row)
                           : (b == Block::A ? hamiltonian_1q_A(row) : hamiltonian_1q_B(row));
    EnergyPoint g = solve_ground(h, family, cfg);
    EnergyPoint e = solve_excited(h, family, g, beta.value_or(default_beta(h, family)), cfg);
    g.R = row.R;
    e.R = row.R;
    out[slot++] = g;
    out[slot++] = e;
  }
  return out;
}

}  // namespace h2vqe
