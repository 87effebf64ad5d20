#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "h2vqe/errors.hpp"
#include "h2vqe/molecule.hpp"
#include "h2vqe/state.hpp"
#include "h2vqe/vqd.hpp"

namespace h2vqe {

/// Circuit that turns a supported Pauli observable into a plain Z readout on
/// one qubit: conjugating the observable by the circuit gives Z(readout_qubit).
struct MappingRecipe {
  PauliString observable;
  std::vector<Gate> circuit;
  int readout_qubit;  // 1-based
};

/// Mapping recipes for the observables the energy formulas need:
/// ZI, IZ, ZZ, XX on two qubits and Z, X on one.
inline MappingRecipe recipe_for(const PauliString& observable) {
  const std::string& s = observable.str();
  if (s == "ZI") return {observable, {}, 1};
  if (s == "IZ") return {observable, {}, 2};
  if (s == "ZZ") return {observable, {Gate::cnot(1, 2)}, 2};
  if (s == "XX") return {observable, {Gate::h(1), Gate::h(2), Gate::cnot(1, 2)}, 2};
  if (s == "Z") return {observable, {}, 1};
  if (s == "X") return {observable, {Gate::h(1)}, 1};
  throw ValidationError("recipe_for: unsupported observable '" + s +
                        "'; supported set is {ZI, IZ, ZZ, XX, Z, X}");
}

namespace detail {

/// Probability of the +1 outcome of Z on the readout qubit of the mapped state.
inline double plus_probability(const StateVector& s, const MappingRecipe& recipe) {
  const StateVector mapped = apply_circuit(recipe.circuit, s);
  const std::size_t n = mapped.num_qubits();
  const std::size_t bit = std::size_t{1} << (n - static_cast<std::size_t>(recipe.readout_qubit));
  double p = 0.0;
  for (std::size_t i = 0; i < mapped.dim(); ++i)
    if (!(i & bit)) p += std::norm(mapped[i]);
  return p;
}

/// Portable uniform double in [0, 1) from a seeded mt19937_64 stream; avoids
/// distribution classes so results are identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step; decorrelates per-observable streams drawn from one seed.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic child seed for an indexed stream; lets callers fan one seed
/// out across rows, levels, and observables without correlation.
inline std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
  return detail::mix_seed(seed, stream);
}

/// Expectation via the mapping recipe; equals expectation(observable, s).
inline double measure_exact(const StateVector& s, const PauliString& observable) {
  const MappingRecipe recipe = recipe_for(observable);
  if (observable.num_qubits() != s.num_qubits())
    throw DimensionError("measure_exact: observable and state qubit counts differ");
  const double p = detail::plus_probability(s, recipe);
  return 2.0 * p - 1.0;
}

/// Finite-statistics estimate of a Pauli expectation from +/-1 outcomes.
struct ShotEstimate {
  double mean;            // in [-1, 1]
  double standard_error;  // sample standard deviation / sqrt(shots)
  int shots;
};

/// Samples `shots` single-shot Z readouts of the mapped state. Deterministic
/// for a fixed seed.
inline ShotEstimate measure_shots(const StateVector& s, const PauliString& observable, int shots,
                                  std::uint64_t seed) {
  if (shots < 1) throw ValidationError("measure_shots: shots must be >= 1");
  const MappingRecipe recipe = recipe_for(observable);
  if (observable.num_qubits() != s.num_qubits())
    throw DimensionError("measure_shots: observable and state qubit counts differ");
  const double p = detail::plus_probability(s, recipe);

  std::mt19937_64 rng(seed);
  long long sum = 0;
  for (int k = 0; k < shots; ++k) sum += detail::uniform01(rng) < p ? 1 : -1;

  ShotEstimate est;
  est.shots = shots;
  est.mean = static_cast<double>(sum) / shots;
  est.standard_error =
      shots > 1 ? std::sqrt(std::max(0.0, 1.0 - est.mean * est.mean) / (shots - 1)) : 0.0;
  return est;
}

/// Energy assembled from measured expectation values and the row's electronic
/// constants, with the error bar as the quadrature sum of coefficient-weighted
/// standard errors.
struct EnergyEstimate {
  double energy;
  double standard_error;  // 0 in exact mode
};

namespace detail {

struct WeightedObservable {
  double weight;
  PauliString observable;
};

inline std::vector<WeightedObservable> energy_terms(const CoefficientRow& row, Block block,
                                                    std::size_t num_qubits) {
  if (num_qubits == 2) {
    return {{row.a1, PauliString("ZI")},
            {row.a2, PauliString("IZ")},
            {row.a3, PauliString("ZZ")},
            {row.a4, PauliString("XX")}};
  }
  // Reduced form: only <Z> and <X> are needed.
  const double z_weight = block == Block::A ? row.a1 - row.a2 : row.a1 + row.a2;
  return {{z_weight, PauliString("Z")}, {row.a4, PauliString("X")}};
}

inline double energy_offset(const CoefficientRow& row, Block block, std::size_t num_qubits) {
  if (num_qubits == 2) return row.a0;
  return block == Block::A ? row.a0 - row.a3 : row.a0 + row.a3;
}

}  // namespace detail

/// Exact readout emulation: every expectation taken through its mapping recipe.
inline EnergyEstimate energy_from_measurements(const CoefficientRow& row, Block block,
                                               const StateVector& s) {
  double energy = detail::energy_offset(row, block, s.num_qubits());
  for (const auto& [weight, obs] : detail::energy_terms(row, block, s.num_qubits()))
    energy += weight * measure_exact(s, obs);
  return {energy, 0.0};
}

/// Finite-shot readout emulation; observables get decorrelated seed streams
/// derived from the caller's seed.
inline EnergyEstimate energy_from_measurements(const CoefficientRow& row, Block block,
                                               const StateVector& s, int shots,
                                               std::uint64_t seed) {
  double energy = detail::energy_offset(row, block, s.num_qubits());
  double var = 0.0;
  std::uint64_t stream = 0;
  for (const auto& [weight, obs] : detail::energy_terms(row, block, s.num_qubits())) {
    const ShotEstimate est = measure_shots(s, obs, shots, detail::mix_seed(seed, stream++));
    energy += weight * est.mean;
    var += weight * weight * est.standard_error * est.standard_error;
  }
  return {energy, std::sqrt(var)};
}

}  // namespace h2vqe
