#pragma once

#include <string>
#include <vector>

#include "h2vqe/errors.hpp"
#include "h2vqe/state.hpp"

namespace h2vqe {

/// The four single-parameter trial-state families.
///
/// TwoQubitXYOn01: exp(i theta XY)|01> = cos theta |01> + sin theta |10>
/// TwoQubitXYOn00: exp(i theta XY)|00> = cos theta |00> - sin theta |11>
/// OneQubitMinusY: exp(-i theta Y)|0>  = cos theta |0>  + sin theta |1>
/// OneQubitPlusY:  exp(+i theta Y)|0>  = cos theta |0>  - sin theta |1>
///
/// The Y-rotation sign is pinned so that the one-qubit families trace the
/// same energy-vs-theta curves as their two-qubit counterparts under the
/// subspace maps |01> -> |0>, |10> -> |1> and |00> -> |0>, |11> -> |1>.
enum class AnsatzFamily { TwoQubitXYOn01, TwoQubitXYOn00, OneQubitMinusY, OneQubitPlusY };

struct AnsatzSpec {
  AnsatzFamily family;
  double theta;  // radians; energies have period pi in theta
};

inline std::size_t ansatz_num_qubits(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::TwoQubitXYOn01:
    case AnsatzFamily::TwoQubitXYOn00:
      return 2;
    default:
      return 1;
  }
}

inline StateVector prepare(const AnsatzSpec& spec) {
  switch (spec.family) {
    case AnsatzFamily::TwoQubitXYOn01:
      return apply(Gate::exp_xy(spec.theta), basis_state("01"));
    case AnsatzFamily::TwoQubitXYOn00:
      return apply(Gate::exp_xy(spec.theta), basis_state("00"));
    case AnsatzFamily::OneQubitMinusY:
      return apply(Gate::ry(2.0 * spec.theta, 1), basis_state("0"));
    case AnsatzFamily::OneQubitPlusY:
      return apply(Gate::ry(-2.0 * spec.theta, 1), basis_state("0"));
  }
  throw ValidationError("prepare: unknown ansatz family");
}

inline StateVector prepare(AnsatzFamily family, double theta) {
  return prepare(AnsatzSpec{family, theta});
}

/// Basis labels spanned by a two-qubit family for every theta.
inline std::vector<std::string> subspace_image(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::TwoQubitXYOn01:
      return {"01", "10"};
    case AnsatzFamily::TwoQubitXYOn00:
      return {"00", "11"};
    default:
      throw ValidationError(
          "subspace_image: not applicable to one-qubit families (the state is the whole space)");
  }
}

}  // namespace h2vqe
