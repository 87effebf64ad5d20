#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "h2vqe/errors.hpp"
#include "h2vqe/pauli.hpp"

namespace h2vqe {

/// Dense amplitude vector over 1 or 2 qubits. Index = integer value of the
/// bitstring with qubit 1 as the most significant bit (|01> sits at index 1).
class StateVector {
 public:
  explicit StateVector(std::vector<complexd> amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() != 2 && amp_.size() != 4)
      throw DimensionError("StateVector: amplitude count must be 2 or 4");
    if (std::abs(norm_squared() - 1.0) > 1e-8)
      throw ValidationError("StateVector: amplitudes are not normalized");
  }

  static StateVector normalized(std::vector<complexd> amplitudes) {
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (n2 <= 0.0) throw ValidationError("StateVector: zero vector cannot be normalized");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amplitudes) a *= inv;
    return StateVector(std::move(amplitudes));
  }

  std::size_t dim() const { return amp_.size(); }
  std::size_t num_qubits() const { return amp_.size() == 2 ? 1 : 2; }
  const complexd& operator[](std::size_t i) const { return amp_[i]; }
  const std::vector<complexd>& amplitudes() const { return amp_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
  }

 private:
  std::vector<complexd> amp_;
};

/// <a|b>
inline complexd inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner_product: state dimensions differ");
  complexd s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Computational basis state from a bitstring label ("01" -> |01>).
inline StateVector basis_state(std::string_view label) {
  if (label.size() != 1 && label.size() != 2)
    throw ValidationError("basis_state: label must have 1 or 2 bits");
  std::size_t index = 0;
  for (char ch : label) {
    if (ch != '0' && ch != '1')
      throw ValidationError("basis_state: label must contain only 0 and 1");
    index = (index << 1) | static_cast<std::size_t>(ch - '0');
  }
  std::vector<complexd> amp(std::size_t{1} << label.size(), complexd{0.0, 0.0});
  amp[index] = 1.0;
  return StateVector(std::move(amp));
}

enum class GateKind { X, Y, Z, H, Rx, Ry, Rz, Cnot, ExpXY };

/// A gate plus its wiring. Qubit indices are 1-based, matching the tensor
/// order of PauliString (qubit 1 = leftmost factor). Rotation gates use the
/// half-angle convention Rp(phi) = exp(-i phi P / 2); ExpXY(theta) is the
/// two-qubit unitary exp(i theta X1 Y2).
struct Gate {
  GateKind kind;
  int qubit = 1;    // target of single-qubit kinds
  int control = 1;  // Cnot only
  int target = 2;   // Cnot only
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate y(int q) { return {GateKind::Y, q}; }
  static Gate z(int q) { return {GateKind::Z, q}; }
  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate rx(double phi, int q) { return {GateKind::Rx, q, 1, 2, phi}; }
  static Gate ry(double phi, int q) { return {GateKind::Ry, q, 1, 2, phi}; }
  static Gate rz(double phi, int q) { return {GateKind::Rz, q, 1, 2, phi}; }
  static Gate cnot(int control, int target) { return {GateKind::Cnot, 1, control, target}; }
  static Gate exp_xy(double theta) { return {GateKind::ExpXY, 1, 1, 2, theta}; }
};

namespace detail {

inline void single_qubit_matrix(const Gate& g, complexd m[4]) {
  const complexd i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::X: m[0] = 0; m[1] = 1; m[2] = 1; m[3] = 0; return;
    case GateKind::Y: m[0] = 0; m[1] = -i; m[2] = i; m[3] = 0; return;
    case GateKind::Z: m[0] = 1; m[1] = 0; m[2] = 0; m[3] = -1; return;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m[0] = r; m[1] = r; m[2] = r; m[3] = -r;
      return;
    }
    case GateKind::Rx: {
      const double c = std::cos(0.5 * g.angle), s = std::sin(0.5 * g.angle);
      m[0] = c; m[1] = -i * s; m[2] = -i * s; m[3] = c;
      return;
    }
    case GateKind::Ry: {
      const double c = std::cos(0.5 * g.angle), s = std::sin(0.5 * g.angle);
      m[0] = c; m[1] = -s; m[2] = s; m[3] = c;
      return;
    }
    case GateKind::Rz: {
      const complexd e = std::exp(-i * complexd{0.5 * g.angle, 0.0});
      m[0] = e; m[1] = 0; m[2] = 0; m[3] = std::conj(e);
      return;
    }
    default:
      throw Error("single_qubit_matrix: not a single-qubit gate");
  }
}

}  // namespace detail

/// Applies a gate; the norm is preserved to within 1e-12.
inline StateVector apply(const Gate& g, const StateVector& s) {
  const std::size_t n = s.num_qubits();
  std::vector<complexd> amp = s.amplitudes();

  switch (g.kind) {
    case GateKind::Cnot: {
      if (n != 2) throw DimensionError("apply: CNOT needs a two-qubit state");
      if (g.control == g.target || g.control < 1 || g.control > 2 || g.target < 1 ||
          g.target > 2)
        throw ValidationError("apply: CNOT wiring must use distinct qubits 1 and 2");
      const std::size_t cbit = std::size_t{1} << (2 - g.control);
      const std::size_t tbit = std::size_t{1} << (2 - g.target);
      for (std::size_t i = 0; i < amp.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(amp[i], amp[i | tbit]);
      break;
    }
    case GateKind::ExpXY: {
      if (n != 2) throw DimensionError("apply: ExpXY needs a two-qubit state");
      // Closed-form action on the basis: exp(i t XY)|01> = cos t|01> + sin t|10>,
      // exp(i t XY)|00> = cos t|00> - sin t|11>, and the unitary completions.
      const double c = std::cos(g.angle), si = std::sin(g.angle);
      const complexd a00 = amp[0], a01 = amp[1], a10 = amp[2], a11 = amp[3];
      amp[0] = c * a00 + si * a11;
      amp[1] = c * a01 - si * a10;
      amp[2] = si * a01 + c * a10;
      amp[3] = -si * a00 + c * a11;
      break;
    }
    default: {
      if (g.qubit < 1 || static_cast<std::size_t>(g.qubit) > n)
        throw DimensionError("apply: gate targets a qubit outside the state");
      complexd m[4];
      detail::single_qubit_matrix(g, m);
      const std::size_t bit = std::size_t{1} << (n - static_cast<std::size_t>(g.qubit));
      for (std::size_t i = 0; i < amp.size(); ++i) {
        if (i & bit) continue;
        const complexd a0 = amp[i], a1 = amp[i | bit];
        amp[i] = m[0] * a0 + m[1] * a1;
        amp[i | bit] = m[2] * a0 + m[3] * a1;
      }
      break;
    }
  }
  return StateVector(std::move(amp));
}

inline StateVector apply_circuit(const std::vector<Gate>& circuit, const StateVector& s) {
  StateVector out = s;
  for (const Gate& g : circuit) out = apply(g, out);
  return out;
}

/// P|s> for a Pauli string, computed from per-qubit actions (no matrices).
inline StateVector apply_pauli(const PauliString& p, const StateVector& s) {
  if (p.num_qubits() != s.num_qubits())
    throw DimensionError("apply_pauli: operator and state qubit counts differ");
  const std::size_t n = s.num_qubits();
  std::vector<complexd> out(s.dim(), complexd{0.0, 0.0});
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s[i] == complexd{}) continue;
    std::size_t j = i;
    complexd factor{1.0, 0.0};
    for (std::size_t q = 1; q <= n; ++q) {
      const std::size_t bit = std::size_t{1} << (n - q);
      const bool set = (i & bit) != 0;
      switch (p.label(q)) {
        case 'I': break;
        case 'X': j ^= bit; break;
        case 'Z':
          if (set) factor = -factor;
          break;
        case 'Y':  // Y|0> = i|1>, Y|1> = -i|0>
          j ^= bit;
          factor *= set ? complexd{0.0, -1.0} : complexd{0.0, 1.0};
          break;
      }
    }
    out[j] += factor * s[i];
  }
  // Pauli strings are unitary, so the result stays normalized.
  return StateVector(std::move(out));
}

/// <s|P|s>; always real for a Hermitian observable, and within [-1, 1] for a
/// bare Pauli string.
inline double expectation(const PauliString& p, const StateVector& s) {
  const complexd v = inner_product(s, apply_pauli(p, s));
  if (std::abs(v.imag()) > 1e-10)
    throw Error("expectation: imaginary residue above 1e-10");
  return v.real();
}

inline double expectation(const PauliSum& h, const StateVector& s) {
  if (h.num_qubits() != s.num_qubits())
    throw DimensionError("expectation: operator and state qubit counts differ");
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coefficient * expectation(t.string, s);
  return e;
}

}  // namespace h2vqe
