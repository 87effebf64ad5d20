#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "h2vqe/errors.hpp"
#include "h2vqe/linalg.hpp"

namespace h2vqe {

/// Tensor product of single-qubit Pauli labels. The leftmost label acts on
/// qubit 1, which is also the leftmost symbol of a ket and the most
/// significant bit of a basis index.
class PauliString {
 public:
  explicit PauliString(std::string_view labels) : labels_(labels) {
    if (labels_.empty()) throw ValidationError("PauliString: empty label string");
    for (char ch : labels_)
      if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z')
        throw ValidationError("PauliString: label '" + std::string(1, ch) +
                              "' is not one of I, X, Y, Z");
  }

  std::size_t num_qubits() const { return labels_.size(); }
  char label(std::size_t qubit) const { return labels_.at(qubit - 1); }  // 1-based
  const std::string& str() const { return labels_; }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::string labels_;
};

struct PauliTerm {
  double coefficient;  // Hartree
  PauliString string;
};

/// Real-weighted sum of equal-length Pauli strings. Duplicate strings are
/// merged on construction and terms with |coefficient| < 1e-15 are dropped.
class PauliSum {
 public:
  PauliSum(std::initializer_list<PauliTerm> terms)
      : PauliSum(std::vector<PauliTerm>(terms)) {}

  explicit PauliSum(std::vector<PauliTerm> terms) {
    if (terms.empty()) throw ValidationError("PauliSum: no terms");
    num_qubits_ = terms.front().string.num_qubits();
    for (const auto& t : terms) {
      if (t.string.num_qubits() != num_qubits_)
        throw DimensionError("PauliSum: mixed qubit counts among terms");
      bool merged = false;
      for (auto& existing : terms_) {
        if (existing.string == t.string) {
          existing.coefficient += t.coefficient;
          merged = true;
          break;
        }
      }
      if (!merged) terms_.push_back(t);
    }
    std::erase_if(terms_, [](const PauliTerm& t) { return std::abs(t.coefficient) < 1e-15; });
  }

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the given string, 0 if absent.
  double coefficient(const PauliString& s) const {
    for (const auto& t : terms_)
      if (t.string == s) return t.coefficient;
    return 0.0;
  }

 private:
  std::size_t num_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

namespace detail {

inline const std::array<complexd, 4>& pauli_2x2(char label) {
  // Flattened [row0, row1] pairs per operator; entries (00, 01, 10, 11).
  static const std::array<std::array<complexd, 4>, 4> mats = {{
      {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}},    // I
      {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}},    // X
      {{{0, 0}, {0, -1}, {0, 1}, {0, 0}}},   // Y
      {{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}},   // Z
  }};
  switch (label) {
    case 'I': return mats[0];
    case 'X': return mats[1];
    case 'Y': return mats[2];
    case 'Z': return mats[3];
    default: throw ValidationError("unknown Pauli label");
  }
}

}  // namespace detail

/// Dense 2^n x 2^n realization of a Pauli string (Hermitian and unitary).
inline Matrix matrix_of(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      complexd entry{1.0, 0.0};
      for (std::size_t q = 1; q <= n && entry != complexd{}; ++q) {
        const std::size_t shift = n - q;  // qubit 1 is the most significant bit
        const std::size_t bi = (i >> shift) & 1u;
        const std::size_t bj = (j >> shift) & 1u;
        entry *= detail::pauli_2x2(p.label(q))[bi * 2 + bj];
      }
      m(i, j) = entry;
    }
  }
  return m;
}

/// Dense realization of a weighted Pauli sum.
inline Matrix matrix_of_sum(const PauliSum& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  Matrix m(dim);
  for (const auto& t : h.terms()) {
    Matrix term = matrix_of(t.string);
    term *= complexd{t.coefficient, 0.0};
    m += term;
  }
  return m;
}

/// Splits a two-qubit Hamiltonian built from {II, ZI, IZ, ZZ, XX} into its two
/// invariant 2x2 blocks: block A on span{|01>, |10>}, block B on span{|00>, |11>}.
/// The union of the block spectra equals the spectrum of the 4x4 realization.
inline std::pair<Matrix, Matrix> block_decompose_h2(const PauliSum& h) {
  if (h.num_qubits() != 2)
    throw DimensionError("block_decompose_h2: expected a two-qubit Pauli sum");
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
  for (const auto& t : h.terms()) {
    const std::string& s = t.string.str();
    if (s == "II") a0 = t.coefficient;
    else if (s == "ZI") a1 = t.coefficient;
    else if (s == "IZ") a2 = t.coefficient;
    else if (s == "ZZ") a3 = t.coefficient;
    else if (s == "XX") a4 = t.coefficient;
    else
      throw ValidationError("block_decompose_h2: unsupported term '" + s +
                            "'; supported set is {II, ZI, IZ, ZZ, XX}");
  }

  // Diagonal entries follow the sign of Z-type labels on each basis state;
  // XX couples the states within each block with weight a4.
  Matrix block_a(2);
  block_a(0, 0) = a0 + a1 - a2 - a3;  // <01|H|01>
  block_a(1, 1) = a0 - a1 + a2 - a3;  // <10|H|10>
  block_a(0, 1) = a4;
  block_a(1, 0) = a4;

  Matrix block_b(2);
  block_b(0, 0) = a0 + a1 + a2 + a3;  // <00|H|00>
  block_b(1, 1) = a0 - a1 - a2 + a3;  // <11|H|11>
  block_b(0, 1) = a4;
  block_b(1, 0) = a4;

  return {block_a, block_b};
}

}  // namespace h2vqe
