#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "h2vqe/errors.hpp"
#include "h2vqe/pauli.hpp"

namespace h2vqe {

/// One tabulated internuclear distance with its five Hamiltonian coefficients
/// (Hartree): H = a0 II + a1 ZI + a2 IZ + a3 ZZ + a4 XX.
struct CoefficientRow {
  double R;  // Angstrom
  double a0, a1, a2, a3, a4;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

inline std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline double parse_cell(const std::string& cell, int line_number) {
  const std::string t = trim(cell);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError("non-numeric cell '" + cell + "'", line_number);
  return value;
}

}  // namespace detail

/// Rows sorted strictly increasing in R. No interpolation: lookups off the
/// tabulated grid are rejected.
class CoefficientTable {
 public:
  explicit CoefficientTable(std::vector<CoefficientRow> rows) : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end(),
              [](const CoefficientRow& a, const CoefficientRow& b) { return a.R < b.R; });
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
      if (!(rows_[i].R < rows_[i + 1].R))
        throw ValidationError("CoefficientTable: duplicate R value " +
                              detail::format_double(rows_[i].R));
  }

  const std::vector<CoefficientRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  /// Exact-grid lookup. Off-grid requests fail, naming the nearest grid values.
  const CoefficientRow& row_at(double R) const {
    const CoefficientRow* best = nullptr;
    for (const auto& row : rows_) {
      if (std::abs(row.R - R) < 1e-9) return row;
      if (!best || std::abs(row.R - R) < std::abs(best->R - R)) best = &row;
    }
    std::string msg = "R = " + detail::format_double(R) + " is not on the tabulated grid";
    // Name the two nearest tabulated distances.
    const CoefficientRow* below = nullptr;
    const CoefficientRow* above = nullptr;
    for (const auto& row : rows_) {
      if (row.R < R && (!below || row.R > below->R)) below = &row;
      if (row.R > R && (!above || row.R < above->R)) above = &row;
    }
    if (below || above) {
      msg += "; nearest grid values:";
      if (below) msg += " " + detail::format_double(below->R);
      if (above) msg += " " + detail::format_double(above->R);
    }
    throw ValidationError(msg);
  }

  /// Canonical decimal-text form; load_table of this text reproduces the table
  /// bit for bit.
  void serialize(std::ostream& os) const {
    os << "R,a0,a1,a2,a3,a4\n";
    for (const auto& r : rows_) {
      os << detail::format_double(r.R) << ',' << detail::format_double(r.a0) << ','
         << detail::format_double(r.a1) << ',' << detail::format_double(r.a2) << ','
         << detail::format_double(r.a3) << ',' << detail::format_double(r.a4) << '\n';
    }
  }

 private:
  std::vector<CoefficientRow> rows_;
};

/// Parses a comma-separated coefficient stream with header R,a0,a1,a2,a3,a4.
inline CoefficientTable load_table(std::istream& in) {
  std::string line;
  int line_number = 0;

  if (!std::getline(in, line)) throw ParseError("empty coefficient stream", 1);
  ++line_number;
  {
    const auto cells = detail::split_csv(line);
    static const char* expected[] = {"R", "a0", "a1", "a2", "a3", "a4"};
    if (cells.size() != 6) throw ParseError("header must name 6 columns R,a0,a1,a2,a3,a4", 1);
    for (int i = 0; i < 6; ++i)
      if (cells[static_cast<std::size_t>(i)] != expected[i])
        throw ParseError(std::string("missing or misnamed column '") + expected[i] + "'", 1);
  }

  std::vector<CoefficientRow> rows;
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::trim(line).empty()) continue;
    const auto cells = detail::split_csv(line);
    if (cells.size() != 6) throw ParseError("expected 6 cells", line_number);
    CoefficientRow r{};
    r.R = detail::parse_cell(cells[0], line_number);
    r.a0 = detail::parse_cell(cells[1], line_number);
    r.a1 = detail::parse_cell(cells[2], line_number);
    r.a2 = detail::parse_cell(cells[3], line_number);
    r.a3 = detail::parse_cell(cells[4], line_number);
    r.a4 = detail::parse_cell(cells[5], line_number);
    if (!(r.R > 0.0)) throw ParseError("R must be positive", line_number);
    for (const auto& existing : rows)
      if (existing.R == r.R)
        throw ParseError("duplicate R value " + cells[0], line_number);
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError("no data rows", line_number);
  return CoefficientTable(std::move(rows));
}

inline CoefficientTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open coefficient table '" + path + "'");
  return load_table(in);
}

/// Two-qubit Hamiltonian a0 II + a1 ZI + a2 IZ + a3 ZZ + a4 XX.
inline PauliSum hamiltonian_2q(const CoefficientRow& row) {
  return PauliSum{{row.a0, PauliString("II")},
                  {row.a1, PauliString("ZI")},
                  {row.a2, PauliString("IZ")},
                  {row.a3, PauliString("ZZ")},
                  {row.a4, PauliString("XX")}};
}

/// Reduced Hamiltonian on span{|01>, |10>} mapped to one qubit:
/// (a0 - a3) I + (a1 - a2) Z + a4 X.
inline PauliSum hamiltonian_1q_A(const CoefficientRow& row) {
  return PauliSum{{row.a0 - row.a3, PauliString("I")},
                  {row.a1 - row.a2, PauliString("Z")},
                  {row.a4, PauliString("X")}};
}

/// Reduced Hamiltonian on span{|00>, |11>} mapped to one qubit:
/// (a0 + a3) I + (a1 + a2) Z + a4 X.
inline PauliSum hamiltonian_1q_B(const CoefficientRow& row) {
  return PauliSum{{row.a0 + row.a3, PauliString("I")},
                  {row.a1 + row.a2, PauliString("Z")},
                  {row.a4, PauliString("X")}};
}

}  // namespace h2vqe
