#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace h2vqe {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand dimensions (qubit counts, vector lengths) do not match.
struct DimensionError : Error {
  using Error::Error;
};

/// Malformed input value (bad Pauli label, non-binary bitstring, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Tabular input could not be parsed; carries the 1-based line number.
struct ParseError : Error {
  int line;
  ParseError(const std::string& what, int line_number)
      : Error(what + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
};

/// Objective returned NaN or infinity; carries the offending point.
struct NonFiniteObjectiveError : Error {
  std::vector<double> point;
  NonFiniteObjectiveError(const std::string& what, std::vector<double> at)
      : Error(what), point(std::move(at)) {}
};

}  // namespace h2vqe
