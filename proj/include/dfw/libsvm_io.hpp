#pragma once

#include <string>
#include <vector>

#include "dfw/atoms.hpp"

namespace dfw {

struct LibsvmData {
  AtomMatrix atoms;  // one column per input line (example)
  std::vector<double> labels;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads "label idx:val idx:val ..." lines, 1-based strictly increasing
/// indices. Malformed lines raise ParseError with the line number.
LibsvmData load_libsvm(const std::string& path);
void write_libsvm(const std::string& path, const AtomMatrix& atoms,
                  const std::vector<double>& labels);

/// Examples-as-columns -> features-as-columns (and back).
AtomMatrix transpose(const AtomMatrix& atoms);

}  // namespace dfw
