#pragma once

#include <stdexcept>
#include <string>

namespace bcmaes {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid input: dimension mismatch, non-finite entry,
// non-positive scale, empty population.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// A matrix that must be SPD failed decomposition beyond repair.
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

// Degrees of freedom too small for the requested expected moments.
struct DegenerateDof : Error {
  explicit DegenerateDof(const std::string& msg) : Error(msg) {}
};

// Non-finite values or an unrecoverable decomposition inside the
// optimization loop; the optimizer converts this into a stop reason.
struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace bcmaes
