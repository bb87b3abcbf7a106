#pragma once

#include <stdexcept>
#include <string>

namespace radscat {

// Invalid input (bad geometry, out-of-range arguments, malformed grids) is
// reported with std::invalid_argument. Failures of a numerical procedure on
// valid input derive from NumericalError.

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! k is (numerically) a zero of the Jost function J+, i.e. a pole of S.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

//! The argument-principle count disagrees with the number of refined roots.
class MissedRootsError : public NumericalError {
 public:
  MissedRootsError(const std::string& what, int winding, int refined)
      : NumericalError(what), winding_(winding), refined_(refined) {}
  int winding() const { return winding_; }
  int refined() const { return refined_; }

 private:
  int winding_;
  int refined_;
};

//! Contour and derivative residue estimates disagree.
class ResidueError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace radscat
