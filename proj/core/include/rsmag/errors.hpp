#pragma once

#include <stdexcept>
#include <string>

namespace rsmag {

/// Base class for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Dirac-relation denominator eps*E + m is (numerically) zero.
class DenominatorSingular : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A singular value sits too close to the rank cut to decide the rank.
class IllConditioned : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An iterative sum or quadrature did not reach its tolerance.
class ConvergenceFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rsmag
