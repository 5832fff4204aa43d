#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longmem {

// Numerical failures are kept distinct from argument/domain errors so that
// callers (in particular the CLI) can map them to a separate exit status.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance within its
// panel budget.
class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Root bracketing / bisection failure (e.g. no t in (0, pi] solves the
// defining equation for the given sample size).
class SolverError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Circulant embedding carries too much negative eigenvalue mass to clip.
class EmbeddingError : public NumericalError {
 public:
  EmbeddingError(const std::string& what, double relative_mass)
      : NumericalError(what), relative_mass(relative_mass) {}
  double relative_mass;
};

// Dense symmetric factorization hit a non-positive pivot; `minor_index` is
// the size of the offending leading minor (1-based).
class FactorizationError : public NumericalError {
 public:
  FactorizationError(const std::string& what, std::size_t minor_index)
      : NumericalError(what), minor_index(minor_index) {}
  std::size_t minor_index;
};

}  // namespace longmem
