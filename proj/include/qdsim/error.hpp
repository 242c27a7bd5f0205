#ifndef QDSIM_ERROR_HPP
#define QDSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qdsim {

// Base error for all qdsim failures (bad configuration, precondition
// violations, non-convergence).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration / input validation failure.
struct ConfigError : Error {
  using Error::Error;
};

// Iterative or quadrature process failed to converge.
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace qdsim

#endif
