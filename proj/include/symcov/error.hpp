#pragma once

#include <stdexcept>
#include <string>

namespace symcov {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Construction rejected: input matrix is not symmetric / Hermitian within tolerance.
struct NotSymmetric : Error {
  using Error::Error;
};

/// A matrix that must be positive semidefinite has a negative eigenvalue.
struct NotPositive : Error {
  using Error::Error;
};

/// Pauli expectation values came out with a non-negligible imaginary part.
struct ImaginaryResidue : Error {
  using Error::Error;
};

/// Jacobi iteration failed to converge within the sweep cap.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// A 2x2 matrix expected to be special unitary is not.
struct NotSpecialUnitary : Error {
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
struct ConsistencyFailure : Error {
  using Error::Error;
};

/// A 3x3 C matrix showed three negative eigenvalues, which no symmetric
/// two-qubit state can produce. Signals invalid input.
struct ThreeNegative : Error {
  using Error::Error;
};

/// A 2x2 block transform is not symplectic (det != 1).
struct NotSymplectic : Error {
  using Error::Error;
};

/// A covariance matrix violates the uncertainty relation.
struct Unphysical : Error {
  using Error::Error;
};

/// Malformed input document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace symcov
