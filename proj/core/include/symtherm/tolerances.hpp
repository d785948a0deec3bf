#pragma once

#include <algorithm>

// Numerical cutoffs used across the library. Every "!= 0" condition from the
// underlying algebra becomes "norm > scale-aware threshold" here.
namespace symtherm::tol {

// Hermiticity acceptance: ||A - A^dag||_F <= kHermiticity * max(1, ||A||_F).
// Inputs failing it are rejected, not symmetrized.
inline constexpr double kHermiticity = 1e-9;

// Commutator-zero threshold: ||[U, H]||_F <= kCommutator * ||H||_F
// (representation unitaries have operator norm 1).
inline constexpr double kCommutator = 1e-10;

// Jacobi sweep convergence: off-diagonal Frobenius norm < kEigOffdiag * ||A||_F.
inline constexpr double kEigOffdiag = 1e-14;

// PPT verdict: min eigenvalue of the partial transpose below this is NPT.
inline constexpr double kPptEig = -1e-10;

// Log-negativities within this of zero snap to exactly 0 (round-off in the
// trace norm of an exactly-PPT state scales with dim * eig residual).
inline constexpr double kNegativitySnap = 1e-10;

// Eigenvalues below this contribute 0 to von Neumann entropy (0 ln 0 = 0).
inline constexpr double kEntropyFloor = 1e-14;

// Isotypic components with weight q below this are dropped.
inline constexpr double kSectorWeight = 1e-12;

// Majorana monomial coefficients below this are dropped before resummation.
inline constexpr double kMonomialDrop = 1e-12;

// Unitarity / projector identity checks.
inline constexpr double kUnitary = 1e-10;

inline double hermiticity_threshold(double fro_norm) {
  return kHermiticity * std::max(1.0, fro_norm);
}

inline double commutator_threshold(double h_fro_norm) {
  return kCommutator * h_fro_norm;
}

}  // namespace symtherm::tol
