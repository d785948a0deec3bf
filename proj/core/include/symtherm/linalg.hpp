#pragma once

#include <vector>

#include "symtherm/operator.hpp"

namespace symtherm {

/// Kronecker product respecting site ordering (site 0 slowest); the result
/// structure concatenates the factors' site_dims.
Operator tensor(const std::vector<Operator>& ops);

/// Reduced operator on the kept sites (original site order), complement
/// summed out. Trace preserving.
Operator partial_trace(const Operator& op, const Partition& keep);

/// Transpose the row/column indices on the A sites, leave B untouched.
/// Involutive; preserves trace and Frobenius norm.
Operator partial_transpose(const Operator& op, const Partition& region);

struct EigResult {
  std::vector<double> values;  // ascending
  Operator vectors;            // unitary, columns are eigenvectors
};

/// Dense Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Rejects non-Hermitian input. Converged when the off-diagonal Frobenius
/// norm drops below tol::kEigOffdiag * ||op||_F; throws numeric_error if a
/// sweep cap is hit first.
EigResult eig_hermitian(const Operator& op);

/// Sum of singular values. Hermitian inputs go through eig_hermitian;
/// otherwise singular values are sqrt of eigenvalues of M^dag M with
/// negative round-off clamped at 0.
double trace_norm(const Operator& op);

/// Singular values, descending.
std::vector<double> singular_values(const Operator& op);

/// V exp(scale * D) V^dag via eigendecomposition. Hermitian input only.
Operator expm_hermitian(const Operator& op, double scale);

}  // namespace symtherm
