#pragma once

#include <utility>
#include <vector>

#include "symtherm/ensembles.hpp"
#include "symtherm/operator.hpp"

namespace symtherm {

/// Logarithmic negativity E_N = log2 ||rho^{T_A}||_1 in bits. Values within
/// tol::kNegativitySnap of zero are snapped to exactly 0.
double log_negativity(const Operator& rho, const Partition& region_a);

/// Pointwise log-negativity of the Gibbs/canonical state along a beta grid;
/// spec.beta is ignored in favor of the grid values.
std::vector<std::pair<double, double>> negativity_curve(const EnsembleSpec& spec,
                                                        const Partition& region_a,
                                                        const std::vector<double>& betas);

/// Peres-Horodecki criterion, exact for two qubits: separable iff the partial
/// transpose has min eigenvalue >= -1e-10.
bool two_qubit_separable(const Operator& rho);

}  // namespace symtherm
