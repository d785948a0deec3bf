#pragma once

#include <optional>
#include <vector>

#include "symtherm/operator.hpp"
#include "symtherm/symmetry.hpp"

namespace symtherm {

/// A thermal ensemble: Hamiltonian, inverse temperature, and (for the
/// canonical ensemble) the strong-symmetry charge sector.
struct EnsembleSpec {
  Operator hamiltonian;
  double beta = 0.0;
  std::optional<Representation> rep;
  std::optional<IrrepLabel> sector;
};

/// rho_beta = exp(-beta H) / Z. Always evaluated through the
/// eigendecomposition of H (shifted so the weights never overflow).
Operator gibbs_state(const Operator& hamiltonian, double beta);

/// rho_{beta,Lambda} = exp(-beta H) Pi_Lambda / Z. Requires [U(g), H] = 0 and
/// a nonempty sector.
Operator canonical_state(const Operator& hamiltonian, double beta, const Representation& rep,
                         const IrrepLabel& sector);

/// Dispatch on spec.sector.
Operator thermal_state(const EnsembleSpec& spec);

/// Von Neumann entropy -Tr rho ln rho (natural log); eigenvalues below
/// tol::kEntropyFloor contribute 0.
double entropy(const Operator& rho);

/// F(rho) = Tr[rho H] - S(rho)/beta. beta must be positive.
double free_energy(const Operator& rho, const Operator& hamiltonian, double beta);

/// D(rho||sigma) = Tr rho (ln rho - ln sigma) >= 0. Throws if rho has weight
/// > 1e-10 outside the support of sigma (eigenvalues < 1e-12).
double relative_entropy(const Operator& rho, const Operator& sigma);

/// Apply sum_a K_a rho K_a^dag; the Kraus set must satisfy
/// sum K^dag K = 1 within 1e-9.
Operator apply_kraus_channel(const Operator& rho, const std::vector<Operator>& kraus);

}  // namespace symtherm
