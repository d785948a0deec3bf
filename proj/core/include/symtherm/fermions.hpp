#pragma once

#include <vector>

#include "symtherm/operator.hpp"

namespace symtherm {

/// n fermionic modes mapped to n qubits with a fixed left-to-right
/// Jordan-Wigner ordering (the single source of truth for the ordering:
/// fermionic partial transposes depend on it through the monomial basis):
///   c_{2k}   = Z_0 ... Z_{k-1} X_k
///   c_{2k+1} = Z_0 ... Z_{k-1} Y_k      (0-based Majorana indices)
/// Parity is pinned as P = i^n c_0 ... c_{2n-1} = (-1)^n Z^{(x)n}, P^2 = 1.
class MajoranaSystem {
 public:
  explicit MajoranaSystem(int n_modes);

  int n_modes() const { return n_modes_; }
  int n_majoranas() const { return 2 * n_modes_; }
  HilbertStructure hilbert() const { return HilbertStructure::uniform(n_modes_, 2); }

  const Operator& majorana(int j) const { return majoranas_[j]; }
  const Operator& parity() const { return parity_; }
  Operator parity_projector(int lambda) const;  // (1 + lambda P)/2

  /// Product c_{j_1} c_{j_2} ... in the listed order (indices distinct).
  Operator monomial(const std::vector<int>& indices) const;

 private:
  int n_modes_;
  std::vector<Operator> majoranas_;
  Operator parity_;
};

/// Region of Majorana operators. Mode-granularity partitions are the special
/// case with both Majoranas of each mode included.
struct FermionPartition {
  std::vector<int> a_majoranas;

  static FermionPartition from_modes(const std::vector<int>& modes);
  static FermionPartition from_majoranas(std::vector<int> majoranas);

  bool contains(int majorana) const;
  /// Sign in P^{T_A} = eta_A P, i.e. i^{|A|} with |A| the Majorana count;
  /// equals (-1)^{#modes} at mode granularity. Defined only for even |A|
  /// (odd counts phase the parity monomial by +-i instead of a sign).
  int eta() const;
};

/// Expand rho in the Majorana monomial basis (Hilbert-Schmidt orthogonal),
/// multiply each coefficient with k1 A-Majoranas by i^{k1}, resum.
/// Linear and trace preserving. Requires even fermion parity: coefficients on
/// odd monomials must vanish below 1e-10 (equivalently [rho, P] = 0).
/// Coefficients below tol::kMonomialDrop are dropped before resummation.
Operator fermionic_partial_transpose(const Operator& rho, const FermionPartition& region_a,
                                     const MajoranaSystem& sys);

/// E_N^f = log2 ||rho^{T_A}||_1 in bits; the transpose may be non-Hermitian,
/// so the trace norm goes through singular values.
double fermionic_log_negativity(const Operator& rho, const FermionPartition& region_a,
                                const MajoranaSystem& sys);

struct FermionConditionResult {
  bool holds = false;
  double norm = 0.0;
};

/// Gibbs persistence condition: (H^{T_A})^dag != H^{T_A}.
FermionConditionResult check_fermionic_gibbs_condition(const Operator& hamiltonian,
                                                       const FermionPartition& region_a,
                                                       const MajoranaSystem& sys);

/// Canonical persistence condition at strong parity Lambda = +-1:
/// Pi_{-eta Lambda} (H Pi_Lambda)^{T_A} Pi_{-eta Lambda} != 0.
FermionConditionResult check_fermionic_canonical_condition(const Operator& hamiltonian, int lambda,
                                                           const FermionPartition& region_a,
                                                           const MajoranaSystem& sys);

}  // namespace symtherm
