#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtherm/fermions.hpp"
#include "symtherm/operator.hpp"
#include "symtherm/symmetry.hpp"

namespace symtherm {

/// coeff * (Pauli string on the listed sites), e.g. {sites:{0,1,2}, "ZXZ", -1}.
struct PauliTerm {
  std::vector<int> sites;
  std::string paulis;  // over {X, Y, Z}
  double coeff = 0.0;
};

/// coeff * c_{j_1} c_{j_2} ... (0-based Majorana indices, product in listed
/// order). The summed Hamiltonian must come out Hermitian and parity even.
struct MajoranaTerm {
  std::vector<int> majoranas;
  cplx coeff;
};

enum class Boundary { Open, Periodic };

struct ModelSpec {
  std::string name = "custom";
  int n_sites = 0;  // spin models
  Boundary boundary = Boundary::Open;
  std::vector<PauliTerm> terms;

  int n_modes = 0;  // fermionic models
  std::vector<MajoranaTerm> majorana_terms;

  bool fermionic() const { return n_modes > 0; }
};

struct PresetParams {
  int n_sites = 4;
  int n_modes = 2;
  Boundary boundary = Boundary::Periodic;
  double coeff = 1.0;   // overall coupling of chain presets
  double j = 1.0;       // xyz2
  double gamma = 1.0;   // xyz2
};

/// Preset catalog covering the concrete models in play:
///   cluster-chain      sum_i Z_{i-1} X_i Z_{i+1}
///   ising-classical    sum_i Z_i Z_{i+1}
///   paramagnet         sum_i X_i
///   xyz2               X1X2 + J((1+g)/2 Y1Y2 + (1-g)/2 Z1Z2)
///   u1-hopping         sum_i (X_i X_{i+1} + Y_i Y_{i+1})/2
///   majorana-hopping   sum_k i c_{2k+1} c_{2k+2}
ModelSpec make_preset(const std::string& name, const PresetParams& params);

/// Dense Hamiltonian from a spin ModelSpec. Rejects non-Hermitian term sets.
Operator build_hamiltonian(const ModelSpec& spec);
/// Same, additionally verifying [U(g), H] = 0 for the declared representation.
Operator build_hamiltonian(const ModelSpec& spec, const Representation& rep);

/// Dense Hamiltonian from a fermionic ModelSpec; enforces Hermiticity and
/// even fermion parity.
Operator build_fermionic_hamiltonian(const ModelSpec& spec, const MajoranaSystem& sys);

// --- closed forms ------------------------------------------------------------

/// Negativity N(rho_{beta,+1}) = |tanh(beta J gamma)|/2 of the two-qubit XYZ
/// canonical ensemble (convert via E_N = log2(2N+1) when comparing to
/// log-negativity).
double oracle_xyz_canonical_negativity(double j, double gamma, double beta);

/// Gibbs log-negativity (bits) of the cluster chain at lambda = tanh(beta),
/// exact at any even N with |A|, |B| >= 2:
///   E_N = 2 log2( sum_{a,b=+-1} |1 + lambda(a+b) - lambda^2 ab| / 4 ).
double oracle_cluster_gibbs_EN(double lambda);

/// Canonical log-negativity (bits) with the finite-size factors
/// r_{N,mu} = (1 + mu lambda^{N-4}) / (1 + Lambda lambda^N) reinstated in the
/// mu-sum; exact at even N >= 4 (verified against exact diagonalization).
double oracle_cluster_canonical_EN(double lambda, int n_sites, int lambda_sector);

/// Thermodynamic-limit form of the canonical curve (r = 1, charge
/// independent).
double oracle_cluster_canonical_EN_limit(double lambda);

struct SeparableDecomposition {
  std::vector<double> probs;         // p1, p2, p3
  std::vector<Operator> components;  // four-qubit density matrices
};

/// Explicit symmetric separable decomposition of the cluster-chain boundary
/// factor for lambda <= sqrt(2)-1; nullopt beyond (the components stop being
/// positive semidefinite).
std::optional<SeparableDecomposition> oracle_cluster_separable_decomposition(double lambda);

}  // namespace symtherm
