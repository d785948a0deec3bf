#include "symtherm/fermions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "symtherm/linalg.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

namespace {

// Signed Pauli string i^q * prod_s X_s^{x_s} Z_s^{z_s}. Site s occupies bit
// (n-1-s) so the bit layout matches the row-major composite index (site 0
// slowest). Every Majorana monomial is one of these, which keeps the 4^n
// monomial expansion at O(dim) per monomial instead of dense products.
struct PauliString {
  uint32_t x = 0;
  uint32_t z = 0;
  int q = 0;  // phase exponent of i, mod 4

  PauliString mul(const PauliString& o) const {
    PauliString r;
    r.x = x ^ o.x;
    r.z = z ^ o.z;
    r.q = (q + o.q + 2 * std::popcount(z & o.x)) % 4;
    return r;
  }
};

cplx quarter_phase(int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// entry value of the string at column c (row is c ^ x)
cplx string_value(const PauliString& p, uint32_t c) {
  const int sign = std::popcount(p.z & c) % 2 ? -1 : 1;
  return quarter_phase(p.q) * static_cast<double>(sign);
}

PauliString majorana_string(int n_modes, int j) {
  const int mode = j / 2;
  PauliString p;
  for (int s = 0; s < mode; ++s) p.z |= 1u << (n_modes - 1 - s);
  p.x = 1u << (n_modes - 1 - mode);
  if (j % 2 == 1) {  // Y = i X Z
    p.z |= 1u << (n_modes - 1 - mode);
    p.q = 1;
  }
  return p;
}

Operator string_to_dense(const PauliString& p, int n_modes) {
  Operator out(HilbertStructure::uniform(n_modes, 2));
  const uint32_t dim = 1u << n_modes;
  for (uint32_t c = 0; c < dim; ++c) out.at(static_cast<int>(c ^ p.x), static_cast<int>(c)) = string_value(p, c);
  return out;
}

}  // namespace

MajoranaSystem::MajoranaSystem(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 1 || n_modes > 16)
    throw std::invalid_argument("MajoranaSystem: mode count out of range");
  for (int j = 0; j < 2 * n_modes; ++j)
    majoranas_.push_back(string_to_dense(majorana_string(n_modes, j), n_modes));
  PauliString p;
  p.q = n_modes % 4;  // i^n prefactor
  for (int j = 0; j < 2 * n_modes; ++j) p = p.mul(majorana_string(n_modes, j));
  parity_ = string_to_dense(p, n_modes);
}

Operator MajoranaSystem::parity_projector(int lambda) const {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("parity_projector: lambda must be +-1");
  Operator proj = parity_;
  proj *= cplx(0.5 * lambda, 0.0);
  proj += Operator::identity(hilbert()) * cplx(0.5, 0.0);
  return proj;
}

Operator MajoranaSystem::monomial(const std::vector<int>& indices) const {
  std::set<int> seen;
  PauliString p;
  for (int j : indices) {
    if (j < 0 || j >= n_majoranas())
      throw std::invalid_argument("monomial: Majorana index out of range");
    if (!seen.insert(j).second) throw std::invalid_argument("monomial: repeated Majorana index");
    p = p.mul(majorana_string(n_modes_, j));
  }
  return string_to_dense(p, n_modes_);
}

FermionPartition FermionPartition::from_modes(const std::vector<int>& modes) {
  FermionPartition p;
  for (int m : modes) {
    p.a_majoranas.push_back(2 * m);
    p.a_majoranas.push_back(2 * m + 1);
  }
  std::sort(p.a_majoranas.begin(), p.a_majoranas.end());
  return p;
}

FermionPartition FermionPartition::from_majoranas(std::vector<int> majoranas) {
  FermionPartition p;
  p.a_majoranas = std::move(majoranas);
  std::sort(p.a_majoranas.begin(), p.a_majoranas.end());
  return p;
}

bool FermionPartition::contains(int majorana) const {
  return std::binary_search(a_majoranas.begin(), a_majoranas.end(), majorana);
}

int FermionPartition::eta() const {
  const size_t k = a_majoranas.size();
  if (k % 2 != 0)
    throw std::invalid_argument("FermionPartition::eta: odd Majorana count has no +-1 sign");
  return k % 4 == 0 ? 1 : -1;
}

namespace {

uint32_t region_mask(const FermionPartition& region, int n_majoranas) {
  uint32_t mask = 0;
  for (int j : region.a_majoranas) {
    if (j < 0 || j >= n_majoranas)
      throw std::invalid_argument("FermionPartition: Majorana index out of range");
    mask |= 1u << j;
  }
  return mask;
}

}  // namespace

Operator fermionic_partial_transpose(const Operator& rho, const FermionPartition& region_a,
                                     const MajoranaSystem& sys) {
  if (rho.structure() != sys.hilbert())
    throw std::invalid_argument("fermionic_partial_transpose: structure mismatch");
  const int n = sys.n_modes();
  const uint32_t dim = 1u << n;
  const uint32_t a_mask = region_mask(region_a, sys.n_majoranas());
  const double odd_thresh = 1e-10 * std::max(1.0, rho.frobenius_norm());

  Operator out(rho.structure());
  const uint32_t n_monomials = 1u << (2 * n);
  for (uint32_t subset = 0; subset < n_monomials; ++subset) {
    PauliString m;
    for (int j = 0; j < 2 * n; ++j)
      if (subset & (1u << j)) m = m.mul(majorana_string(n, j));
    // w = Tr[m^dag rho] / dim
    cplx w = 0.0;
    for (uint32_t c = 0; c < dim; ++c)
      w += std::conj(string_value(m, c)) * rho.at(static_cast<int>(c ^ m.x), static_cast<int>(c));
    w /= static_cast<double>(dim);

    if (std::popcount(subset) % 2 != 0) {
      if (std::abs(w) > odd_thresh)
        throw std::invalid_argument(
            "fermionic_partial_transpose: state violates fermion parity");
      continue;
    }
    if (std::abs(w) < tol::kMonomialDrop) continue;
    w *= quarter_phase(std::popcount(subset & a_mask));
    for (uint32_t c = 0; c < dim; ++c)
      out.at(static_cast<int>(c ^ m.x), static_cast<int>(c)) += w * string_value(m, c);
  }
  return out;
}

double fermionic_log_negativity(const Operator& rho, const FermionPartition& region_a,
                                const MajoranaSystem& sys) {
  const double tn = trace_norm(fermionic_partial_transpose(rho, region_a, sys));
  double e = std::log2(tn);
  if (std::abs(e) < tol::kNegativitySnap) e = 0.0;
  return e;
}

FermionConditionResult check_fermionic_gibbs_condition(const Operator& hamiltonian,
                                                       const FermionPartition& region_a,
                                                       const MajoranaSystem& sys) {
  if (!hamiltonian.is_hermitian())
    throw std::invalid_argument("check_fermionic_gibbs_condition: H not Hermitian");
  const Operator ht = fermionic_partial_transpose(hamiltonian, region_a, sys);
  const double norm = (ht - ht.adjoint()).frobenius_norm();
  return {norm > tol::commutator_threshold(hamiltonian.frobenius_norm()), norm};
}

FermionConditionResult check_fermionic_canonical_condition(const Operator& hamiltonian, int lambda,
                                                           const FermionPartition& region_a,
                                                           const MajoranaSystem& sys) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("check_fermionic_canonical_condition: lambda must be +-1");
  if (commutator(hamiltonian, sys.parity()).frobenius_norm() >
      tol::commutator_threshold(std::max(1.0, hamiltonian.frobenius_norm())))
    throw std::invalid_argument("check_fermionic_canonical_condition: H breaks parity");
  const int eta = region_a.eta();
  const Operator pt = fermionic_partial_transpose(
      hamiltonian * sys.parity_projector(lambda), region_a, sys);
  const Operator outer = sys.parity_projector(-eta * lambda);
  const double norm = (outer * pt * outer).frobenius_norm();
  return {norm > tol::commutator_threshold(hamiltonian.frobenius_norm()), norm};
}

}  // namespace symtherm
