#include "symtherm/models.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "symtherm/linalg.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

namespace {

Operator pauli2(char name) {
  switch (name) {
    case 'I': return Operator::from_matrix(2, {1, 0, 0, 1});
    case 'X': return Operator::from_matrix(2, {0, 1, 1, 0});
    case 'Y': return Operator::from_matrix(2, {0, cplx(0, -1), cplx(0, 1), 0});
    case 'Z': return Operator::from_matrix(2, {1, 0, 0, -1});
    default: throw std::invalid_argument("PauliTerm: letters must be X, Y or Z");
  }
}

Operator term_operator(int n_sites, const PauliTerm& term, Boundary boundary) {
  if (term.sites.size() != term.paulis.size())
    throw std::invalid_argument("PauliTerm: site and letter counts differ");
  if (!std::isfinite(term.coeff)) throw std::invalid_argument("PauliTerm: coefficient not finite");
  std::vector<Operator> factors(static_cast<size_t>(n_sites),
                                Operator::identity(HilbertStructure({2})));
  std::set<int> seen;
  for (size_t k = 0; k < term.sites.size(); ++k) {
    int s = term.sites[k];
    if (boundary == Boundary::Periodic) s = ((s % n_sites) + n_sites) % n_sites;
    if (s < 0 || s >= n_sites) throw std::invalid_argument("PauliTerm: site index out of range");
    if (!seen.insert(s).second)
      throw std::invalid_argument("PauliTerm: sites must be distinct (after wrapping)");
    factors[static_cast<size_t>(s)] = pauli2(term.paulis[k]);
  }
  Operator out = tensor(factors);
  out *= cplx(term.coeff, 0.0);
  return out;
}

}  // namespace

ModelSpec make_preset(const std::string& name, const PresetParams& p) {
  ModelSpec spec;
  spec.name = name;
  spec.boundary = p.boundary;
  if (name == "cluster-chain") {
    spec.n_sites = p.n_sites;
    for (int i = 0; i < p.n_sites; ++i)
      spec.terms.push_back({{i - 1, i, i + 1}, "ZXZ", p.coeff});
  } else if (name == "ising-classical") {
    spec.n_sites = p.n_sites;
    const int last = p.boundary == Boundary::Periodic ? p.n_sites : p.n_sites - 1;
    for (int i = 0; i < last; ++i) spec.terms.push_back({{i, i + 1}, "ZZ", p.coeff});
  } else if (name == "paramagnet") {
    spec.n_sites = p.n_sites;
    for (int i = 0; i < p.n_sites; ++i) spec.terms.push_back({{i}, "X", p.coeff});
  } else if (name == "xyz2") {
    spec.n_sites = 2;
    spec.boundary = Boundary::Open;
    spec.terms.push_back({{0, 1}, "XX", 1.0});
    spec.terms.push_back({{0, 1}, "YY", p.j * (1.0 + p.gamma) / 2.0});
    spec.terms.push_back({{0, 1}, "ZZ", p.j * (1.0 - p.gamma) / 2.0});
  } else if (name == "u1-hopping") {
    spec.n_sites = p.n_sites;
    const int last = p.boundary == Boundary::Periodic ? p.n_sites : p.n_sites - 1;
    for (int i = 0; i < last; ++i) {
      spec.terms.push_back({{i, i + 1}, "XX", 0.5 * p.coeff});
      spec.terms.push_back({{i, i + 1}, "YY", 0.5 * p.coeff});
    }
  } else if (name == "majorana-hopping") {
    spec.n_modes = p.n_modes;
    const int last = p.boundary == Boundary::Periodic ? p.n_modes : p.n_modes - 1;
    for (int k = 0; k < last; ++k) {
      MajoranaTerm t;
      t.majoranas = {2 * k + 1, (2 * k + 2) % (2 * p.n_modes)};
      t.coeff = cplx(0.0, p.coeff);
      spec.majorana_terms.push_back(std::move(t));
    }
  } else {
    throw std::invalid_argument("make_preset: unknown preset '" + name + "'");
  }
  return spec;
}

Operator build_hamiltonian(const ModelSpec& spec) {
  if (spec.fermionic())
    throw std::invalid_argument("build_hamiltonian: fermionic spec needs a MajoranaSystem");
  if (spec.n_sites < 1) throw std::invalid_argument("build_hamiltonian: n_sites must be >= 1");
  Operator h = Operator::zero(HilbertStructure::uniform(spec.n_sites, 2));
  for (const auto& term : spec.terms) h += term_operator(spec.n_sites, term, spec.boundary);
  if (!h.is_hermitian()) throw std::invalid_argument("build_hamiltonian: term set not Hermitian");
  return h;
}

Operator build_hamiltonian(const ModelSpec& spec, const Representation& rep) {
  Operator h = build_hamiltonian(spec);
  if (rep.hilbert() != h.structure())
    throw std::invalid_argument("build_hamiltonian: representation dimension mismatch");
  if (!is_weakly_symmetric(rep, h))
    throw std::invalid_argument("build_hamiltonian: Hamiltonian violates the declared symmetry");
  return h;
}

Operator build_fermionic_hamiltonian(const ModelSpec& spec, const MajoranaSystem& sys) {
  if (!spec.fermionic())
    throw std::invalid_argument("build_fermionic_hamiltonian: spec has no Majorana terms");
  if (spec.n_modes != sys.n_modes())
    throw std::invalid_argument("build_fermionic_hamiltonian: mode count mismatch");
  Operator h = Operator::zero(sys.hilbert());
  for (const auto& term : spec.majorana_terms) {
    Operator m = sys.monomial(term.majoranas);
    m *= term.coeff;
    h += m;
  }
  if (!h.is_hermitian())
    throw std::invalid_argument("build_fermionic_hamiltonian: term set not Hermitian");
  if (commutator(h, sys.parity()).frobenius_norm() >
      tol::commutator_threshold(std::max(1.0, h.frobenius_norm())))
    throw std::invalid_argument("build_fermionic_hamiltonian: term set breaks fermion parity");
  return h;
}

// --- closed forms ------------------------------------------------------------

double oracle_xyz_canonical_negativity(double j, double gamma, double beta) {
  return 0.5 * std::abs(std::tanh(beta * j * gamma));
}

double oracle_cluster_gibbs_EN(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("oracle_cluster_gibbs_EN: lambda outside [0, 1]");
  double sum = 0.0;
  for (int a : {1, -1})
    for (int b : {1, -1}) sum += std::abs(1.0 + lambda * (a + b) - lambda * lambda * a * b);
  return 2.0 * std::log2(sum / 4.0);
}

namespace {

// sum over the four boundary eigenvalue pairs, one sign s = mu * Lambda
double boundary_sum(double lambda, int s) {
  double total = 0.0;
  for (int a1 : {1, -1})
    for (int b1 : {1, -1})
      for (int a2 : {1, -1})
        for (int b2 : {1, -1}) {
          const double f = (1.0 + lambda * (a1 + b1) - lambda * lambda * a1 * b1) *
                           (1.0 + lambda * (a2 + b2) - lambda * lambda * a2 * b2);
          const double g = (1.0 - lambda * (a1 + b1) - lambda * lambda * a1 * b1) *
                           (1.0 - lambda * (a2 + b2) - lambda * lambda * a2 * b2);
          total += std::abs(f + s * a1 * b1 * a2 * b2 * g);
        }
  return total;
}

}  // namespace

double oracle_cluster_canonical_EN(double lambda, int n_sites, int lambda_sector) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("oracle_cluster_canonical_EN: lambda outside [0, 1]");
  if (n_sites < 4 || n_sites % 2 != 0)
    throw std::invalid_argument("oracle_cluster_canonical_EN: N must be even and >= 4");
  if (lambda_sector != 1 && lambda_sector != -1)
    throw std::invalid_argument("oracle_cluster_canonical_EN: sector must be +-1");
  if (lambda_sector == -1 && lambda == 1.0)
    throw std::invalid_argument(
        "oracle_cluster_canonical_EN: lambda = 1 in the odd sector is a 0/0 limit");
  const double denom = 1.0 + lambda_sector * std::pow(lambda, n_sites);
  double num = 0.0;
  for (int s : {1, -1}) {
    const double r = (1.0 + s * lambda_sector * std::pow(lambda, n_sites - 4)) / denom;
    num += r * boundary_sum(lambda, s);
  }
  return std::log2(num / 32.0);
}

double oracle_cluster_canonical_EN_limit(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("oracle_cluster_canonical_EN_limit: lambda outside [0, 1]");
  return std::log2((boundary_sum(lambda, 1) + boundary_sum(lambda, -1)) / 32.0);
}

std::optional<SeparableDecomposition> oracle_cluster_separable_decomposition(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("oracle_cluster_separable_decomposition: lambda outside [0, 1]");
  const double alpha = lambda * lambda + 2.0 * lambda;
  if (alpha > 1.0 + 1e-15) return std::nullopt;

  const HilbertStructure hs = HilbertStructure::uniform(4, 2);
  auto pauli_op = [&](const std::vector<int>& sites, const std::string& ps) {
    PauliTerm t{sites, ps, 1.0};
    return term_operator(4, t, Boundary::Open);
  };
  const Operator left = pauli_op({0, 1, 2}, "ZXZ");
  const Operator right = pauli_op({1, 2, 3}, "ZXZ");

  SeparableDecomposition dec;
  dec.probs = {1.0 / (lambda + 2.0), 1.0 / (lambda + 2.0), lambda / (lambda + 2.0)};
  const double norm = 1.0 / 16.0;
  for (const Operator& pauli : {left, right, left * right}) {
    Operator comp = Operator::identity(hs) + pauli * cplx(alpha, 0.0);
    comp *= cplx(norm, 0.0);
    const auto eig = eig_hermitian(comp);
    if (eig.values.front() < -1e-12)
      throw std::logic_error("oracle_cluster_separable_decomposition: component not PSD");
    dec.components.push_back(std::move(comp));
  }
  // the mixture must reproduce the boundary factor (1 + l L)(1 + l R)/16
  Operator mix = Operator::zero(hs);
  for (size_t i = 0; i < 3; ++i) mix += dec.components[i] * cplx(dec.probs[i], 0.0);
  Operator target = (Operator::identity(hs) + left * cplx(lambda, 0.0)) *
                    (Operator::identity(hs) + right * cplx(lambda, 0.0));
  target *= cplx(norm, 0.0);
  if ((mix - target).frobenius_norm() > 1e-12 * std::max(1.0, target.frobenius_norm()))
    throw std::logic_error("oracle_cluster_separable_decomposition: mixture mismatch");
  return dec;
}

}  // namespace symtherm
