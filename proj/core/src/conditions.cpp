#include "symtherm/conditions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symtherm/linalg.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

namespace {

void require_symmetric(const Representation& rep, const Operator& h, const char* who) {
  if (rep.hilbert() != h.structure())
    throw std::invalid_argument(std::string(who) + ": representation dimension mismatch");
  if (!is_weakly_symmetric(rep, h))
    throw std::invalid_argument(std::string(who) + ": Hamiltonian is not symmetric");
}

/// Candidate witnesses: all non-identity elements of a finite group; for
/// U(1), a resolving angle plus one irrational multiple of it.
std::vector<GroupElement> witness_elements(const Representation& rep) {
  if (rep.group().is_finite()) {
    std::vector<GroupElement> out;
    for (auto& g : group_elements(rep.group()))
      if (!g.is_identity()) out.push_back(std::move(g));
    return out;
  }
  long qmin = 0, qmax = 0;
  bool first = true;
  for (const auto& lab : realizable_irreps(rep)) {
    if (first || lab.charge < qmin) qmin = lab.charge;
    if (first || lab.charge > qmax) qmax = lab.charge;
    first = false;
  }
  const double base = 2.0 * std::numbers::pi / static_cast<double>(qmax - qmin + 1);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  return {GroupElement{{}, base}, GroupElement{{}, base * golden}};
}

Operator nonempty_projector(const Representation& rep, const IrrepLabel& sector, const char* who) {
  Operator proj = irrep_projector(rep, sector);
  if (proj.trace().real() < 0.5)
    throw std::invalid_argument(std::string(who) + ": empty charge sector");
  return proj;
}

Partition all_sites(const Representation& rep) {
  Partition p;
  for (int i = 0; i < rep.n_sites(); ++i) p.a_sites.push_back(i);
  return p;
}

}  // namespace

ConditionResult check_sec(const Operator& hamiltonian, const Representation& rep,
                          const Partition& region_a) {
  require_symmetric(rep, hamiltonian, "check_sec");
  region_a.validate_bipartition(rep.n_sites());
  ConditionResult res;
  for (const auto& g : witness_elements(rep)) {
    const double n = commutator(region_unitary(rep, region_a, g), hamiltonian).frobenius_norm();
    if (n > res.norm) {
      res.norm = n;
      res.witness = g;
    }
  }
  res.holds = res.norm > tol::commutator_threshold(hamiltonian.frobenius_norm());
  if (!res.holds) res.witness.reset();
  return res;
}

ConditionResult check_ec(const Operator& hamiltonian, const Representation& rep,
                         const IrrepLabel& sector, const Partition& region_a) {
  require_symmetric(rep, hamiltonian, "check_ec");
  region_a.validate_bipartition(rep.n_sites());
  const Operator proj = nonempty_projector(rep, sector, "check_ec");
  ConditionResult res;
  for (const auto& g : witness_elements(rep)) {
    const double n =
        (commutator(region_unitary(rep, region_a, g), hamiltonian) * proj).frobenius_norm();
    if (n > res.norm) {
      res.norm = n;
      res.witness = g;
    }
  }
  res.holds = res.norm > tol::commutator_threshold(hamiltonian.frobenius_norm());
  if (!res.holds) res.witness.reset();
  return res;
}

ConditionResult check_nc(const Operator& hamiltonian, const Representation& rep,
                         const IrrepLabel& sector, const Partition& region_a) {
  require_symmetric(rep, hamiltonian, "check_nc");
  region_a.validate_bipartition(rep.n_sites());
  nonempty_projector(rep, sector, "check_nc");

  // conjugate everything into the basis that diagonalizes every u_i, then the
  // ordinary partial transpose implements the paper's adapted-basis transpose
  const Operator w = symmetry_adapted_basis(rep, all_sites(rep));
  const Operator h_ad = w.adjoint() * hamiltonian * w;
  const Operator proj_ad = w.adjoint() * irrep_projector(rep, sector) * w;
  const Operator rest = Operator::identity(h_ad.structure()) - proj_ad;
  const Operator pt = partial_transpose(h_ad * proj_ad, region_a);
  ConditionResult res;
  res.norm = (rest * pt * rest).frobenius_norm();
  res.holds = res.norm > tol::commutator_threshold(hamiltonian.frobenius_norm());
  return res;
}

bool verify_ec_nc_equivalence(const Operator& hamiltonian, const Representation& rep,
                              const IrrepLabel& sector, const Partition& region_a) {
  const ConditionResult ec = check_ec(hamiltonian, rep, sector, region_a);
  const ConditionResult nc = check_nc(hamiltonian, rep, sector, region_a);
  if (ec.holds != nc.holds) return false;
  if (ec.holds) return true;

  // both false: the product must be block diagonal over the region-A irreps
  const Operator hp = hamiltonian * irrep_projector(rep, sector);
  Operator blocks = Operator::zero(hp.structure());
  std::vector<IrrepLabel> labels;
  if (rep.group().is_finite()) {
    for (const auto& e : group_elements(rep.group())) labels.push_back(IrrepLabel{e.exps, 0});
  } else {
    Partition b;
    b.a_sites = region_a.complement(rep.n_sites());
    long qlo = 0, qhi = 0;
    for (int i : region_a.a_sites) {
      const auto& ch = rep.site_rep(i).charges;
      qlo += *std::min_element(ch.begin(), ch.end());
      qhi += *std::max_element(ch.begin(), ch.end());
    }
    for (long q = qlo; q <= qhi; ++q) labels.push_back(IrrepLabel{{}, q});
  }
  for (const auto& lam : labels) {
    const Operator pa = region_irrep_projector(rep, region_a, lam);
    blocks += pa * hp * pa;
  }
  const double resid = (hp - blocks).frobenius_norm();
  return resid <= 1e-10 * std::max(1.0, hp.frobenius_norm());
}

PersistenceReport predict_persistence(const EnsembleSpec& spec, const Representation& rep,
                                      const Partition& region_a) {
  PersistenceReport report;
  report.sec = check_sec(spec.hamiltonian, rep, region_a);
  for (const auto& lab : realizable_irreps(rep)) {
    SectorReport s;
    s.label = lab;
    s.ec = check_ec(spec.hamiltonian, rep, lab, region_a);
    s.nc = check_nc(spec.hamiltonian, rep, lab, region_a);
    report.sectors.push_back(std::move(s));
  }
  return report;
}

FermionicReport predict_persistence_fermionic(const Operator& hamiltonian,
                                              const FermionPartition& region_a,
                                              const MajoranaSystem& sys) {
  FermionicReport report;
  report.gibbs = check_fermionic_gibbs_condition(hamiltonian, region_a, sys);
  for (int lambda : {1, -1})
    report.canonical.emplace_back(
        lambda, check_fermionic_canonical_condition(hamiltonian, lambda, region_a, sys));
  return report;
}

}  // namespace symtherm
