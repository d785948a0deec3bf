// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "symtherm/conditions.hpp"
#include "symtherm/ensembles.hpp"
#include "symtherm/entanglement.hpp"
#include "symtherm/fermions.hpp"
#include "symtherm/indistinguishability.hpp"
#include "symtherm/linalg.hpp"
#include "symtherm/models.hpp"

using namespace symtherm;
using testutil::pauli_string;

namespace {

int g_failed_checks = 0;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok) {
    ++g_failed_checks;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  return ok;
}

Representation z2_flip(int n) {
  return Representation::homogeneous(AbelianGroup::finite({2}), SiteRep::from_pauli({"X"}), n);
}

Representation z3_qubit(int n) {
  const auto g = AbelianGroup::finite({3});
  return Representation::homogeneous(g, SiteRep::from_diag_phases(g, {{0, 1}}), n);
}

Representation z2z2_qutrit(int n) {
  const auto g = AbelianGroup::finite({2, 2});
  return Representation::homogeneous(g, SiteRep::from_diag_phases(g, {{0, 0, 1}, {0, 1, 0}}), n);
}

Representation u1_qubit(int n) {
  return Representation::homogeneous(AbelianGroup::charge_u1(), SiteRep::from_charges({0, 1}), n);
}

Operator cluster_hamiltonian(int n, const Representation& rep) {
  return build_hamiltonian(make_preset("cluster-chain", {.n_sites = n}), rep);
}

// ---- criterion bodies -------------------------------------------------------

bool criterion_1_xyz(std::string& detail) {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> uj(-2.0, 2.0), ug(-1.0, 1.0), ub(0.01, 4.0);
  const auto rep = z2_flip(2);
  const IrrepLabel plus{{0}, 0};
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double j = uj(rng), g = ug(rng), beta = ub(rng);
    const Operator h = build_hamiltonian(make_preset("xyz2", {.j = j, .gamma = g}), rep);
    const Operator rho = canonical_state(h, beta, rep, plus);
    const double neg = (trace_norm(partial_transpose(rho, Partition{0})) - 1.0) / 2.0;
    worst = std::max(worst, std::abs(neg - oracle_xyz_canonical_negativity(j, g, beta)));
  }
  detail = "max |N - closed form| = " + sci(worst);
  return expect(worst <= 1e-10, "negativity mismatch above 1e-10", detail);
}

bool criterion_2_cluster_gibbs(std::string& detail) {
  const int n = 6;
  const Operator h = build_hamiltonian(make_preset("cluster-chain", {.n_sites = n}));
  double worst = 0.0;
  for (int a_size : {2, 3}) {
    Partition part;
    for (int s = 0; s < a_size; ++s) part.a_sites.push_back(s);
    for (int k = 0; k < 50; ++k) {
      const double lam = 0.019 * (k + 1);  // 0.019 .. 0.95
      const double en = log_negativity(gibbs_state(h, std::atanh(lam)), part);
      worst = std::max(worst, std::abs(en - oracle_cluster_gibbs_EN(lam)));
    }
  }
  bool ok = expect(worst <= 1e-8, "oracle mismatch above 1e-8", detail);

  const double lc = std::sqrt(2.0) - 1.0;
  const double below = log_negativity(gibbs_state(h, std::atanh(lc - 1e-3)), Partition{0, 1});
  const double above = log_negativity(gibbs_state(h, std::atanh(lc + 1e-3)), Partition{0, 1});
  ok &= expect(below == 0.0, "E_N not zero just below lambda_c", detail);
  ok &= expect(above > 0.0, "E_N not positive just above lambda_c", detail);
  detail = "max err " + sci(worst) + ", E(lc-) = " + sci(below) + ", E(lc+) = " + sci(above);
  return ok;
}

bool criterion_3_cluster_canonical(std::string& detail) {
  double worst = 0.0;
  double min_en = 1e9;
  bool ok = true;
  for (int n : {4, 6}) {
    const auto rep = z2_flip(n);
    const Operator h = cluster_hamiltonian(n, rep);
    std::vector<Partition> parts{Partition{0, 1}};
    if (n == 6) parts.push_back(Partition{0, 1, 2});
    for (int sector : {1, -1}) {
      const IrrepLabel lab{{sector == 1 ? 0 : 1}, 0};
      for (const auto& part : parts) {
        for (int k = 0; k <= 25; ++k) {
          const double lam = k == 25 ? 1.0 : 0.02 + 0.039 * k;  // (0, 0.96] plus the endpoint
          const double beta = lam >= 1.0 ? 19.0 : std::atanh(lam);
          const double en = log_negativity(canonical_state(h, beta, rep, lab), part);
          min_en = std::min(min_en, en);
          if (!(lam >= 1.0 && sector == -1))  // 0/0 limit of the closed form
            worst = std::max(worst, std::abs(en - oracle_cluster_canonical_EN(lam, n, sector)));
        }
      }
    }
  }
  ok &= expect(worst <= 1e-8, "r-corrected oracle mismatch above 1e-8", detail);
  ok &= expect(min_en > 0.0, "canonical negativity not positive at some tested lambda", detail);
  detail = "max err " + sci(worst) + ", min E_N " + sci(min_en);
  return ok;
}

bool criterion_4_endpoints(std::string& detail) {
  const double gibbs_end = oracle_cluster_gibbs_EN(1.0);
  const double canon_end = oracle_cluster_canonical_EN_limit(1.0);
  const Operator h = build_hamiltonian(make_preset("cluster-chain", {.n_sites = 6}));
  const double numeric_end = log_negativity(gibbs_state(h, 19.0), Partition{0, 1, 2});
  detail = "gibbs " + sci(gibbs_end) + ", canonical " + sci(canon_end) + ", numeric gibbs " + sci(numeric_end);
  bool ok = expect(std::abs(gibbs_end - 2.0) <= 1e-8, "gibbs endpoint", detail);
  ok &= expect(std::abs(canon_end - 2.0) <= 1e-8, "canonical endpoint", detail);
  ok &= expect(std::abs(numeric_end - 2.0) <= 1e-8, "numeric endpoint", detail);
  return ok;
}

bool criterion_5_ec_nc(std::string& detail) {
  std::mt19937_64 rng(1005);
  int trials = 0, mismatches = 0;
  auto run_group = [&](const Representation& rep, int count) {
    const auto sectors = realizable_irreps(rep);
    const int n = rep.n_sites();
    for (int k = 0; k < count; ++k) {
      const Operator h = testutil::twirl(rep, testutil::random_hermitian(rep.hilbert(), rng));
      const auto& sector = sectors[rng() % sectors.size()];
      const int a_size = 1 + static_cast<int>(rng() % (n - 1));
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      const Partition part(std::vector<int>(all.begin(), all.begin() + a_size));
      if (!verify_ec_nc_equivalence(h, rep, sector, part)) ++mismatches;
      ++trials;
    }
  };
  for (int n = 2; n <= 4; ++n) run_group(z2_flip(n), 30);
  for (int n = 2; n <= 4; ++n) run_group(z3_qubit(n), 25);
  run_group(z2z2_qutrit(2), 20);
  run_group(z2z2_qutrit(3), 15);
  run_group(z2z2_qutrit(4), 10);
  detail = std::to_string(trials) + " trials, " + std::to_string(mismatches) + " mismatches";
  bool ok = expect(trials >= 200, "fewer than 200 trials", detail);
  ok &= expect(mismatches == 0, "EC/NC mismatch found", detail);
  return ok;
}

bool criterion_6_theorem3(std::string& detail) {
  bool ok = true;
  int generic_checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Representation& rep : {z2_flip(n), z3_qubit(n), u1_qubit(n)}) {
      std::vector<IrrepLabel> labels = realizable_irreps(rep);
      for (const auto& lab : labels) {
        if (classify_irrep(rep, lab) != IrrepClass::Generic) continue;
        ++generic_checked;
        for (int i = 0; i < n && ok; ++i) {
          for (int j = i + 1; j < n && ok; ++j) {
            const Operator v = entangling_perturbation(rep, lab, i, j);
            // every bipartition separating i from j
            for (int mask = 0; mask < (1 << n); ++mask) {
              if (!(mask & (1 << i)) || (mask & (1 << j))) continue;
              Partition part;
              for (int s = 0; s < n; ++s)
                if (mask & (1 << s)) part.a_sites.push_back(s);
              if (part.a_sites.size() == static_cast<size_t>(n)) continue;
              if (!check_ec(v, rep, lab, part).holds) {
                ok = expect(false, "perturbation fails EC somewhere", detail);
                break;
              }
            }
          }
        }
      }
    }
  }
  ok &= expect(generic_checked > 0, "no generic sectors enumerated", detail);

  // semiuniform Z3 N=3 trivial sector: no 2-local symmetric Hamiltonian entangles
  const auto rep3 = z3_qubit(3);
  const IrrepLabel trivial{{0}, 0};
  const auto pair_rep = Representation::homogeneous(rep3.group(), rep3.site_rep(0), 2);
  std::mt19937_64 rng(1006);
  int entangling_found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Operator h = Operator::zero(rep3.hilbert());
    for (const auto& [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
      const Operator local = testutil::twirl(
          pair_rep, testutil::random_hermitian(HilbertStructure::uniform(2, 2), rng));
      // embed the two-site block on sites (i, j)
      const auto& hs = rep3.hilbert();
      Operator embedded = Operator::zero(hs);
      const HilbertStructure two = HilbertStructure::uniform(2, 2);
      for (int r = 0; r < hs.total_dim(); ++r) {
        const auto mr = hs.unpack(r);
        for (int c = 0; c < hs.total_dim(); ++c) {
          const auto mc = hs.unpack(c);
          bool same_rest = true;
          for (int s = 0; s < 3; ++s)
            if (s != i && s != j && mr[s] != mc[s]) same_rest = false;
          if (!same_rest) continue;
          embedded.at(r, c) = local.at(two.pack({mr[i], mr[j]}), two.pack({mc[i], mc[j]}));
        }
      }
      h += embedded;
    }
    for (int mask = 1; mask < 7; ++mask) {
      Partition part;
      for (int s = 0; s < 3; ++s)
        if (mask & (1 << s)) part.a_sites.push_back(s);
      if (check_ec(h, rep3, trivial, part).holds) ++entangling_found;
    }
  }
  ok &= expect(entangling_found == 0, "2-local Hamiltonian entangled a semiuniform sector",
               detail);
  detail = std::to_string(generic_checked) + " generic sectors, semiuniform violations " +
           std::to_string(entangling_found);
  return ok;
}

bool criterion_7_census(std::string& detail) {
  const auto c_z2 = semiuniform_census(z2_flip(3));
  const auto c_z3n4 = semiuniform_census(z3_qubit(4));
  const auto c_z3n3 = semiuniform_census(z3_qubit(3));
  detail = "Z2 N=3 (" + std::to_string(c_z2.total) + "," + std::to_string(c_z2.semiuniform) +
           "), Z3 N=4 (" + std::to_string(c_z3n4.total) + "," +
           std::to_string(c_z3n4.semiuniform) + "), Z3 N=3 semiuniform " +
           std::to_string(c_z3n3.semiuniform);
  bool ok = expect(c_z2.semiuniform == 0, "Z2 N=3 census", detail);
  ok &= expect(c_z3n4.semiuniform == 0, "Z3 N=4 census", detail);
  ok &= expect(c_z3n3.semiuniform == 1 &&
                   classify_irrep(z3_qubit(3), IrrepLabel{{0}, 0}) == IrrepClass::Semiuniform,
               "Z3 N=3 example not found", detail);
  return ok;
}

bool criterion_8_free_energy(std::string& detail) {
  std::mt19937_64 rng(1008);
  const auto rep = z2_flip(4);
  // half coupling keeps every canonical weight above the relative-entropy
  // support floor at the coldest point (beta 5 x bandwidth 4 -> e^{-20})
  const Operator h =
      build_hamiltonian(make_preset("cluster-chain", {.n_sites = 4, .coeff = 0.5}), rep);
  const IrrepLabel plus{{0}, 0};
  const Operator proj = irrep_projector(rep, plus);
  double worst_gap = 0.0;
  bool ok = true;
  for (double beta : {0.1, 1.0, 5.0}) {
    const Operator canon = canonical_state(h, beta, rep, plus);
    const double f_canon = free_energy(canon, h, beta);
    for (int k = 0; k < 50; ++k) {
      const Operator m = testutil::random_matrix(rep.hilbert(), rng);
      Operator rho = proj * (m * m.adjoint()) * proj;
      rho *= cplx(1.0 / rho.trace().real(), 0.0);
      const double f_rho = free_energy(rho, h, beta);
      ok &= expect(f_canon <= f_rho + 1e-10, "free-energy minimality violated", detail);
      const double gap = (f_canon - f_rho) + relative_entropy(rho, canon) / beta;
      worst_gap = std::max(worst_gap, std::abs(gap));
    }
  }
  ok &= expect(worst_gap <= 1e-8, "gap identity above 1e-8", detail);
  detail = "max |gap identity residual| = " + sci(worst_gap);
  return ok;
}

bool criterion_9_fermions(std::string& detail) {
  bool ok = true;
  // monomial rule, exact
  const MajoranaSystem sys2(2);
  const FermionPartition cut2 = FermionPartition::from_modes({0});
  const Operator v = sys2.majorana(0) * sys2.majorana(2) * cplx(0.0, 1.0);
  const Operator pt = fermionic_partial_transpose(v, cut2, sys2);
  const Operator expect_pt = sys2.majorana(0) * sys2.majorana(2) * cplx(-1.0, 0.0);
  ok &= expect(testutil::max_abs_diff(pt, expect_pt) < 1e-14, "monomial rule", detail);

  // 4-mode hopping chain, middle cut: strictly positive E_N^f
  const MajoranaSystem sys4(4);
  const Operator h4 = build_fermionic_hamiltonian(
      make_preset("majorana-hopping", {.n_modes = 4, .boundary = Boundary::Open}), sys4);
  const FermionPartition half = FermionPartition::from_modes({0, 1});
  for (double beta : {0.01, 0.1, 1.0}) {
    const double en = fermionic_log_negativity(gibbs_state(h4, beta), half, sys4);
    ok &= expect(en > 0.0, "4-mode negativity not positive at beta " + std::to_string(beta),
                 detail);
  }

  // 2-mode instance equals the precomputed closed form
  const Operator h2 = sys2.majorana(1) * sys2.majorana(2) * cplx(0.0, 1.0);
  double worst = 0.0;
  for (double beta : {0.01, 0.1, 1.0}) {
    const double en = fermionic_log_negativity(gibbs_state(h2, beta), cut2, sys2);
    const double oracle = 0.5 * std::log2(1.0 + std::tanh(beta) * std::tanh(beta));
    worst = std::max(worst, std::abs(en - oracle));
  }
  ok &= expect(worst <= 1e-9, "2-mode oracle mismatch above 1e-9", detail);

  // canonical condition for the crossing bilinear
  for (int lambda : {1, -1})
    ok &= expect(check_fermionic_canonical_condition(v, lambda, cut2, sys2).holds,
                 "canonical condition failed", detail);
  detail = "2-mode oracle err " + sci(worst);
  return ok;
}

bool criterion_10_local_indistinguishability(std::string& detail) {
  bool ok = true;
  // u = X: exactly zero marginal distance for every bipartition at N = 4, 5
  for (int n : {4, 5}) {
    const auto rep = z2_flip(n);
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      Partition part;
      for (int s = 0; s < n; ++s)
        if (mask & (1 << s)) part.a_sites.push_back(s);
      const double d = local_sector_distance_beta0(rep, IrrepLabel{{1}, 0}, part);
      ok &= expect(d < 1e-13, "nonzero distance for u = X", detail);
    }
  }

  // qutrit slope within 5% of -ln 3 over N = 4..8
  const auto g = AbelianGroup::finite({2});
  std::vector<double> xs, ys;
  for (int n = 4; n <= 8; ++n) {
    const auto rep =
        Representation::homogeneous(g, SiteRep::from_diag_phases(g, {{0, 0, 1}}), n);
    xs.push_back(n);
    ys.push_back(std::log(local_sector_distance_beta0(rep, IrrepLabel{{0}, 0}, Partition{0})));
  }
  const auto fit = testutil::fit_line(xs, ys);
  const double target = -std::log(3.0);
  ok &= expect(std::abs(fit.slope - target) <= 0.05 * std::abs(target),
               "slope off by more than 5%", detail);
  detail = "fitted slope " + sci(fit.slope) + " vs -ln3 = " + sci(target);
  return ok;
}

bool criterion_11_invariant_suites(std::string& detail) {
  // compact re-run of each module's invariant bullets (the full statements
  // also run as the per-module ctest suites)
  bool ok = true;
  std::mt19937_64 rng(1011);

  {  // linalg
    const auto hs = HilbertStructure::uniform(3, 2);
    const Operator m = testutil::random_matrix(hs, rng);
    const Operator pt = partial_transpose(m, Partition{1});
    ok &= expect(testutil::max_abs_diff(partial_transpose(pt, Partition{1}), m) == 0.0 &&
                     std::abs(pt.trace() - m.trace()) < 1e-12 &&
                     std::abs(pt.frobenius_norm() - m.frobenius_norm()) < 1e-12,
                 "transpose involution", detail);
    const Operator rho = testutil::random_state(hs, rng);
    const Operator red = partial_trace(rho, Partition{0, 2});
    ok &= expect(eig_hermitian(red).values.front() > -1e-10 &&
                     std::abs(red.trace().real() - 1.0) < 1e-10,
                 "reduced state positivity", detail);
    const Operator h = testutil::random_hermitian(HilbertStructure({32}), rng);
    const auto eig = eig_hermitian(h);
    Operator recon = Operator::zero(h.structure());
    for (int k = 0; k < 32; ++k)
      for (int r = 0; r < 32; ++r)
        for (int c = 0; c < 32; ++c)
          recon.at(r, c) += eig.vectors.at(r, k) * eig.values[k] * std::conj(eig.vectors.at(c, k));
    ok &= expect((recon - h).frobenius_norm() <= 1e-10 * h.frobenius_norm(), "eig recon", detail);
    ok &= expect((eig.vectors.adjoint() * eig.vectors - Operator::identity(h.structure()))
                         .frobenius_norm() < 1e-10,
                 "eig unitarity", detail);
    const Operator u = eig_hermitian(testutil::random_hermitian(hs, rng)).vectors;
    ok &= expect(std::abs(trace_norm(u * rho) - trace_norm(rho)) < 1e-10, "trace-norm unitary",
                 detail);
    const Operator e1 = expm_hermitian(h, 0.2) * expm_hermitian(h, 0.3);
    ok &= expect((e1 - expm_hermitian(h, 0.5)).frobenius_norm() <=
                     1e-9 * expm_hermitian(h, 0.5).frobenius_norm(),
                 "expm semigroup", detail);
  }
  {  // symmetry
    for (const Representation& rep : {z2_flip(3), z3_qubit(3)}) {
      Operator sum = Operator::zero(rep.hilbert());
      for (const auto& lab : realizable_irreps(rep)) {
        const Operator p = irrep_projector(rep, lab);
        sum += p;
        ok &= expect((p * p - p).frobenius_norm() < 1e-10, "projector idempotence", detail);
        for (const auto& g : group_elements(rep.group())) {
          ok &= expect(commutator(global_unitary(rep, g), p).frobenius_norm() < 1e-10,
                       "[U, Pi]", detail);
          ok &= expect((global_unitary(rep, g) * p - p * character(rep.group(), lab, g))
                               .frobenius_norm() < 1e-10,
                       "eigenrelation", detail);
        }
      }
      ok &= expect((sum - Operator::identity(rep.hilbert())).frobenius_norm() < 1e-10,
                   "resolution of identity", detail);
    }
  }
  {  // ensembles
    const auto rep = z2_flip(4);
    const Operator h = cluster_hamiltonian(4, rep);
    const IrrepLabel plus{{0}, 0};
    const Operator proj = irrep_projector(rep, plus);
    Operator a = proj * expm_hermitian(h, -0.9) * proj;
    a *= cplx(1.0 / a.trace().real(), 0.0);
    ok &= expect((a - canonical_state(h, 0.9, rep, plus)).frobenius_norm() < 1e-10,
                 "construction orders", detail);
    ok &= expect(testutil::max_abs_diff(gibbs_state(h, 0.0),
                                        Operator::identity(h.structure()) * cplx(1.0 / 16, 0.0)) ==
                     0.0,
                 "beta=0 gibbs", detail);
  }
  {  // entanglement
    const auto rep = z2_flip(4);
    const Operator h = cluster_hamiltonian(4, rep);
    const Operator rho = canonical_state(h, 0.7, rep, IrrepLabel{{0}, 0});
    ok &= expect(std::abs(log_negativity(rho, Partition{0, 1}) -
                          log_negativity(rho, Partition{2, 3})) < 1e-9,
                 "A/B symmetry", detail);
  }
  {  // fermions
    const MajoranaSystem sys(4);
    for (int j = 0; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) {
        const Operator prod = sys.majorana(j) * sys.majorana(k);
        ok &= expect((prod + prod.adjoint()).frobenius_norm() < 1e-12, "anticommutation", detail);
      }
    const Operator p = sys.parity();
    ok &= expect(testutil::max_abs_diff(
                     fermionic_partial_transpose(p, FermionPartition::from_modes({0}), sys),
                     p * cplx(-1.0, 0.0)) < 1e-13,
                 "parity transpose sign", detail);
  }
  {  // conditions: EC implies SEC, and equivalence on fresh fixtures
    const auto rep = z2_flip(3);
    for (int t = 0; t < 10; ++t) {
      const Operator h = testutil::twirl(rep, testutil::random_hermitian(rep.hilbert(), rng));
      const Partition part{static_cast<int>(rng() % 3)};
      for (const auto& lab : realizable_irreps(rep)) {
        if (check_ec(h, rep, lab, part).holds)
          ok &= expect(check_sec(h, rep, part).holds, "EC without SEC", detail);
        ok &= expect(verify_ec_nc_equivalence(h, rep, lab, part), "EC/NC mismatch", detail);
      }
    }
  }
  {  // models: oracle grids at N=4 plus the sign-convention assertion
    const auto rep = z2_flip(4);
    const Operator hp = cluster_hamiltonian(4, rep);
    const Operator hm = build_hamiltonian(make_preset("cluster-chain",
                                                      {.n_sites = 4, .coeff = -1.0}), rep);
    for (int k = 1; k <= 20; ++k) {
      const double lam = 0.045 * k;
      const double beta = std::atanh(lam);
      ok &= expect(std::abs(log_negativity(gibbs_state(hp, beta), Partition{0, 1}) -
                            oracle_cluster_gibbs_EN(lam)) <= 1e-8,
                   "gibbs oracle grid", detail);
      ok &= expect(std::abs(log_negativity(canonical_state(hp, beta, rep, IrrepLabel{{1}, 0}),
                                           Partition{0, 1}) -
                            oracle_cluster_canonical_EN(lam, 4, -1)) <= 1e-8,
                   "canonical oracle grid", detail);
    }
    ok &= expect(std::abs(log_negativity(gibbs_state(hp, 0.8), Partition{0, 1}) -
                          log_negativity(gibbs_state(hm, 0.8), Partition{0, 1})) < 1e-10,
                 "sign convention", detail);
  }
  {  // indistinguishability
    double total = 0.0;
    const auto rep = z3_qubit(5);
    for (const auto& e : group_elements(rep.group()))
      total += projector_trace_ratio(rep, IrrepLabel{e.exps, 0}, 5).exact;
    ok &= expect(std::abs(total - 32.0) < 1e-10, "projector trace sum", detail);
    const auto repq = Representation::homogeneous(
        AbelianGroup::finite({2}),
        SiteRep::from_diag_phases(AbelianGroup::finite({2}), {{0, 0, 1}}), 4);
    Operator pi = irrep_projector(repq, IrrepLabel{{0}, 0});
    pi *= cplx(1.0 / pi.trace().real(), 0.0);
    Operator delta = partial_trace(pi, Partition{0});
    delta -= Operator::identity(delta.structure()) * cplx(1.0 / 3.0, 0.0);
    ok &= expect(std::abs(local_sector_distance_beta0(repq, IrrepLabel{{0}, 0}, Partition{0}) -
                          trace_norm(delta)) < 1e-10,
                 "two-way beta=0 agreement", detail);
  }
  if (detail.empty()) detail = "module invariant checks re-run in process";
  return ok;
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-qubit XYZ canonical negativity = |tanh(bJg)|/2 (1e-10, 50 samples)", 1.0,
       criterion_1_xyz},
      {2, "cluster-chain Gibbs matches closed form (1e-8) with sudden death bracketed", 30.0,
       criterion_2_cluster_gibbs},
      {3, "cluster-chain canonical matches r-corrected form (1e-8), positive on (0,1]", 60.0,
       criterion_3_cluster_canonical},
      {4, "both curves reach 2 bits at tanh(beta) = 1 (1e-8)", 30.0, criterion_4_endpoints},
      {5, "EC == NC over 200+ randomized symmetric Hamiltonians", 120.0, criterion_5_ec_nc},
      {6, "entangling perturbations exist iff the sector is not semiuniform", 120.0,
       criterion_6_theorem3},
      {7, "semiuniform census: none for N > |G|, the Z3 N=3 example found", 30.0,
       criterion_7_census},
      {8, "canonical ensemble minimizes free energy; gap = -D/beta (1e-8)", 60.0,
       criterion_8_free_energy},
      {9, "fermionic transpose rule, positive hopping-chain negativity, canonical condition",
       60.0, criterion_9_fermions},
      {10, "local indistinguishability: exact zeros for u=X, qutrit slope -ln3 (5%)", 60.0,
       criterion_10_local_indistinguishability},
      {11, "module invariant suites re-run; runtime within budget", 600.0,
       criterion_11_invariant_suites},
  };

  int failures = 0;
  double total_seconds = 0.0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total_seconds += seconds;
    if (seconds > c.budget_seconds) {
      ok = false;
      detail += " [over the " + std::to_string(c.budget_seconds) + " s budget]";
    }
    if (!ok) ++failures;
    std::printf("[%2d] %s  (%6.2f s)  %s%s%s\n", c.id, ok ? "PASS" : "FAIL", seconds, c.label,
                detail.empty() ? "" : " -- ", detail.c_str());
  }
  std::printf("acceptance: %d/%zu criteria passed in %.1f s\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(), total_seconds);
  if (total_seconds > 600.0) {
    std::printf("acceptance: total runtime exceeded 10 minutes\n");
    ++failures;
  }
  return failures;
}
