#include "symtherm/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symtherm/errors.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Operator pauli2(char name) {
  switch (name) {
    case 'I': return Operator::from_matrix(2, {1, 0, 0, 1});
    case 'X': return Operator::from_matrix(2, {0, 1, 1, 0});
    case 'Y': return Operator::from_matrix(2, {0, cplx(0, -1), cplx(0, 1), 0});
    case 'Z': return Operator::from_matrix(2, {1, 0, 0, -1});
    default: throw std::invalid_argument("unknown Pauli name");
  }
}

Operator matrix_power(const Operator& u, int p) {
  Operator out = Operator::identity(u.structure());
  for (int i = 0; i < p; ++i) out = out * u;
  return out;
}

bool near_identity(const Operator& u) {
  Operator d = u - Operator::identity(u.structure());
  return d.frobenius_norm() <= tol::kUnitary * std::sqrt(static_cast<double>(u.dim()));
}

}  // namespace

// --- AbelianGroup -----------------------------------------------------------

AbelianGroup AbelianGroup::finite(std::vector<int> orders) {
  AbelianGroup g;
  g.kind_ = Kind::Finite;
  if (orders.empty()) throw std::invalid_argument("AbelianGroup: no cyclic factors");
  long size = 1;
  for (int n : orders) {
    if (n < 2) throw std::invalid_argument("AbelianGroup: cyclic order must be >= 2");
    size *= n;
  }
  if (size > 64) throw std::invalid_argument("AbelianGroup: |G| capped at 64");
  g.orders_ = std::move(orders);
  return g;
}

AbelianGroup AbelianGroup::charge_u1() {
  AbelianGroup g;
  g.kind_ = Kind::ChargeU1;
  return g;
}

int AbelianGroup::size() const {
  if (!is_finite()) throw std::logic_error("AbelianGroup::size: U(1) is not finite");
  int s = 1;
  for (int n : orders_) s *= n;
  return s;
}

bool GroupElement::is_identity() const {
  if (!exps.empty())
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  return theta == 0.0;
}

// --- SiteRep ----------------------------------------------------------------

SiteRep SiteRep::from_generator_matrices(std::vector<Operator> images) {
  SiteRep r;
  if (images.empty()) throw std::invalid_argument("SiteRep: no generator images");
  r.dim = images.front().dim();
  r.gen_images = std::move(images);
  return r;
}

SiteRep SiteRep::from_pauli(const std::vector<std::string>& names) {
  std::vector<Operator> images;
  for (const auto& n : names) {
    if (n.size() != 1) throw std::invalid_argument("SiteRep: Pauli name must be one of X,Y,Z");
    images.push_back(pauli2(n[0]));
  }
  return from_generator_matrices(std::move(images));
}

SiteRep SiteRep::from_diag_phases(const AbelianGroup& g,
                                  const std::vector<std::vector<int>>& phases) {
  if (!g.is_finite()) throw std::invalid_argument("SiteRep: diag_phases requires a finite group");
  if (static_cast<int>(phases.size()) != g.n_generators())
    throw std::invalid_argument("SiteRep: one phase row per generator required");
  std::vector<Operator> images;
  const int d = static_cast<int>(phases.front().size());
  for (int k = 0; k < g.n_generators(); ++k) {
    if (static_cast<int>(phases[k].size()) != d)
      throw std::invalid_argument("SiteRep: ragged diag_phases");
    Operator u = Operator::zero(HilbertStructure({d}));
    for (int j = 0; j < d; ++j) {
      const double ang = kTwoPi * phases[k][j] / g.orders()[k];
      u.at(j, j) = cplx(std::cos(ang), std::sin(ang));
    }
    images.push_back(std::move(u));
  }
  return from_generator_matrices(std::move(images));
}

SiteRep SiteRep::from_charges(std::vector<int> charges) {
  SiteRep r;
  if (charges.empty()) throw std::invalid_argument("SiteRep: empty charge list");
  r.dim = static_cast<int>(charges.size());
  r.charges = std::move(charges);
  r.u1 = true;
  return r;
}

// --- Representation ---------------------------------------------------------

namespace {

void validate_site_rep(const AbelianGroup& g, const SiteRep& s) {
  if (s.dim < 2) throw std::invalid_argument("SiteRep: on-site dimension must be >= 2");
  if (g.is_finite()) {
    if (s.u1) throw std::invalid_argument("Representation: charge site rep with finite group");
    if (static_cast<int>(s.gen_images.size()) != g.n_generators())
      throw std::invalid_argument("Representation: generator image count mismatch");
    const double scale = tol::kUnitary * std::sqrt(static_cast<double>(s.dim));
    for (int k = 0; k < g.n_generators(); ++k) {
      const Operator& u = s.gen_images[k];
      if (u.dim() != s.dim) throw std::invalid_argument("Representation: image dim mismatch");
      if ((u.adjoint() * u - Operator::identity(u.structure())).frobenius_norm() > scale)
        throw std::invalid_argument("Representation: generator image not unitary");
      if (!near_identity(matrix_power(u, g.orders()[k])))
        throw std::invalid_argument("Representation: image order does not divide group order");
      for (int l = k + 1; l < g.n_generators(); ++l)
        if (commutator(u, s.gen_images[l]).frobenius_norm() > scale)
          throw std::invalid_argument("Representation: generator images do not commute");
    }
  } else {
    if (!s.u1) throw std::invalid_argument("Representation: U(1) needs integer charges");
  }
}

}  // namespace

Representation Representation::homogeneous(AbelianGroup g, SiteRep site, int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("Representation: need at least one site");
  validate_site_rep(g, site);
  Representation r;
  r.group_ = std::move(g);
  r.sites_.assign(static_cast<size_t>(n_sites), site);
  r.homogeneous_ = true;
  return r;
}

Representation Representation::inhomogeneous(AbelianGroup g, std::vector<SiteRep> sites) {
  if (sites.empty()) throw std::invalid_argument("Representation: need at least one site");
  for (const auto& s : sites) validate_site_rep(g, s);
  Representation r;
  r.group_ = std::move(g);
  r.sites_ = std::move(sites);
  r.homogeneous_ = false;
  return r;
}

HilbertStructure Representation::hilbert() const {
  std::vector<int> dims;
  for (const auto& s : sites_) dims.push_back(s.dim);
  return HilbertStructure(dims);
}

// --- characters and labels --------------------------------------------------

cplx character(const AbelianGroup& g, const IrrepLabel& label, const GroupElement& e) {
  if (g.is_finite()) {
    double ang = 0.0;
    for (int k = 0; k < g.n_generators(); ++k)
      ang += kTwoPi * label.exps[k] * e.exps[k] / g.orders()[k];
    return cplx(std::cos(ang), std::sin(ang));
  }
  const double ang = label.charge * e.theta;
  return cplx(std::cos(ang), std::sin(ang));
}

IrrepLabel label_add(const AbelianGroup& g, const IrrepLabel& a, const IrrepLabel& b) {
  if (g.is_finite()) {
    IrrepLabel out = a;
    for (int k = 0; k < g.n_generators(); ++k)
      out.exps[k] = (a.exps[k] + b.exps[k]) % g.orders()[k];
    return out;
  }
  return IrrepLabel{{}, a.charge + b.charge};
}

IrrepLabel label_negate(const AbelianGroup& g, const IrrepLabel& a) {
  if (g.is_finite()) {
    IrrepLabel out = a;
    for (int k = 0; k < g.n_generators(); ++k)
      out.exps[k] = (g.orders()[k] - a.exps[k]) % g.orders()[k];
    return out;
  }
  return IrrepLabel{{}, -a.charge};
}

IrrepLabel label_scale(const AbelianGroup& g, const IrrepLabel& a, int times) {
  if (g.is_finite()) {
    IrrepLabel out = a;
    for (int k = 0; k < g.n_generators(); ++k)
      out.exps[k] = static_cast<int>((static_cast<long>(a.exps[k]) * times) % g.orders()[k]);
    return out;
  }
  return IrrepLabel{{}, a.charge * times};
}

IrrepLabel trivial_label(const AbelianGroup& g) {
  if (g.is_finite()) return IrrepLabel{std::vector<int>(g.n_generators(), 0), 0};
  return IrrepLabel{{}, 0};
}

std::string label_string(const AbelianGroup& g, const IrrepLabel& label) {
  if (!g.is_finite()) return std::to_string(label.charge);
  std::string out;
  for (size_t k = 0; k < label.exps.size(); ++k) {
    if (k) out += ':';
    out += std::to_string(label.exps[k]);
  }
  return out;
}

GroupElement identity_element(const AbelianGroup& g) {
  if (g.is_finite()) return GroupElement{std::vector<int>(g.n_generators(), 0), 0.0};
  return GroupElement{{}, 0.0};
}

std::vector<GroupElement> group_elements(const AbelianGroup& g) {
  if (!g.is_finite()) throw std::logic_error("group_elements: U(1) cannot be enumerated");
  std::vector<GroupElement> out;
  GroupElement e = identity_element(g);
  while (true) {
    out.push_back(e);
    int k = g.n_generators() - 1;
    while (k >= 0) {
      if (++e.exps[k] < g.orders()[k]) break;
      e.exps[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

// --- unitaries ----------------------------------------------------------------

Operator site_unitary(const Representation& rep, int site, const GroupElement& g) {
  const SiteRep& s = rep.site_rep(site);
  if (rep.group().is_finite()) {
    Operator u = Operator::identity(HilbertStructure({s.dim}));
    for (int k = 0; k < rep.group().n_generators(); ++k)
      u = u * matrix_power(s.gen_images[k], g.exps[k]);
    return u;
  }
  Operator u = Operator::zero(HilbertStructure({s.dim}));
  for (int j = 0; j < s.dim; ++j) {
    const double ang = g.theta * s.charges[j];
    u.at(j, j) = cplx(std::cos(ang), std::sin(ang));
  }
  return u;
}

Operator global_unitary(const Representation& rep, const GroupElement& g) {
  std::vector<Operator> factors;
  for (int i = 0; i < rep.n_sites(); ++i) factors.push_back(site_unitary(rep, i, g));
  return tensor(factors);
}

Operator region_unitary(const Representation& rep, const Partition& region, const GroupElement& g) {
  std::vector<Operator> factors;
  for (int i = 0; i < rep.n_sites(); ++i) {
    if (region.contains(i))
      factors.push_back(site_unitary(rep, i, g));
    else
      factors.push_back(Operator::identity(HilbertStructure({rep.site_rep(i).dim})));
  }
  return tensor(factors);
}

// --- projectors -----------------------------------------------------------------

namespace {

long basis_total_charge(const Representation& rep, int index, const std::vector<bool>* mask) {
  const auto multi = rep.hilbert().unpack(index);
  long q = 0;
  for (int i = 0; i < rep.n_sites(); ++i) {
    if (mask && !(*mask)[i]) continue;
    q += rep.site_rep(i).charges[multi[i]];
  }
  return q;
}

}  // namespace

Operator irrep_projector(const Representation& rep, const IrrepLabel& label) {
  const HilbertStructure hs = rep.hilbert();
  if (rep.group().is_finite()) {
    Operator proj = Operator::zero(hs);
    const auto elems = group_elements(rep.group());
    for (const auto& g : elems) {
      Operator term = global_unitary(rep, g);
      term *= std::conj(character(rep.group(), label, g)) / static_cast<double>(elems.size());
      proj += term;
    }
    return proj;
  }
  Operator proj = Operator::zero(hs);
  for (int i = 0; i < hs.total_dim(); ++i)
    if (basis_total_charge(rep, i, nullptr) == label.charge) proj.at(i, i) = 1.0;
  return proj;
}

Operator region_irrep_projector(const Representation& rep, const Partition& region,
                                const IrrepLabel& label) {
  const HilbertStructure hs = rep.hilbert();
  if (rep.group().is_finite()) {
    Operator proj = Operator::zero(hs);
    const auto elems = group_elements(rep.group());
    for (const auto& g : elems) {
      Operator term = region_unitary(rep, region, g);
      term *= std::conj(character(rep.group(), label, g)) / static_cast<double>(elems.size());
      proj += term;
    }
    return proj;
  }
  std::vector<bool> mask(rep.n_sites(), false);
  for (int s : region.a_sites) mask[s] = true;
  Operator proj = Operator::zero(hs);
  for (int i = 0; i < hs.total_dim(); ++i)
    if (basis_total_charge(rep, i, &mask) == label.charge) proj.at(i, i) = 1.0;
  return proj;
}

namespace {

std::set<IrrepLabel> sumset(const AbelianGroup& g, const std::set<IrrepLabel>& a,
                            const std::set<IrrepLabel>& b) {
  std::set<IrrepLabel> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(label_add(g, x, y));
  return out;
}

std::set<IrrepLabel> power_set(const AbelianGroup& g, const std::set<IrrepLabel>& s, int n) {
  std::set<IrrepLabel> out{trivial_label(g)};
  for (int i = 0; i < n; ++i) out = sumset(g, out, s);
  return out;
}

std::set<IrrepLabel> site_irrep_set(const Representation& rep, int site);

}  // namespace

std::vector<IrrepLabel> realizable_irreps(const Representation& rep) {
  if (rep.group().is_finite()) {
    std::vector<IrrepLabel> out;
    const auto elems = group_elements(rep.group());
    for (const auto& lab_e : elems) {
      IrrepLabel lab{lab_e.exps, 0};
      // rank of the projector from the character-weighted trace sum
      cplx tr = 0.0;
      for (const auto& g : elems) {
        cplx site_prod = 1.0;
        for (int i = 0; i < rep.n_sites(); ++i) site_prod *= site_unitary(rep, i, g).trace();
        tr += std::conj(character(rep.group(), lab, g)) * site_prod;
      }
      if (tr.real() / static_cast<double>(elems.size()) > 0.5) out.push_back(lab);
    }
    return out;
  }
  std::set<IrrepLabel> sums{trivial_label(rep.group())};
  for (int i = 0; i < rep.n_sites(); ++i) sums = sumset(rep.group(), sums, site_irrep_set(rep, i));
  return {sums.begin(), sums.end()};
}

// --- isotypic decomposition ----------------------------------------------------

bool is_weakly_symmetric(const Representation& rep, const Operator& rho) {
  const double thresh = tol::commutator_threshold(rho.frobenius_norm());
  if (rep.group().is_finite()) {
    for (int k = 0; k < rep.group().n_generators(); ++k) {
      GroupElement g = identity_element(rep.group());
      g.exps[k] = 1;
      if (commutator(global_unitary(rep, g), rho).frobenius_norm() > thresh) return false;
    }
    return true;
  }
  // U(1): weak symmetry for all angles means block-diagonal in total charge
  double off2 = 0.0;
  for (int r = 0; r < rho.dim(); ++r) {
    const long qr = basis_total_charge(rep, r, nullptr);
    for (int c = 0; c < rho.dim(); ++c)
      if (basis_total_charge(rep, c, nullptr) != qr) off2 += std::norm(rho.at(r, c));
  }
  return std::sqrt(off2) <= thresh;
}

std::vector<IsotypicComponent> isotypic_decompose(const Representation& rep, const Operator& rho) {
  if (!is_weakly_symmetric(rep, rho))
    throw std::invalid_argument("isotypic_decompose: state is not weakly symmetric");
  std::vector<IsotypicComponent> out;
  for (const auto& lab : realizable_irreps(rep)) {
    const Operator proj = irrep_projector(rep, lab);
    const double q = (rho * proj).trace().real();
    if (q <= tol::kSectorWeight) continue;
    Operator comp = proj * rho * proj;
    comp *= 1.0 / q;
    out.push_back({lab, q, std::move(comp)});
  }
  return out;
}

// --- symmetry-adapted bases ------------------------------------------------------

SiteBasis site_decomposition(const Representation& rep, int site) {
  const SiteRep& s = rep.site_rep(site);
  SiteBasis out;
  if (!rep.group().is_finite()) {
    out.basis = Operator::identity(HilbertStructure({s.dim}));
    for (int j = 0; j < s.dim; ++j) out.labels.push_back(IrrepLabel{{}, s.charges[j]});
    return out;
  }
  // Joint eigenbasis via one Hermitian "charge operator" with mixed-radix
  // integer spectrum: T = sum_k w_k sum_r r P_{k,r}.
  const auto& orders = rep.group().orders();
  Operator T = Operator::zero(HilbertStructure({s.dim}));
  long w = 1;
  for (int k = 0; k < rep.group().n_generators(); ++k) {
    const int n = orders[k];
    std::vector<Operator> powers;
    powers.push_back(Operator::identity(T.structure()));
    for (int p = 1; p < n; ++p) powers.push_back(powers.back() * s.gen_images[k]);
    for (int r = 1; r < n; ++r) {
      Operator proj = Operator::zero(T.structure());
      for (int p = 0; p < n; ++p) {
        const double ang = -kTwoPi * r * p / n;
        proj += powers[p] * (cplx(std::cos(ang), std::sin(ang)) / static_cast<double>(n));
      }
      T += proj * cplx(static_cast<double>(w) * r, 0.0);
    }
    w *= n;
  }
  auto eig = eig_hermitian(T);
  out.basis = std::move(eig.vectors);
  for (int j = 0; j < s.dim; ++j) {
    long m = std::lround(eig.values[j]);
    if (std::abs(eig.values[j] - m) > 1e-6)
      throw numeric_error("site_decomposition: charge spectrum is not integral");
    IrrepLabel lab{std::vector<int>(orders.size(), 0), 0};
    for (size_t k = 0; k < orders.size(); ++k) {
      lab.exps[k] = static_cast<int>(m % orders[k]);
      m /= orders[k];
    }
    out.labels.push_back(std::move(lab));
  }
  return out;
}

Operator symmetry_adapted_basis(const Representation& rep, const Partition& region) {
  std::vector<Operator> factors;
  for (int i = 0; i < rep.n_sites(); ++i) {
    if (region.contains(i))
      factors.push_back(site_decomposition(rep, i).basis);
    else
      factors.push_back(Operator::identity(HilbertStructure({rep.site_rep(i).dim})));
  }
  return tensor(factors);
}

// --- classification ------------------------------------------------------------

std::string irrep_class_name(IrrepClass c) {
  switch (c) {
    case IrrepClass::Uniform: return "uniform";
    case IrrepClass::Semiuniform: return "semiuniform";
    case IrrepClass::Generic: return "generic";
    case IrrepClass::Empty: return "empty";
  }
  return "?";
}

namespace {

std::set<IrrepLabel> site_irrep_set(const Representation& rep, int site) {
  const auto dec = site_decomposition(rep, site);
  return {dec.labels.begin(), dec.labels.end()};
}

void require_homogeneous(const Representation& rep, const char* who) {
  if (!rep.homogeneous_flag())
    throw std::invalid_argument(std::string(who) + ": homogeneous representation required");
}

}  // namespace

std::vector<IrrepLabel> on_site_irreps(const Representation& rep) {
  require_homogeneous(rep, "on_site_irreps");
  const auto s = site_irrep_set(rep, 0);
  return {s.begin(), s.end()};
}

std::set<IrrepLabel> irreps_in_region(const Representation& rep, int region_size) {
  require_homogeneous(rep, "irreps_in_region");
  if (region_size < 0) throw std::invalid_argument("irreps_in_region: negative size");
  return power_set(rep.group(), site_irrep_set(rep, 0), region_size);
}

IrrepClass classify_irrep(const Representation& rep, const IrrepLabel& label) {
  require_homogeneous(rep, "classify_irrep");
  const auto S = site_irrep_set(rep, 0);
  const int N = rep.n_sites();
  if (!power_set(rep.group(), S, N).count(label)) return IrrepClass::Empty;

  if (N >= 2) {
    const auto reachable = power_set(rep.group(), S, N - 2);
    for (auto a = S.begin(); a != S.end(); ++a) {
      for (auto b = std::next(a); b != S.end(); ++b) {
        const IrrepLabel rest = label_add(
            rep.group(), label, label_negate(rep.group(), label_add(rep.group(), *a, *b)));
        if (reachable.count(rest)) return IrrepClass::Generic;
      }
    }
  }
  int uniform_count = 0;
  for (const auto& lam : S)
    if (label_scale(rep.group(), lam, N) == label) ++uniform_count;
  return uniform_count >= 2 ? IrrepClass::Semiuniform : IrrepClass::Uniform;
}

CensusResult semiuniform_census(const Representation& rep) {
  require_homogeneous(rep, "semiuniform_census");
  CensusResult res;
  std::vector<IrrepLabel> candidates;
  if (rep.group().is_finite()) {
    for (const auto& e : group_elements(rep.group())) candidates.push_back(IrrepLabel{e.exps, 0});
  } else {
    const auto all = power_set(rep.group(), site_irrep_set(rep, 0), rep.n_sites());
    candidates.assign(all.begin(), all.end());
  }
  for (const auto& lab : candidates) {
    const IrrepClass c = classify_irrep(rep, lab);
    if (c == IrrepClass::Empty) continue;
    ++res.total;
    if (c == IrrepClass::Uniform || c == IrrepClass::Semiuniform) ++res.semiuniform;
  }
  return res;
}

Operator entangling_perturbation(const Representation& rep, const IrrepLabel& label, int site_i,
                                 int site_j) {
  require_homogeneous(rep, "entangling_perturbation");
  if (site_i == site_j || site_i < 0 || site_j < 0 || site_i >= rep.n_sites() ||
      site_j >= rep.n_sites())
    throw std::invalid_argument("entangling_perturbation: need two distinct sites");
  const IrrepClass cls = classify_irrep(rep, label);
  if (cls != IrrepClass::Generic)
    throw std::invalid_argument("entangling_perturbation: no two-body entangling operator for " +
                                irrep_class_name(cls) + " sector");

  const auto dec = site_decomposition(rep, 0);
  const auto S = site_irrep_set(rep, 0);
  const auto reachable = power_set(rep.group(), S, rep.n_sites() - 2);

  // lexicographically smallest admissible pair of distinct on-site irreps
  std::optional<std::pair<IrrepLabel, IrrepLabel>> pick;
  for (auto a = S.begin(); a != S.end() && !pick; ++a)
    for (auto b = std::next(a); b != S.end() && !pick; ++b) {
      const IrrepLabel rest = label_add(
          rep.group(), label, label_negate(rep.group(), label_add(rep.group(), *a, *b)));
      if (reachable.count(rest)) pick = {*a, *b};
    }
  if (!pick) throw std::logic_error("entangling_perturbation: classification inconsistency");

  auto first_column_with = [&](const IrrepLabel& lam) {
    for (size_t j = 0; j < dec.labels.size(); ++j)
      if (dec.labels[j] == lam) return static_cast<int>(j);
    throw std::logic_error("entangling_perturbation: missing on-site irrep column");
  };
  const int col_a = first_column_with(pick->first);
  const int col_b = first_column_with(pick->second);

  const int d = rep.site_rep(0).dim;
  Operator raise = Operator::zero(HilbertStructure({d}));  // |b><a|
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      raise.at(r, c) = dec.basis.at(r, col_b) * std::conj(dec.basis.at(c, col_a));

  std::vector<Operator> factors;
  for (int s = 0; s < rep.n_sites(); ++s) {
    if (s == site_i)
      factors.push_back(raise);
    else if (s == site_j)
      factors.push_back(raise.adjoint());
    else
      factors.push_back(Operator::identity(HilbertStructure({d})));
  }
  const Operator half = tensor(factors);
  Operator v = half + half.adjoint();

  // cheap safety: the output must commute with the full symmetry action
  if (rep.group().is_finite()) {
    for (int k = 0; k < rep.group().n_generators(); ++k) {
      GroupElement g = identity_element(rep.group());
      g.exps[k] = 1;
      if (commutator(global_unitary(rep, g), v).frobenius_norm() >
          tol::commutator_threshold(std::max(1.0, v.frobenius_norm())))
        throw std::logic_error("entangling_perturbation: output is not symmetric");
    }
  }
  return v;
}

}  // namespace symtherm
