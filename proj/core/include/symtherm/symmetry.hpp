#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symtherm/linalg.hpp"
#include "symtherm/operator.hpp"

namespace symtherm {

/// Abelian symmetry group: either a finite product of cyclic factors
/// Z_{n_1} x ... x Z_{n_k}, or U(1) realized through integer charges.
class AbelianGroup {
 public:
  enum class Kind { Finite, ChargeU1 };

  static AbelianGroup finite(std::vector<int> orders);
  static AbelianGroup charge_u1();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const std::vector<int>& orders() const { return orders_; }
  int n_generators() const { return static_cast<int>(orders_.size()); }
  /// |G| for finite groups (capped at 64 on construction).
  int size() const;

 private:
  Kind kind_ = Kind::Finite;
  std::vector<int> orders_;
};

/// Group element: generator-exponent vector (finite) or rotation angle (U(1)).
struct GroupElement {
  std::vector<int> exps;
  double theta = 0.0;

  bool is_identity() const;
};

/// Irrep identified with its character. Finite: exponents c_k so that
/// lambda(gen_k) = exp(2*pi*i c_k / n_k); ChargeU1: total integer charge.
struct IrrepLabel {
  std::vector<int> exps;
  long charge = 0;

  auto operator<=>(const IrrepLabel&) const = default;
};

/// On-site action: commuting generator images (finite) or an integer charge
/// per basis state (ChargeU1, diagonal).
struct SiteRep {
  int dim = 0;
  std::vector<Operator> gen_images;  // finite: one d x d unitary per generator
  std::vector<int> charges;          // ChargeU1: one integer per basis state
  bool u1 = false;

  static SiteRep from_generator_matrices(std::vector<Operator> images);
  /// One Pauli name ("X","Y","Z") per generator; d = 2.
  static SiteRep from_pauli(const std::vector<std::string>& names);
  /// phases[k][j] = integer c with u_k = diag(exp(2*pi*i c / n_k)); needs the
  /// group to resolve the orders n_k.
  static SiteRep from_diag_phases(const AbelianGroup& g,
                                  const std::vector<std::vector<int>>& phases);
  static SiteRep from_charges(std::vector<int> charges);
};

/// Group + per-site representation. Factories validate unitarity, pairwise
/// commutation and generator orders (1e-10).
class Representation {
 public:
  static Representation homogeneous(AbelianGroup g, SiteRep site, int n_sites);
  static Representation inhomogeneous(AbelianGroup g, std::vector<SiteRep> sites);

  const AbelianGroup& group() const { return group_; }
  int n_sites() const { return static_cast<int>(sites_.size()); }
  const SiteRep& site_rep(int i) const { return sites_[i]; }
  bool homogeneous_flag() const { return homogeneous_; }
  HilbertStructure hilbert() const;

 private:
  AbelianGroup group_;
  std::vector<SiteRep> sites_;
  bool homogeneous_ = false;
};

// --- characters and label arithmetic -------------------------------------

cplx character(const AbelianGroup& g, const IrrepLabel& label, const GroupElement& e);
IrrepLabel label_add(const AbelianGroup& g, const IrrepLabel& a, const IrrepLabel& b);
IrrepLabel label_negate(const AbelianGroup& g, const IrrepLabel& a);
IrrepLabel label_scale(const AbelianGroup& g, const IrrepLabel& a, int times);
IrrepLabel trivial_label(const AbelianGroup& g);
std::string label_string(const AbelianGroup& g, const IrrepLabel& label);
GroupElement identity_element(const AbelianGroup& g);
/// All elements of a finite group as exponent vectors (lexicographic).
std::vector<GroupElement> group_elements(const AbelianGroup& g);

// --- unitaries and projectors ---------------------------------------------

Operator site_unitary(const Representation& rep, int site, const GroupElement& g);
Operator global_unitary(const Representation& rep, const GroupElement& g);
/// U_A(g) acting as identity on the complement.
Operator region_unitary(const Representation& rep, const Partition& region, const GroupElement& g);
/// Projector onto the isotypic component of the global irrep; may be zero.
Operator irrep_projector(const Representation& rep, const IrrepLabel& label);
/// Projector onto irrep lambda of the region's representation, identity on B.
Operator region_irrep_projector(const Representation& rep, const Partition& region,
                                const IrrepLabel& label);
/// Global irreps with nonzero projector.
std::vector<IrrepLabel> realizable_irreps(const Representation& rep);

// --- isotypic decomposition -----------------------------------------------

struct IsotypicComponent {
  IrrepLabel label;
  double weight;       // q_Lambda = Tr[rho Pi]
  Operator component;  // Pi rho Pi / q
};

/// Requires [U(g), rho] ~ 0; components with q <= 1e-12 are dropped.
std::vector<IsotypicComponent> isotypic_decompose(const Representation& rep, const Operator& rho);

/// Weak-symmetry test used as the decomposition precondition.
bool is_weakly_symmetric(const Representation& rep, const Operator& rho);

// --- symmetry-adapted bases -----------------------------------------------

struct SiteBasis {
  Operator basis;                 // d x d unitary; columns ordered by charge key
  std::vector<IrrepLabel> labels; // one per column
};

/// Joint eigenbasis of the commuting on-site generator images.
SiteBasis site_decomposition(const Representation& rep, int site);

/// Unitary V_A (tensor of per-site basis changes on A) x identity on B, such
/// that every U_A(g) is diagonal after conjugation and hence transpose-invariant.
Operator symmetry_adapted_basis(const Representation& rep, const Partition& region);

// --- irrep classification (homogeneous representations) --------------------

enum class IrrepClass { Uniform, Semiuniform, Generic, Empty };

std::string irrep_class_name(IrrepClass c);

/// Distinct on-site irreps of the homogeneous site representation, sorted.
std::vector<IrrepLabel> on_site_irreps(const Representation& rep);

/// Irreps appearing in u^(x)n (the n-fold product set S^n).
std::set<IrrepLabel> irreps_in_region(const Representation& rep, int region_size);

IrrepClass classify_irrep(const Representation& rep, const IrrepLabel& label);

struct CensusResult {
  int total = 0;        // realizable global irreps
  int semiuniform = 0;  // uniform + semiuniform among them
};

CensusResult semiuniform_census(const Representation& rep);

/// Two-body symmetric perturbation v_{i,j} = s_i^+ s_j^- + s_i^- s_j^+ built
/// from the lexicographically smallest admissible pair of distinct on-site
/// irreps. Throws for semiuniform/uniform/empty sectors (no such operator
/// exists on fewer than N sites).
Operator entangling_perturbation(const Representation& rep, const IrrepLabel& label, int site_i,
                                 int site_j);

}  // namespace symtherm
