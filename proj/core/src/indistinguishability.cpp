#include "symtherm/indistinguishability.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "symtherm/ensembles.hpp"
#include "symtherm/linalg.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

ProjectorTraceRatio projector_trace_ratio(const Representation& rep, const IrrepLabel& label,
                                          int n_sites) {
  if (!rep.group().is_finite() || !rep.homogeneous_flag())
    throw std::invalid_argument("projector_trace_ratio: homogeneous finite representation required");
  const auto elems = group_elements(rep.group());
  const int d = rep.site_rep(0).dim;

  cplx exact = 0.0;
  double r = 0.0;
  int k_size = 0;
  bool label_consistent_on_k = true;
  for (const auto& g : elems) {
    const cplx tr = site_unitary(rep, 0, g).trace();
    cplx trn = 1.0;
    for (int i = 0; i < n_sites; ++i) trn *= tr;
    exact += std::conj(character(rep.group(), label, g)) * trn;

    if (std::abs(tr) > d - 1e-9 * d) {
      ++k_size;  // u(g) proportional to identity
      const cplx phase_n = trn / std::pow(static_cast<double>(d), n_sites);
      if (std::abs(character(rep.group(), label, g) - phase_n) > 1e-6)
        label_consistent_on_k = false;
    } else {
      r = std::max(r, std::abs(tr));
    }
  }
  ProjectorTraceRatio out;
  out.exact = exact.real() / static_cast<double>(elems.size());
  const double quotient = static_cast<double>(elems.size()) / k_size;
  out.asymptote =
      label_consistent_on_k ? std::pow(static_cast<double>(d), n_sites) / quotient : 0.0;
  out.xi = r == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::log(d / r);
  return out;
}

namespace {

double beta0_distance_finite(const Representation& rep, const IrrepLabel& label,
                             const Partition& region_a) {
  const auto elems = group_elements(rep.group());
  std::vector<int> a_dims;
  for (int i : region_a.a_sites) a_dims.push_back(rep.site_rep(i).dim);
  const HilbertStructure ha(a_dims);

  Operator marginal = Operator::zero(ha);  // Tr_B[Pi_Lambda]
  double trace_total = 0.0;                // Tr[Pi_Lambda]
  for (const auto& g : elems) {
    cplx b_trace = 1.0;
    for (int i = 0; i < rep.n_sites(); ++i)
      if (!region_a.contains(i)) b_trace *= site_unitary(rep, i, g).trace();
    std::vector<Operator> a_factors;
    for (int i : region_a.a_sites) a_factors.push_back(site_unitary(rep, i, g));
    const cplx weight = std::conj(character(rep.group(), label, g)) /
                        static_cast<double>(elems.size());
    Operator ua = tensor(a_factors);
    marginal += ua * (weight * b_trace);
    trace_total += (weight * b_trace * ua.trace()).real();
  }
  if (trace_total < 0.5)
    throw std::invalid_argument("local_sector_distance: empty charge sector");
  marginal *= cplx(1.0 / trace_total, 0.0);
  marginal -= Operator::identity(ha) * cplx(1.0 / ha.total_dim(), 0.0);
  return trace_norm(marginal);
}

double beta0_distance_u1(const Representation& rep, const IrrepLabel& label,
                         const Partition& region_a) {
  // Pi is diagonal; the marginal over B counts B-configurations by charge.
  std::map<long, double> b_counts{{0, 1.0}};
  for (int i = 0; i < rep.n_sites(); ++i) {
    if (region_a.contains(i)) continue;
    std::map<long, double> next;
    for (const auto& [q, c] : b_counts)
      for (int charge : rep.site_rep(i).charges) next[q + charge] += c;
    b_counts = std::move(next);
  }
  std::vector<int> a_dims;
  for (int i : region_a.a_sites) a_dims.push_back(rep.site_rep(i).dim);
  const HilbertStructure ha(a_dims);

  std::vector<double> diag(ha.total_dim(), 0.0);
  double trace_total = 0.0;
  for (int a = 0; a < ha.total_dim(); ++a) {
    const auto multi = ha.unpack(a);
    long qa = 0;
    for (size_t k = 0; k < region_a.a_sites.size(); ++k)
      qa += rep.site_rep(region_a.a_sites[k]).charges[multi[k]];
    const auto it = b_counts.find(label.charge - qa);
    if (it != b_counts.end()) diag[a] = it->second;
    trace_total += diag[a];
  }
  if (trace_total < 0.5)
    throw std::invalid_argument("local_sector_distance: empty charge sector");
  double dist = 0.0;
  for (double v : diag) dist += std::abs(v / trace_total - 1.0 / ha.total_dim());
  return dist;
}

}  // namespace

double local_sector_distance_beta0(const Representation& rep, const IrrepLabel& label,
                                   const Partition& region_a) {
  region_a.validate_bipartition(rep.n_sites());
  if (rep.group().is_finite()) return beta0_distance_finite(rep, label, region_a);
  return beta0_distance_u1(rep, label, region_a);
}

double local_sector_distance(const Operator& hamiltonian, const Representation& rep,
                             const IrrepLabel& label, double beta, const Partition& region_a) {
  if (beta == 0.0) return local_sector_distance_beta0(rep, label, region_a);
  region_a.validate_bipartition(rep.n_sites());
  const Operator canon = canonical_state(hamiltonian, beta, rep, label);
  const Operator gibbs = gibbs_state(hamiltonian, beta);
  return trace_norm(partial_trace(canon, region_a) - partial_trace(gibbs, region_a));
}

}  // namespace symtherm
