#include "symtherm/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "symtherm/linalg.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

double log_negativity(const Operator& rho, const Partition& region_a) {
  region_a.validate_bipartition(rho.structure().n_sites());
  const double tn = trace_norm(partial_transpose(rho, region_a));
  double e = std::log2(tn);
  if (std::abs(e) < tol::kNegativitySnap) e = 0.0;
  return e;
}

std::vector<std::pair<double, double>> negativity_curve(const EnsembleSpec& spec,
                                                        const Partition& region_a,
                                                        const std::vector<double>& betas) {
  std::vector<std::pair<double, double>> out;
  out.reserve(betas.size());
  for (double beta : betas) {
    EnsembleSpec point = spec;
    point.beta = beta;
    out.emplace_back(beta, log_negativity(thermal_state(point), region_a));
  }
  return out;
}

bool two_qubit_separable(const Operator& rho) {
  if (rho.dim() != 4 || rho.structure().n_sites() != 2)
    throw std::invalid_argument("two_qubit_separable: need a two-qubit state");
  const auto eig = eig_hermitian(partial_transpose(rho, Partition{0}));
  return eig.values.front() >= tol::kPptEig;
}

}  // namespace symtherm
