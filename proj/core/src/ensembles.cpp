#include "symtherm/ensembles.hpp"

#include <cmath>
#include <stdexcept>

#include "symtherm/tolerances.hpp"

namespace symtherm {

namespace {

Operator assemble(const EigResult& eig, const std::vector<double>& weights) {
  const int n = static_cast<int>(eig.values.size());
  Operator out(eig.vectors.structure());
  const Operator& V = eig.vectors;
  for (int k = 0; k < n; ++k) {
    if (weights[k] == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const cplx vik = V.at(i, k) * weights[k];
      if (vik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += vik * std::conj(V.at(j, k));
    }
  }
  return out;
}

std::vector<double> shifted_boltzmann(const std::vector<double>& energies, double beta) {
  double ref = energies.empty() ? 0.0 : energies.front();
  for (double e : energies) ref = beta >= 0.0 ? std::min(ref, e) : std::max(ref, e);
  std::vector<double> w(energies.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = std::exp(-beta * (energies[i] - ref));
  return w;
}

void require_symmetric_hamiltonian(const Representation& rep, const Operator& h) {
  const double thresh = tol::commutator_threshold(h.frobenius_norm());
  if (rep.group().is_finite()) {
    for (int k = 0; k < rep.group().n_generators(); ++k) {
      GroupElement g = identity_element(rep.group());
      g.exps[k] = 1;
      if (commutator(global_unitary(rep, g), h).frobenius_norm() > thresh)
        throw std::invalid_argument("canonical_state: Hamiltonian is not symmetric");
    }
  } else if (!is_weakly_symmetric(rep, h)) {
    throw std::invalid_argument("canonical_state: Hamiltonian is not charge conserving");
  }
}

}  // namespace

Operator gibbs_state(const Operator& hamiltonian, double beta) {
  if (beta == 0.0) {
    if (!hamiltonian.is_hermitian())
      throw std::invalid_argument("gibbs_state: Hamiltonian not Hermitian");
    return Operator::identity(hamiltonian.structure()) *
           cplx(1.0 / hamiltonian.dim(), 0.0);
  }
  auto eig = eig_hermitian(hamiltonian);  // rejects non-Hermitian input
  auto w = shifted_boltzmann(eig.values, beta);
  double z = 0.0;
  for (double v : w) z += v;
  for (double& v : w) v /= z;
  return assemble(eig, w);
}

Operator canonical_state(const Operator& hamiltonian, double beta, const Representation& rep,
                         const IrrepLabel& sector) {
  require_symmetric_hamiltonian(rep, hamiltonian);
  const Operator proj = irrep_projector(rep, sector);
  if (proj.trace().real() < 0.5)
    throw std::invalid_argument("canonical_state: empty charge sector");
  if (beta == 0.0) {
    Operator s = proj;
    s *= cplx(1.0 / proj.trace().real(), 0.0);
    return s;
  }
  auto eig = eig_hermitian(hamiltonian);
  const auto w = shifted_boltzmann(eig.values, beta);
  const Operator weighted = assemble(eig, w);
  Operator s = proj * weighted * proj;
  const double z = s.trace().real();
  s *= 1.0 / z;
  return s;
}

Operator thermal_state(const EnsembleSpec& spec) {
  if (spec.sector) {
    if (!spec.rep) throw std::invalid_argument("thermal_state: sector set without representation");
    return canonical_state(spec.hamiltonian, spec.beta, *spec.rep, *spec.sector);
  }
  return gibbs_state(spec.hamiltonian, spec.beta);
}

double entropy(const Operator& rho) {
  auto eig = eig_hermitian(rho);
  double s = 0.0;
  for (double p : eig.values)
    if (p > tol::kEntropyFloor) s -= p * std::log(p);
  return s;
}

double free_energy(const Operator& rho, const Operator& hamiltonian, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("free_energy: beta must be positive");
  const double energy = (rho * hamiltonian).trace().real();
  return energy - entropy(rho) / beta;
}

double relative_entropy(const Operator& rho, const Operator& sigma) {
  const auto eig_r = eig_hermitian(rho);
  const auto eig_s = eig_hermitian(sigma);
  const int n = rho.dim();

  double d = 0.0;
  for (double p : eig_r.values)
    if (p > tol::kEntropyFloor) d += p * std::log(p);

  double null_weight = 0.0;
  for (int j = 0; j < n; ++j) {
    // <v_j| rho |v_j>
    double overlap = 0.0;
    for (int r = 0; r < n; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < n; ++c) acc += rho.at(r, c) * eig_s.vectors.at(c, j);
      overlap += (std::conj(eig_s.vectors.at(r, j)) * acc).real();
    }
    if (eig_s.values[j] < 1e-12) {
      null_weight += overlap;
    } else {
      d -= overlap * std::log(eig_s.values[j]);
    }
  }
  if (null_weight > 1e-10)
    throw std::invalid_argument("relative_entropy: supp(rho) not contained in supp(sigma)");
  return d;
}

Operator apply_kraus_channel(const Operator& rho, const std::vector<Operator>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("apply_kraus_channel: empty Kraus set");
  Operator sum = Operator::zero(rho.structure());
  for (const auto& k : kraus) sum += k.adjoint() * k;
  sum -= Operator::identity(rho.structure());
  if (sum.frobenius_norm() > 1e-9 * std::sqrt(static_cast<double>(rho.dim())))
    throw std::invalid_argument("apply_kraus_channel: Kraus set is not trace preserving");
  Operator out = Operator::zero(rho.structure());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

}  // namespace symtherm
