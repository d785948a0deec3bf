#pragma once

// Shared helpers for the test suites: deterministic RNG, Pauli embeddings,
// random (symmetric) Hermitian matrices, and small comparison utilities.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "symtherm/linalg.hpp"
#include "symtherm/operator.hpp"
#include "symtherm/symmetry.hpp"

namespace testutil {

using symtherm::cplx;
using symtherm::HilbertStructure;
using symtherm::Operator;

inline Operator pauli(char name) {
  switch (name) {
    case 'I': return Operator::from_matrix(2, {1, 0, 0, 1});
    case 'X': return Operator::from_matrix(2, {0, 1, 1, 0});
    case 'Y': return Operator::from_matrix(2, {0, cplx(0, -1), cplx(0, 1), 0});
    default: return Operator::from_matrix(2, {1, 0, 0, -1});  // Z
  }
}

/// Pauli string on n qubits, identity elsewhere.
inline Operator pauli_string(int n, const std::vector<int>& sites, const std::string& names) {
  std::vector<Operator> f(static_cast<size_t>(n), pauli('I'));
  for (size_t k = 0; k < sites.size(); ++k) f[static_cast<size_t>(sites[k])] = pauli(names[k]);
  return symtherm::tensor(f);
}

inline Operator random_matrix(const HilbertStructure& hs, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m(hs);
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m.at(r, c) = cplx(gauss(rng), gauss(rng));
  return m;
}

inline Operator random_hermitian(const HilbertStructure& hs, std::mt19937_64& rng) {
  Operator m = random_matrix(hs, rng);
  Operator h = m + m.adjoint();
  h *= cplx(0.5, 0.0);
  return h;
}

/// Random density matrix M M^dag / Tr.
inline Operator random_state(const HilbertStructure& hs, std::mt19937_64& rng) {
  const Operator m = random_matrix(hs, rng);
  Operator rho = m * m.adjoint();
  rho *= cplx(1.0 / rho.trace().real(), 0.0);
  return rho;
}

/// Group-average of a Hermitian matrix; the canonical symmetric fixture.
inline Operator twirl(const symtherm::Representation& rep, const Operator& h) {
  const auto elems = symtherm::group_elements(rep.group());
  Operator out = Operator::zero(h.structure());
  for (const auto& g : elems) {
    const Operator u = symtherm::global_unitary(rep, g);
    out += u * h * u.adjoint();
  }
  out *= cplx(1.0 / static_cast<double>(elems.size()), 0.0);
  return out;
}

inline double max_abs_diff(const Operator& a, const Operator& b) {
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
  return m;
}

/// Least-squares slope + R^2 of y against x.
struct LineFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  LineFit f;
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double pred = f.slope * x[i] + f.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - sy / n) * (y[i] - sy / n);
  }
  f.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

}  // namespace testutil
