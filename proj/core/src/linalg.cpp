#include "symtherm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "symtherm/errors.hpp"
#include "symtherm/tolerances.hpp"

namespace symtherm {

Operator tensor(const std::vector<Operator>& ops) {
  if (ops.empty()) throw std::invalid_argument("tensor: empty factor list");
  std::vector<int> dims;
  for (const auto& op : ops)
    for (int d : op.structure().site_dims()) dims.push_back(d);
  Operator out = ops.front();
  for (size_t f = 1; f < ops.size(); ++f) {
    const Operator& b = ops[f];
    const int m = out.dim();
    const int n = b.dim();
    std::vector<cplx> entries(static_cast<size_t>(m) * n * m * n);
    const int mn = m * n;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const cplx aij = out.at(i, j);
        if (aij == cplx(0.0, 0.0)) continue;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            entries[static_cast<size_t>(i * n + k) * mn + (j * n + l)] = aij * b.at(k, l);
      }
    std::vector<int> partial(dims.begin(), dims.begin() + out.structure().n_sites() + b.structure().n_sites());
    out = Operator(HilbertStructure(partial), std::move(entries));
  }
  return out;
}

namespace {

struct SplitMaps {
  int dim_a = 1, dim_b = 1;
  std::vector<int> a_of, b_of;    // full index -> packed A / B component
  std::vector<int> full_of;       // a * dim_b + b -> full index
};

SplitMaps make_split(const HilbertStructure& s, const std::vector<int>& a_sites_sorted) {
  SplitMaps sm;
  const int n = s.n_sites();
  std::vector<bool> in_a(n, false);
  for (int a : a_sites_sorted) in_a[a] = true;
  for (int i = 0; i < n; ++i) (in_a[i] ? sm.dim_a : sm.dim_b) *= s.site_dim(i);
  sm.a_of.resize(s.total_dim());
  sm.b_of.resize(s.total_dim());
  sm.full_of.resize(static_cast<size_t>(sm.dim_a) * sm.dim_b);
  for (int idx = 0; idx < s.total_dim(); ++idx) {
    const auto multi = s.unpack(idx);
    int a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
      if (in_a[i])
        a = a * s.site_dim(i) + multi[i];
      else
        b = b * s.site_dim(i) + multi[i];
    }
    sm.a_of[idx] = a;
    sm.b_of[idx] = b;
    sm.full_of[static_cast<size_t>(a) * sm.dim_b + b] = idx;
  }
  return sm;
}

std::vector<int> sorted_validated(const Partition& p, const HilbertStructure& s, bool allow_full) {
  std::vector<int> sites = p.a_sites;
  if (sites.empty()) throw std::invalid_argument("partition: empty site set");
  std::sort(sites.begin(), sites.end());
  for (size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= s.n_sites())
      throw std::invalid_argument("partition: site index out of range");
    if (i > 0 && sites[i] == sites[i - 1])
      throw std::invalid_argument("partition: repeated site index");
  }
  if (!allow_full && static_cast<int>(sites.size()) == s.n_sites())
    throw std::invalid_argument("partition: complement is empty");
  return sites;
}

}  // namespace

Operator partial_trace(const Operator& op, const Partition& keep) {
  const auto& s = op.structure();
  const auto kept = sorted_validated(keep, s, /*allow_full=*/true);
  std::vector<int> kept_dims;
  for (int k : kept) kept_dims.push_back(s.site_dim(k));
  if (kept.size() == static_cast<size_t>(s.n_sites())) return op;

  const SplitMaps sm = make_split(s, kept);
  Operator out{HilbertStructure(kept_dims)};
  const int n = s.total_dim();
  for (int r = 0; r < n; ++r) {
    const int ar = sm.a_of[r], br = sm.b_of[r];
    for (int c = 0; c < n; ++c) {
      if (sm.b_of[c] != br) continue;
      out.at(ar, sm.a_of[c]) += op.at(r, c);
    }
  }
  return out;
}

Operator partial_transpose(const Operator& op, const Partition& region) {
  const auto& s = op.structure();
  const auto a_sites = sorted_validated(region, s, /*allow_full=*/true);
  const SplitMaps sm = make_split(s, a_sites);
  Operator out(s);
  const int n = s.total_dim();
  for (int r = 0; r < n; ++r) {
    const int ar = sm.a_of[r], br = sm.b_of[r];
    for (int c = 0; c < n; ++c) {
      const int ac = sm.a_of[c], bc = sm.b_of[c];
      out.at(sm.full_of[static_cast<size_t>(ac) * sm.dim_b + br],
             sm.full_of[static_cast<size_t>(ar) * sm.dim_b + bc]) = op.at(r, c);
    }
  }
  return out;
}

EigResult eig_hermitian(const Operator& op) {
  if (!op.is_hermitian())
    throw std::invalid_argument("eig_hermitian: input not Hermitian within tolerance");
  const int n = op.dim();
  std::vector<cplx> A(op.data(), op.data() + static_cast<size_t>(n) * n);
  // clean sub-tolerance asymmetry so the rotations see an exactly Hermitian matrix
  for (int r = 0; r < n; ++r) {
    A[static_cast<size_t>(r) * n + r] = cplx(A[static_cast<size_t>(r) * n + r].real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const cplx mean = 0.5 * (A[static_cast<size_t>(r) * n + c] +
                               std::conj(A[static_cast<size_t>(c) * n + r]));
      A[static_cast<size_t>(r) * n + c] = mean;
      A[static_cast<size_t>(c) * n + r] = std::conj(mean);
    }
  }

  Operator V = Operator::identity(op.structure());
  cplx* Vd = V.data();
  const double frob = op.frobenius_norm();
  EigResult res;
  res.values.resize(n);
  if (frob == 0.0 || n == 1) {
    for (int i = 0; i < n; ++i) res.values[i] = A[static_cast<size_t>(i) * n + i].real();
    res.vectors = std::move(V);
    return res;
  }
  const double thresh = tol::kEigOffdiag * frob;
  // rotations on entries below this cannot push the off-norm above thresh,
  // so late sweeps touch only the pairs that still matter
  const double skip2 = (thresh / (2.0 * n)) * (thresh / (2.0 * n));

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) off2 += 2.0 * std::norm(A[static_cast<size_t>(r) * n + c]);
    if (std::sqrt(off2) < thresh) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = A[static_cast<size_t>(p) * n + q];
        if (std::norm(apq) <= skip2) continue;
        const double m = std::abs(apq);
        const double app = A[static_cast<size_t>(p) * n + p].real();
        const double aqq = A[static_cast<size_t>(q) * n + q].real();
        const double tau = (aqq - app) / (2.0 * m);
        const double t = (tau == 0.0) ? 1.0
                                      : ((tau > 0.0 ? 1.0 : -1.0) /
                                         (std::abs(tau) + std::sqrt(1.0 + tau * tau)));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sgn = t * c;
        const cplx u = apq / m;
        const cplx su = sgn * u;
        const cplx scu = sgn * std::conj(u);

        // A <- A J (columns p, q)
        for (int k = 0; k < n; ++k) {
          const size_t kp = static_cast<size_t>(k) * n + p;
          const size_t kq = static_cast<size_t>(k) * n + q;
          const cplx akp = A[kp], akq = A[kq];
          A[kp] = c * akp - scu * akq;
          A[kq] = su * akp + c * akq;
        }
        // A <- J^dag A (rows p, q)
        for (int k = 0; k < n; ++k) {
          const size_t pk = static_cast<size_t>(p) * n + k;
          const size_t qk = static_cast<size_t>(q) * n + k;
          const cplx apk = A[pk], aqk = A[qk];
          A[pk] = c * apk - su * aqk;
          A[qk] = scu * apk + c * aqk;
        }
        A[static_cast<size_t>(p) * n + q] = 0.0;
        A[static_cast<size_t>(q) * n + p] = 0.0;
        A[static_cast<size_t>(p) * n + p] = cplx(A[static_cast<size_t>(p) * n + p].real(), 0.0);
        A[static_cast<size_t>(q) * n + q] = cplx(A[static_cast<size_t>(q) * n + q].real(), 0.0);

        // V <- V J
        for (int k = 0; k < n; ++k) {
          const size_t kp = static_cast<size_t>(k) * n + p;
          const size_t kq = static_cast<size_t>(k) * n + q;
          const cplx vkp = Vd[kp], vkq = Vd[kq];
          Vd[kp] = c * vkp - scu * vkq;
          Vd[kq] = su * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw numeric_error("eig_hermitian: Jacobi sweeps did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return A[static_cast<size_t>(a) * n + a].real() < A[static_cast<size_t>(b) * n + b].real();
  });
  Operator Vs(op.structure());
  for (int j = 0; j < n; ++j) {
    res.values[j] = A[static_cast<size_t>(order[j]) * n + order[j]].real();
    for (int i = 0; i < n; ++i) Vs.at(i, j) = V.at(i, order[j]);
  }
  res.vectors = std::move(Vs);
  return res;
}

std::vector<double> singular_values(const Operator& op) {
  const Operator gram = op.adjoint() * op;
  auto eig = eig_hermitian(gram);
  std::vector<double> sv;
  sv.reserve(eig.values.size());
  for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it)
    sv.push_back(std::sqrt(std::max(0.0, *it)));
  return sv;
}

double trace_norm(const Operator& op) {
  if (op.is_hermitian()) {
    auto eig = eig_hermitian(op);
    double s = 0.0;
    for (double v : eig.values) s += std::abs(v);
    return s;
  }
  const auto sv = singular_values(op);
  double s = 0.0;
  for (double v : sv) s += v;
  return s;
}

Operator expm_hermitian(const Operator& op, double scale) {
  auto eig = eig_hermitian(op);
  const int n = op.dim();
  Operator out(op.structure());
  const Operator& V = eig.vectors;
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = std::exp(scale * eig.values[k]);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const cplx vik = V.at(i, k) * w[k];
      if (vik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += vik * std::conj(V.at(j, k));
    }
  }
  return out;
}

}  // namespace symtherm
