#include "symtherm/operator.hpp"

#include <cmath>
#include <stdexcept>

#include "symtherm/tolerances.hpp"

namespace symtherm {

Operator::Operator(HilbertStructure structure)
    : structure_(std::move(structure)),
      m_(static_cast<size_t>(structure_.total_dim()) * structure_.total_dim()) {}

Operator::Operator(HilbertStructure structure, std::vector<cplx> entries)
    : structure_(std::move(structure)), m_(std::move(entries)) {
  const size_t n = static_cast<size_t>(structure_.total_dim());
  if (m_.size() != n * n) throw std::invalid_argument("Operator: entry count != total_dim^2");
}

Operator Operator::identity(const HilbertStructure& s) {
  Operator op(s);
  for (int i = 0; i < op.dim(); ++i) op.at(i, i) = 1.0;
  return op;
}

Operator Operator::zero(const HilbertStructure& s) { return Operator(s); }

Operator Operator::from_matrix(int d, std::vector<cplx> entries) {
  return Operator(HilbertStructure({d}), std::move(entries));
}

Operator& Operator::operator+=(const Operator& o) {
  if (structure_ != o.structure_) throw std::invalid_argument("Operator+: structure mismatch");
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (structure_ != o.structure_) throw std::invalid_argument("Operator-: structure mismatch");
  for (size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

Operator& Operator::operator*=(cplx s) {
  for (auto& v : m_) v *= s;
  return *this;
}

Operator Operator::adjoint() const {
  Operator out(structure_);
  const int n = dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

cplx Operator::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

double Operator::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : m_) s += std::norm(v);
  return std::sqrt(s);
}

bool Operator::is_hermitian() const {
  const int n = dim();
  double dev2 = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const cplx d = at(r, c) - std::conj(at(c, r));
      dev2 += (r == c ? 1.0 : 2.0) * std::norm(d);
    }
  return std::sqrt(dev2) <= tol::hermiticity_threshold(frobenius_norm());
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }

Operator operator*(const Operator& a, const Operator& b) {
  if (a.structure() != b.structure()) throw std::invalid_argument("Operator*: structure mismatch");
  const int n = a.dim();
  Operator c(a.structure());
  const cplx* A = a.data();
  const cplx* B = b.data();
  cplx* C = c.data();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = A[static_cast<size_t>(i) * n + k];
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* Brow = B + static_cast<size_t>(k) * n;
      cplx* Crow = C + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) Crow[j] += aik * Brow[j];
    }
  }
  return c;
}

Operator operator*(cplx s, Operator a) { return a *= s; }
Operator operator*(Operator a, cplx s) { return a *= s; }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace symtherm
