#pragma once

#include <complex>
#include <vector>

#include "symtherm/hilbert.hpp"

namespace symtherm {

using cplx = std::complex<double>;

/// Dense square matrix tagged with a Hilbert structure. Carries Hamiltonians,
/// density matrices, projectors and symmetry unitaries alike.
class Operator {
 public:
  Operator() = default;
  explicit Operator(HilbertStructure structure);
  Operator(HilbertStructure structure, std::vector<cplx> entries);

  static Operator identity(const HilbertStructure& s);
  static Operator zero(const HilbertStructure& s);
  /// Single-site operator from a d x d row-major entry list.
  static Operator from_matrix(int d, std::vector<cplx> entries);

  int dim() const { return structure_.total_dim(); }
  const HilbertStructure& structure() const { return structure_; }

  cplx& at(int r, int c) { return m_[static_cast<size_t>(r) * dim() + c]; }
  const cplx& at(int r, int c) const { return m_[static_cast<size_t>(r) * dim() + c]; }
  cplx* data() { return m_.data(); }
  const cplx* data() const { return m_.data(); }

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx s);

  Operator adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  bool is_hermitian() const;  // within tol::hermiticity_threshold

 private:
  HilbertStructure structure_;
  std::vector<cplx> m_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);  // matrix product
Operator operator*(cplx s, Operator a);
Operator operator*(Operator a, cplx s);

/// [a, b] = ab - ba.
Operator commutator(const Operator& a, const Operator& b);

}  // namespace symtherm
