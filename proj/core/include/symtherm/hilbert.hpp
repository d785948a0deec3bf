#pragma once

#include <vector>

namespace symtherm {

/// Tensor-product structure of a composite Hilbert space. Site 0 is the
/// slowest-varying factor of the row-major composite index:
///   index = ((i_0 * d_1 + i_1) * d_2 + i_2) * ...
class HilbertStructure {
 public:
  HilbertStructure() = default;
  explicit HilbertStructure(std::vector<int> site_dims);

  /// N sites of equal dimension d.
  static HilbertStructure uniform(int n_sites, int d);

  int n_sites() const { return static_cast<int>(dims_.size()); }
  int site_dim(int i) const { return dims_[i]; }
  const std::vector<int>& site_dims() const { return dims_; }
  int total_dim() const { return total_; }

  bool operator==(const HilbertStructure& o) const { return dims_ == o.dims_; }
  bool operator!=(const HilbertStructure& o) const { return !(*this == o); }

  /// Decompose a composite index into per-site indices.
  std::vector<int> unpack(int index) const;
  /// Inverse of unpack().
  int pack(const std::vector<int>& multi) const;

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

/// Bipartition A|B by site indices; B is the complement.
struct Partition {
  std::vector<int> a_sites;

  Partition() = default;
  Partition(std::initializer_list<int> sites) : a_sites(sites) {}
  explicit Partition(std::vector<int> sites) : a_sites(std::move(sites)) {}

  /// Sites of B = complement of A in {0..n_sites-1}.
  std::vector<int> complement(int n_sites) const;
  bool contains(int site) const;
  /// Throws std::invalid_argument unless A and B are both nonempty subsets
  /// of {0..n_sites-1} with no repeats.
  void validate_bipartition(int n_sites) const;
};

}  // namespace symtherm
