#include "symtherm/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symtherm {

HilbertStructure::HilbertStructure(std::vector<int> site_dims) : dims_(std::move(site_dims)) {
  if (dims_.empty()) throw std::invalid_argument("HilbertStructure: no sites");
  long total = 1;
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("HilbertStructure: site dimension must be >= 2");
    total *= d;
    if (total > (1 << 20))
      throw std::invalid_argument("HilbertStructure: total dimension beyond dense reach");
  }
  total_ = static_cast<int>(total);
}

HilbertStructure HilbertStructure::uniform(int n_sites, int d) {
  return HilbertStructure(std::vector<int>(static_cast<size_t>(n_sites), d));
}

std::vector<int> HilbertStructure::unpack(int index) const {
  std::vector<int> multi(dims_.size());
  for (int i = n_sites() - 1; i >= 0; --i) {
    multi[i] = index % dims_[i];
    index /= dims_[i];
  }
  return multi;
}

int HilbertStructure::pack(const std::vector<int>& multi) const {
  int index = 0;
  for (int i = 0; i < n_sites(); ++i) index = index * dims_[i] + multi[i];
  return index;
}

std::vector<int> Partition::complement(int n_sites) const {
  std::vector<int> b;
  for (int i = 0; i < n_sites; ++i)
    if (!contains(i)) b.push_back(i);
  return b;
}

bool Partition::contains(int site) const {
  return std::find(a_sites.begin(), a_sites.end(), site) != a_sites.end();
}

void Partition::validate_bipartition(int n_sites) const {
  if (a_sites.empty()) throw std::invalid_argument("Partition: region A is empty");
  std::set<int> seen;
  for (int s : a_sites) {
    if (s < 0 || s >= n_sites) throw std::invalid_argument("Partition: site index out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("Partition: repeated site index");
  }
  if (static_cast<int>(a_sites.size()) == n_sites)
    throw std::invalid_argument("Partition: region B is empty");
}

}  // namespace symtherm
