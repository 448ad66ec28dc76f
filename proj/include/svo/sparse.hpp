#pragma once

#include <cstdint>
#include <vector>

namespace svo {

// Sparse real vector with strictly increasing coordinate indices.
struct SparseVector {
  std::vector<std::uint32_t> index;
  std::vector<double> value;

  std::size_t nnz() const { return index.size(); }
  bool empty() const { return index.empty(); }
  // Coordinate lookup (0 when absent).
  double at(std::uint32_t k) const;

  bool operator==(const SparseVector&) const = default;
};

double dot(const SparseVector& a, const SparseVector& b);
double squared_norm(const SparseVector& v);
// True when every stored value is 0 (or nothing is stored).
bool is_zero(const SparseVector& v);
// 0 when either vector is zero.
double cosine(const SparseVector& a, const SparseVector& b);
// Element-wise product; support is the intersection of the supports.
SparseVector hadamard(const SparseVector& a, const SparseVector& b);

}  // namespace svo
