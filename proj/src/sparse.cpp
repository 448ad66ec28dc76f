#include "svo/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace svo {

double SparseVector::at(std::uint32_t k) const {
  const auto it = std::lower_bound(index.begin(), index.end(), k);
  if (it == index.end() || *it != k) return 0.0;
  return value[static_cast<std::size_t>(it - index.begin())];
}

double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.index.size() && j < b.index.size()) {
    if (a.index[i] < b.index[j]) {
      ++i;
    } else if (b.index[j] < a.index[i]) {
      ++j;
    } else {
      sum += a.value[i++] * b.value[j++];
    }
  }
  return sum;
}

double squared_norm(const SparseVector& v) {
  double sum = 0.0;
  for (double x : v.value) sum += x * x;
  return sum;
}

bool is_zero(const SparseVector& v) {
  return std::all_of(v.value.begin(), v.value.end(), [](double x) { return x == 0.0; });
}

double cosine(const SparseVector& a, const SparseVector& b) {
  const double na = squared_norm(a);
  const double nb = squared_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (std::sqrt(na) * std::sqrt(nb));
}

SparseVector hadamard(const SparseVector& a, const SparseVector& b) {
  SparseVector out;
  std::size_t i = 0, j = 0;
  while (i < a.index.size() && j < b.index.size()) {
    if (a.index[i] < b.index[j]) {
      ++i;
    } else if (b.index[j] < a.index[i]) {
      ++j;
    } else {
      out.index.push_back(a.index[i]);
      out.value.push_back(a.value[i++] * b.value[j++]);
    }
  }
  return out;
}

}  // namespace svo
