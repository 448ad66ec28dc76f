#pragma once

#include <span>
#include <vector>

namespace svo {

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> xs);

// Throws CorrelationError on length mismatch, fewer than two points, a
// constant input or a non-finite value.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson correlation of average ranks.
double spearman_rho(std::span<const double> xs, std::span<const double> ys);

}  // namespace svo
