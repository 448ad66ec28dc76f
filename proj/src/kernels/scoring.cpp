#include "svo/kernels.hpp"

namespace svo::kernels {

std::vector<double> score_pairs_serial(std::span<const TripletFeatures> features,
                                       std::span<const IndexPair> pairs, Method method,
                                       std::vector<std::uint8_t>* degenerate) {
  std::vector<double> out(pairs.size());
  if (degenerate) degenerate->assign(pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool zero = false;
    out[i] = score_features(features[pairs[i].first], features[pairs[i].second], method, &zero);
    if (degenerate) (*degenerate)[i] = zero;
  }
  return out;
}

std::vector<double> score_pairs_parallel(std::span<const TripletFeatures> features,
                                         std::span<const IndexPair> pairs, Method method,
                                         std::vector<std::uint8_t>* degenerate) {
  std::vector<double> out(pairs.size());
  if (degenerate) degenerate->assign(pairs.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    bool zero = false;
    out[i] = score_features(features[pairs[i].first], features[pairs[i].second], method, &zero);
    if (degenerate) (*degenerate)[i] = zero;
  }
  return out;
}

std::vector<double> score_pairs(std::span<const TripletFeatures> features,
                                std::span<const IndexPair> pairs, Method method, Execution exec,
                                std::vector<std::uint8_t>* degenerate) {
  return exec == Execution::Parallel ? score_pairs_parallel(features, pairs, method, degenerate)
                                     : score_pairs_serial(features, pairs, method, degenerate);
}

}  // namespace svo::kernels
