#pragma once

#include <cstdint>
#include <numbers>
#include <string_view>
#include <utility>
#include <vector>

#include "svo/counts.hpp"

namespace svo {

// max(0, log_b(c(x,y) T / (c(x) c(y)))), zero when c(x,y) = 0.
// Equality c(x,y) T = c(x) c(y) is decided in exact integer arithmetic so
// independent cells come out as exactly 0.
double ppmi_from_counts(std::uint64_t joint, std::uint64_t noun_marginal,
                        std::uint64_t verb_marginal, std::uint64_t total, double ln_base);

// Noun-verb association per role (subject role: NVSubj, object role: NVObj).
// Holds a reference to the count table, which must outlive the model.
class PpmiModel {
 public:
  explicit PpmiModel(const PairCountTable& counts, double log_base = std::numbers::e);

  // Throws EmptyModelError when the role has no observations.
  double score(Role role, std::string_view noun, std::string_view verb) const;

  // Nouns with positive PPMI for `verb` in `role`, in noun order.
  std::vector<std::pair<std::string_view, double>> column(Role role, std::string_view verb) const;

  double log_base() const { return log_base_; }
  const PairCountTable& counts() const { return *counts_; }

 private:
  const PairCountTable* counts_;
  double log_base_;
  double ln_base_;
};

}  // namespace svo
