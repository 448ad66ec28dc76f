#include "svo/ppmi.hpp"

#include <cmath>
#include <stdexcept>

#include "svo/error.hpp"

namespace svo {

double ppmi_from_counts(std::uint64_t joint, std::uint64_t noun_marginal,
                        std::uint64_t verb_marginal, std::uint64_t total, double ln_base) {
  if (joint == 0 || noun_marginal == 0 || verb_marginal == 0) return 0.0;
  __extension__ typedef unsigned __int128 u128;
  const u128 observed = static_cast<u128>(joint) * total;
  const u128 expected = static_cast<u128>(noun_marginal) * verb_marginal;
  if (observed <= expected) return 0.0;
  const double ratio = (static_cast<double>(joint) * static_cast<double>(total)) /
                       (static_cast<double>(noun_marginal) * static_cast<double>(verb_marginal));
  return std::log(ratio) / ln_base;
}

PpmiModel::PpmiModel(const PairCountTable& counts, double log_base)
    : counts_(&counts), log_base_(log_base), ln_base_(std::log(log_base)) {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw std::invalid_argument("PPMI log base must be a finite number greater than 1");
  }
}

double PpmiModel::score(Role role, std::string_view noun, std::string_view verb) const {
  const auto total = counts_->total(role);
  if (total == 0) {
    throw EmptyModelError("PPMI queried for role '" + std::string(role_name(role)) +
                          "' which has no observations");
  }
  return ppmi_from_counts(counts_->joint(role, noun, verb), counts_->noun_marginal(role, noun),
                          counts_->verb_marginal(role, verb), total, ln_base_);
}

std::vector<std::pair<std::string_view, double>> PpmiModel::column(Role role,
                                                                   std::string_view verb) const {
  std::vector<std::pair<std::string_view, double>> out;
  const auto& r = counts_->role(role);
  const auto it = r.by_verb.find(verb);
  if (it == r.by_verb.end()) return out;
  const std::uint64_t verb_total = counts_->verb_marginal(role, verb);
  for (const auto& [noun, n] : it->second) {
    const double v =
        ppmi_from_counts(n, r.noun_marginals.find(noun)->second, verb_total, r.total, ln_base_);
    if (v > 0.0) out.emplace_back(noun, v);
  }
  return out;
}

}  // namespace svo
