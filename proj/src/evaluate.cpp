#include "svo/evaluate.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "svo/diagnostics.hpp"
#include "svo/error.hpp"
#include "svo/kernels.hpp"
#include "svo/spearman.hpp"

namespace svo {

std::string_view aggregation_name(Aggregation a) {
  return a == Aggregation::Averaged ? "averaged" : "non-averaged";
}

std::optional<Aggregation> parse_aggregation(std::string_view name) {
  if (name == "averaged") return Aggregation::Averaged;
  if (name == "non-averaged") return Aggregation::NonAveraged;
  return std::nullopt;
}

std::vector<double> TripletScorer::score_batch(std::span<const std::pair<Triplet, Triplet>> pairs,
                                               Execution exec) const {
  std::vector<double> out(pairs.size());
  kernels::for_each_index(
      pairs.size(), [&](std::size_t i) { out[i] = score(pairs[i].first, pairs[i].second); }, exec);
  return out;
}

void MethodScorer::prepare(std::span<const Triplet> triplets, Execution exec) {
  keys_.assign(triplets.begin(), triplets.end());
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  features_.assign(keys_.size(), {});
  kernels::for_each_index(
      keys_.size(), [&](std::size_t i) { features_[i] = composer_->features(keys_[i], method_); },
      exec);
}

std::size_t MethodScorer::position(const Triplet& t) const {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), t);
  if (it == keys_.end() || *it != t) {
    throw std::logic_error("triplet " + to_string(t) + " was not prepared");
  }
  return static_cast<std::size_t>(it - keys_.begin());
}

double MethodScorer::score(const Triplet& a, const Triplet& b) const {
  bool degenerate = false;
  const double s = score_features(features_[position(a)], features_[position(b)], method_,
                                  &degenerate);
  if (degenerate) {
    warn(name() + ": zero representation in " + to_string(a) + " vs " + to_string(b) +
         ", similarity set to 0");
  }
  return s;
}

std::vector<double> MethodScorer::score_batch(std::span<const std::pair<Triplet, Triplet>> pairs,
                                              Execution exec) const {
  std::vector<kernels::IndexPair> index(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[i] = {position(pairs[i].first), position(pairs[i].second)};
  }
  std::vector<std::uint8_t> degenerate;
  auto scores = kernels::score_pairs(features_, index, method_, exec, &degenerate);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (degenerate[i]) {
      warn(name() + ": zero representation in " + to_string(pairs[i].first) + " vs " +
           to_string(pairs[i].second) + ", similarity set to 0");
    }
  }
  return scores;
}

ScoredDataset score_dataset(std::span<const EvalItem> items, TripletScorer& scorer, OovPolicy oov,
                            Execution exec) {
  ScoredDataset out;
  out.method = scorer.name();
  std::map<std::pair<Triplet, Triplet>, std::size_t> pair_ids;
  out.pair_of_row.reserve(items.size());
  out.human.reserve(items.size());
  for (const auto& item : items) {
    const auto [it, inserted] = pair_ids.try_emplace({item.left, item.right}, out.lefts.size());
    if (inserted) {
      out.lefts.push_back(item.left);
      out.rights.push_back(item.right);
    }
    out.pair_of_row.push_back(it->second);
    out.human.push_back(item.human_score);
  }

  const std::size_t n_pairs = out.lefts.size();
  out.usable.assign(n_pairs, true);
  out.model.assign(n_pairs, 0.0);
  std::vector<Triplet> triplets;
  std::vector<std::pair<Triplet, Triplet>> to_score;
  std::vector<std::size_t> scored_ids;
  for (std::size_t p = 0; p < n_pairs; ++p) {
    auto missing = scorer.missing_word(out.lefts[p]);
    if (!missing) missing = scorer.missing_word(out.rights[p]);
    if (missing) {
      if (oov == OovPolicy::Strict) {
        throw OovError(*missing, out.method + ", pair " + to_string(out.lefts[p]) + " / " +
                                     to_string(out.rights[p]));
      }
      warn(out.method + ": skipping " + to_string(out.lefts[p]) + " / " +
           to_string(out.rights[p]) + ", no representation for '" + *missing + "'");
      out.usable[p] = false;
      continue;
    }
    triplets.push_back(out.lefts[p]);
    triplets.push_back(out.rights[p]);
    to_score.emplace_back(out.lefts[p], out.rights[p]);
    scored_ids.push_back(p);
  }

  scorer.prepare(triplets, exec);
  const auto scores = scorer.score_batch(to_score, exec);
  for (std::size_t i = 0; i < scored_ids.size(); ++i) out.model[scored_ids[i]] = scores[i];

  for (std::size_t row = 0; row < items.size(); ++row) {
    if (!out.usable[out.pair_of_row[row]]) ++out.skipped_rows;
  }
  return out;
}

EvalReport aggregate(const ScoredDataset& scored, Aggregation aggregation) {
  std::vector<double> human, model;
  if (aggregation == Aggregation::NonAveraged) {
    for (std::size_t row = 0; row < scored.pair_of_row.size(); ++row) {
      const auto p = scored.pair_of_row[row];
      if (!scored.usable[p]) continue;
      human.push_back(scored.human[row]);
      model.push_back(scored.model[p]);
    }
  } else {
    const std::size_t n_pairs = scored.lefts.size();
    std::vector<double> sum(n_pairs, 0.0);
    std::vector<std::size_t> count(n_pairs, 0);
    for (std::size_t row = 0; row < scored.pair_of_row.size(); ++row) {
      sum[scored.pair_of_row[row]] += scored.human[row];
      ++count[scored.pair_of_row[row]];
    }
    for (std::size_t p = 0; p < n_pairs; ++p) {
      if (!scored.usable[p]) continue;
      human.push_back(sum[p] / static_cast<double>(count[p]));
      model.push_back(scored.model[p]);
    }
  }
  if (human.empty()) {
    throw Error(scored.method + " (" + std::string(aggregation_name(aggregation)) +
                "): no usable rows to correlate");
  }
  EvalReport report;
  report.method = scored.method;
  report.aggregation = aggregation;
  report.n_items = human.size();
  report.n_skipped_oov = scored.skipped_rows;
  try {
    report.rho = spearman_rho(human, model);
  } catch (const CorrelationError& e) {
    throw CorrelationError(scored.method + " (" + std::string(aggregation_name(aggregation)) +
                           "): " + e.what());
  }
  return report;
}

EvalReport evaluate(std::span<const EvalItem> items, TripletScorer& scorer, Aggregation aggregation,
                    OovPolicy oov, Execution exec) {
  return aggregate(score_dataset(items, scorer, oov, exec), aggregation);
}

std::string format_report_line(const EvalReport& r) {
  return fmt::format("{}\t{}\t{:.6f}\t{}\t{}", r.method, aggregation_name(r.aggregation), r.rho,
                     r.n_items, r.n_skipped_oov);
}

std::string format_report_table(std::span<const EvalReport> reports) {
  std::size_t w_method = 6;
  for (const auto& r : reports) w_method = std::max(w_method, r.method.size());
  std::string out = fmt::format("{:<{}}  {:<12}  {:>9}  {:>6}  {:>7}\n", "method", w_method,
                                "aggregation", "rho", "n", "skipped");
  for (const auto& r : reports) {
    out += fmt::format("{:<{}}  {:<12}  {:>9.6f}  {:>6}  {:>7}\n", r.method, w_method,
                       aggregation_name(r.aggregation), r.rho, r.n_items, r.n_skipped_oov);
  }
  return out;
}

}  // namespace svo
