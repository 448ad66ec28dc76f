#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svo/composer.hpp"
#include "svo/dataset.hpp"
#include "svo/execution.hpp"

namespace svo {

enum class Aggregation { Averaged, NonAveraged };

std::string_view aggregation_name(Aggregation a);  // "averaged" / "non-averaged"
std::optional<Aggregation> parse_aggregation(std::string_view name);

struct EvalReport {
  std::string method;
  Aggregation aggregation = Aggregation::NonAveraged;
  double rho = 0.0;
  std::size_t n_items = 0;        // points entering the correlation
  std::size_t n_skipped_oov = 0;  // dataset rows dropped for OOV words
};

// Something that scores ordered triplet pairs. `prepare` sees every distinct
// triplet before scoring starts; `score` must then be safe to call
// concurrently.
class TripletScorer {
 public:
  virtual ~TripletScorer() = default;
  virtual std::string name() const = 0;
  virtual std::optional<std::string> missing_word(const Triplet& t) const = 0;
  virtual void prepare(std::span<const Triplet> triplets, Execution exec) {
    (void)triplets;
    (void)exec;
  }
  virtual double score(const Triplet& a, const Triplet& b) const = 0;
  // Scores many pairs; the default runs `score` over them with for_each_index.
  virtual std::vector<double> score_batch(std::span<const std::pair<Triplet, Triplet>> pairs,
                                          Execution exec) const;
};

// Wraps a plain function; never reports missing words.
class FunctionScorer final : public TripletScorer {
 public:
  using Fn = std::function<double(const Triplet&, const Triplet&)>;
  FunctionScorer(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  std::string name() const override { return name_; }
  std::optional<std::string> missing_word(const Triplet&) const override { return std::nullopt; }
  double score(const Triplet& a, const Triplet& b) const override { return fn_(a, b); }

 private:
  std::string name_;
  Fn fn_;
};

// Scores with one composition method, building each triplet's features once.
class MethodScorer final : public TripletScorer {
 public:
  MethodScorer(const Composer& composer, Method method) : composer_(&composer), method_(method) {}

  std::string name() const override { return std::string(method_name(method_)); }
  std::optional<std::string> missing_word(const Triplet& t) const override {
    return composer_->missing_word(t, method_);
  }
  void prepare(std::span<const Triplet> triplets, Execution exec) override;
  double score(const Triplet& a, const Triplet& b) const override;
  // Runs the score_pairs kernel; zero-representation warnings come out in
  // pair order whatever the thread count.
  std::vector<double> score_batch(std::span<const std::pair<Triplet, Triplet>> pairs,
                                  Execution exec) const override;

 private:
  std::size_t position(const Triplet& t) const;

  const Composer* composer_;
  Method method_;
  std::vector<Triplet> keys_;  // sorted
  std::vector<TripletFeatures> features_;
};

// Model scores joined to dataset rows. Pairs are the distinct ordered
// (left, right) pairs in order of first appearance; each is scored once.
struct ScoredDataset {
  std::string method;
  std::vector<Triplet> lefts, rights;  // per pair
  std::vector<std::size_t> pair_of_row;
  std::vector<double> human;            // per row
  std::vector<bool> usable;             // per pair
  std::vector<double> model;            // per pair (0 when unusable)
  std::size_t skipped_rows = 0;
};

// Strict: the first OOV word (in file order) aborts with OovError.
// Lenient: rows touching an OOV word are dropped and counted.
ScoredDataset score_dataset(std::span<const EvalItem> items, TripletScorer& scorer, OovPolicy oov,
                            Execution exec = Execution::Parallel);

// NonAveraged: one point per row. Averaged: one point per pair with the mean
// human score. Throws Error when no usable rows remain.
EvalReport aggregate(const ScoredDataset& scored, Aggregation aggregation);

EvalReport evaluate(std::span<const EvalItem> items, TripletScorer& scorer, Aggregation aggregation,
                    OovPolicy oov = OovPolicy::Strict, Execution exec = Execution::Parallel);

// `<method>\t<aggregation>\t<rho %.6f>\t<n>\t<skipped>`
std::string format_report_line(const EvalReport& r);
std::string format_report_table(std::span<const EvalReport> reports);

}  // namespace svo
