// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <sstream>

#include "support/synthetic.hpp"
#include "svo/kernels.hpp"

using namespace svo;

namespace {

std::vector<RawSentence> sentences(std::size_t n) {
  std::istringstream in(testing::make_corpus(1, n, 300, 60).conllu);
  SentenceSplitter splitter(in);
  std::vector<RawSentence> out;
  RawSentence s;
  while (splitter.next(s)) out.push_back(s);
  return out;
}

void BM_TallySerial(benchmark::State& state) {
  const auto batch = sentences(static_cast<std::size_t>(state.range(0)));
  const auto cfg = ExtractionConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tally_sentences_serial(batch, cfg, "bench"));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TallyParallel(benchmark::State& state) {
  const auto batch = sentences(static_cast<std::size_t>(state.range(0)));
  const auto cfg = ExtractionConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tally_sentences_parallel(batch, cfg, "bench"));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct CosineInput {
  EmbeddingTable table;
  std::vector<std::ptrdiff_t> rows;
  std::vector<double> out;

  explicit CosineInput(std::size_t n) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
    std::istringstream in(testing::make_embeddings(2, words, 300));
    table = load_embeddings(in);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(static_cast<std::ptrdiff_t>(i));
    out.resize(n);
  }
};

template <auto Kernel>
void BM_RowCosines(benchmark::State& state) {
  CosineInput in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(in.table, in.rows, in.table.row(0), in.table.norm(0), in.out);
    benchmark::DoNotOptimize(in.out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct ScoringInput {
  testing::SyntheticModel model{3, 4000};
  std::vector<TripletFeatures> features;
  std::vector<kernels::IndexPair> pairs;

  explicit ScoringInput(Method method) {
    const auto ts = testing::random_triplets(4, model.nouns(), model.verbs(), 400);
    for (const auto& t : ts) features.push_back(model.composer.features(t, method));
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); j += 4) pairs.emplace_back(i, j);
  }
};

template <auto Kernel>
void BM_ScorePairs(benchmark::State& state) {
  const auto method = kAllMethods[static_cast<std::size_t>(state.range(0))];
  ScoringInput in(method);
  state.SetLabel(std::string(method_name(method)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(in.features, in.pairs, method, nullptr));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.pairs.size()));
}

}  // namespace

BENCHMARK(BM_TallySerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowCosines<kernels::row_cosines_serial>)->Arg(10000)->Arg(100000);
BENCHMARK(BM_RowCosines<kernels::row_cosines_parallel>)->Arg(10000)->Arg(100000);
BENCHMARK(BM_ScorePairs<kernels::score_pairs_serial>)->DenseRange(0, 6);
BENCHMARK(BM_ScorePairs<kernels::score_pairs_parallel>)->DenseRange(0, 6);

BENCHMARK_MAIN();
