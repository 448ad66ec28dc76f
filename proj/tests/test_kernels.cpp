#include <gtest/gtest.h>

#include <atomic>
#include <sstream>
#include <stdexcept>

#include "support/synthetic.hpp"
#include "svo/error.hpp"
#include "svo/kernels.hpp"

using namespace svo;

namespace {

class KernelTest : public ::testing::Test {
 protected:
  void SetUp() override { set_thread_count(4); }
};

std::vector<RawSentence> split(const std::string& text) {
  std::istringstream in(text);
  SentenceSplitter splitter(in);
  std::vector<RawSentence> out;
  RawSentence s;
  while (splitter.next(s)) out.push_back(s);
  return out;
}

}  // namespace

TEST_F(KernelTest, ForEachVisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> seen(1000);
  kernels::for_each_index_parallel(seen.size(), [&](std::size_t i) { ++seen[i]; });
  for (const auto& s : seen) EXPECT_EQ(s.load(), 1);
}

TEST_F(KernelTest, ForEachRethrowsLowestIndexFailure) {
  for (const auto exec : {Execution::Serial, Execution::Parallel}) {
    try {
      kernels::for_each_index(
          500,
          [](std::size_t i) {
            if (i % 97 == 13) throw std::runtime_error(std::to_string(i));
          },
          exec);
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "13");
    }
  }
}

TEST_F(KernelTest, TallyParallelEqualsSerial) {
  const auto batch = split(svo::testing::make_corpus(77, 500).conllu);
  const auto cfg = ExtractionConfig::defaults();
  EXPECT_EQ(kernels::tally_sentences_parallel(batch, cfg, "x"),
            kernels::tally_sentences_serial(batch, cfg, "x"));
}

TEST_F(KernelTest, RowCosinesParallelEqualsSerial) {
  svo::testing::SyntheticModel m(12);
  const auto& emb = m.embeddings;
  std::vector<std::ptrdiff_t> rows;
  for (std::size_t r = 0; r < emb.size(); ++r) rows.push_back(static_cast<std::ptrdiff_t>(r));
  rows.push_back(-1);
  for (std::size_t q = 0; q < emb.size(); ++q) {
    std::vector<double> a(rows.size()), b(rows.size());
    kernels::row_cosines_serial(emb, rows, emb.row(q), emb.norm(q), a);
    kernels::row_cosines_parallel(emb, rows, emb.row(q), emb.norm(q), b);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.back(), 0.0);
    EXPECT_NEAR(a[q], 1.0, 1e-12);
  }
}

TEST_F(KernelTest, ScorePairsParallelEqualsSerial) {
  svo::testing::SyntheticModel m(13);
  const auto ts = svo::testing::random_triplets(2, m.nouns(), m.verbs(), 60);
  std::vector<kernels::IndexPair> pairs;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); j += 7) pairs.emplace_back(i, j);
  for (const Method method : kAllMethods) {
    std::vector<TripletFeatures> features;
    for (const auto& t : ts) features.push_back(m.composer.features(t, method));
    std::vector<std::uint8_t> da, db;
    const auto a = kernels::score_pairs_serial(features, pairs, method, &da);
    const auto b = kernels::score_pairs_parallel(features, pairs, method, &db);
    EXPECT_EQ(a, b) << method_name(method);
    EXPECT_EQ(da, db);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      EXPECT_EQ(a[p], score_features(features[pairs[p].first], features[pairs[p].second], method));
    }
  }
}
