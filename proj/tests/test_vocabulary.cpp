#include <gtest/gtest.h>

#include <sstream>

#include "support/fixtures.hpp"
#include "support/synthetic.hpp"
#include "svo/error.hpp"
#include "svo/vocabulary.hpp"

using namespace svo;

namespace {

std::vector<DepPair> toy_pairs() {
  std::vector<DepPair> pairs;
  const auto repeat = [&](Role r, const char* n, const char* v, int times) {
    for (int i = 0; i < times; ++i) pairs.push_back({r, n, v});
  };
  repeat(Role::Subject, "dog", "chase", 3);
  repeat(Role::Subject, "cat", "chase", 1);
  repeat(Role::Object, "cat", "chase", 2);
  repeat(Role::Object, "dog", "eat", 2);
  return pairs;
}

PairTally synthetic_tally(std::uint32_t seed) {
  std::istringstream in(svo::testing::make_corpus(seed, 200).conllu);
  return tally_corpus(in, ExtractionConfig::defaults(), "<synthetic>");
}

}  // namespace

TEST(BuildVocabulary, ToyThresholdsOne) {
  const auto v = build_vocabulary(toy_pairs(), 1, 1);
  EXPECT_EQ(std::vector<std::string>(v.nouns().begin(), v.nouns().end()),
            (std::vector<std::string>{"cat", "dog"}));
  EXPECT_EQ(std::vector<std::string>(v.verbs().begin(), v.verbs().end()),
            (std::vector<std::string>{"chase", "eat"}));
}

TEST(BuildVocabulary, NounMustReachThresholdInBothRoles) {
  const auto v = build_vocabulary(toy_pairs(), 1, 3);
  EXPECT_EQ(v.noun_count(), 0u);
}

TEST(BuildVocabulary, EmptyStreamWarns) {
  svo::testing::CapturedLog log;
  const auto v = build_vocabulary(std::vector<DepPair>{}, 1, 1);
  EXPECT_TRUE(v.empty());
  EXPECT_NE(log.text().find("vocabulary has 0 nouns"), std::string::npos);
}

TEST(BuildVocabulary, TallyAndStreamAgree) {
  PairTally t;
  for (const auto& p : toy_pairs()) t.add(p);
  EXPECT_EQ(build_vocabulary(t, 1, 1), build_vocabulary(toy_pairs(), 1, 1));
  EXPECT_EQ(build_vocabulary(t, 3, 2), build_vocabulary(toy_pairs(), 3, 2));
}

TEST(BuildVocabulary, MonotoneInThresholds) {
  const auto tally = synthetic_tally(3);
  for (std::uint64_t nv = 1; nv <= 30; nv += 4) {
    for (std::uint64_t nn = 1; nn <= 10; nn += 2) {
      const auto base = build_vocabulary(tally, nv, nn);
      for (const auto& [dv, dn] : {std::pair<int, int>{1, 0}, {0, 1}, {3, 2}}) {
        const auto raised = build_vocabulary(tally, nv + dv, nn + dn);
        for (const auto& n : raised.nouns()) EXPECT_TRUE(base.contains_noun(n));
        for (const auto& v : raised.verbs()) EXPECT_TRUE(base.contains_verb(v));
      }
    }
  }
}

TEST(Vocabulary, IndexRoundTripsAndSorted) {
  const auto v = build_vocabulary(synthetic_tally(5), 1, 1);
  ASSERT_GT(v.noun_count(), 10u);
  EXPECT_TRUE(std::is_sorted(v.nouns().begin(), v.nouns().end()));
  for (std::size_t i = 0; i < v.noun_count(); ++i) EXPECT_EQ(v.index_of(v.nouns()[i]), i);
  EXPECT_FALSE(v.index_of("zzz-not-a-noun").has_value());
}

TEST(Vocabulary, FileLayoutAndRoundTrip) {
  const Vocabulary v({"dog", "cat"}, {"eat", "chase"});
  std::stringstream buf;
  save_vocabulary(buf, v);
  EXPECT_EQ(buf.str(), "#nouns 2 #verbs 2\nN\tcat\nN\tdog\nV\tchase\nV\teat\n");
  EXPECT_EQ(load_vocabulary(buf), v);
}

TEST(Vocabulary, LoadRejectsBadFiles) {
  for (const char* bad : {"", "#nouns x #verbs 1\n", "#nouns 1 #verbs 0\nX\tcat\n",
                          "#nouns 2 #verbs 0\nN\tcat\n", "#nouns 2 #verbs 0\nN\tcat\nN\tcat\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(load_vocabulary(in), ParseError) << bad;
  }
}

TEST(Vocabulary, RestrictToKeepsOnlyInVocabularyPairs) {
  PairTally t;
  for (const auto& p : toy_pairs()) t.add(p);
  t.add(Role::Subject, "bird", "chase", 5);
  const auto kept = restrict_to(t, Vocabulary({"cat", "dog"}, {"chase"}));
  EXPECT_EQ(kept.count({Role::Subject, "dog", "chase"}), 3u);
  EXPECT_EQ(kept.count({Role::Subject, "bird", "chase"}), 0u);
  EXPECT_EQ(kept.count({Role::Object, "dog", "eat"}), 0u);
}
