#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svo/extract.hpp"

namespace svo {

// Frequency-filtered nouns and verbs. The sorted noun list is the coordinate
// space of every pair vector: coordinate k is nouns()[k].
class Vocabulary {
 public:
  Vocabulary() = default;
  // Sorts and deduplicates both lists.
  Vocabulary(std::vector<std::string> nouns, std::vector<std::string> verbs,
             std::uint64_t min_verb_count = 0, std::uint64_t min_noun_count = 0);

  std::span<const std::string> nouns() const { return nouns_; }
  std::span<const std::string> verbs() const { return verbs_; }
  std::size_t noun_count() const { return nouns_.size(); }
  std::size_t verb_count() const { return verbs_.size(); }
  bool empty() const { return nouns_.empty() && verbs_.empty(); }

  std::optional<std::size_t> index_of(std::string_view noun) const;
  bool contains_noun(std::string_view noun) const { return index_of(noun).has_value(); }
  bool contains_verb(std::string_view verb) const;

  // Thresholds the vocabulary was built with; 0 when loaded from a file.
  std::uint64_t min_verb_count() const { return min_verb_count_; }
  std::uint64_t min_noun_count() const { return min_noun_count_; }

  bool operator==(const Vocabulary& other) const {
    return nouns_ == other.nouns_ && verbs_ == other.verbs_;
  }

 private:
  std::vector<std::string> nouns_;
  std::vector<std::string> verbs_;
  std::uint64_t min_verb_count_ = 0;
  std::uint64_t min_noun_count_ = 0;
};

// Nouns need min_noun_count occurrences as subject AND as object (corpus-wide,
// summed over verbs); verbs need min_verb_count pairs over both roles.
// An empty result is legal and logged as a warning.
Vocabulary build_vocabulary(std::span<const DepPair> pairs, std::uint64_t min_verb_count,
                            std::uint64_t min_noun_count);
Vocabulary build_vocabulary(const PairTally& tally, std::uint64_t min_verb_count,
                            std::uint64_t min_noun_count);

// Keeps pairs whose noun and verb are both in the vocabulary.
PairTally restrict_to(const PairTally& tally, const Vocabulary& vocab);

// `#nouns <n> #verbs <m>` header, then `N<TAB>lemma` and `V<TAB>lemma` lines.
void save_vocabulary(std::ostream& out, const Vocabulary& vocab);
Vocabulary load_vocabulary(std::istream& in, std::string_view source = "<vocabulary>");

}  // namespace svo
