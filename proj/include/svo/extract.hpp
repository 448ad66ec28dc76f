#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "svo/conllu.hpp"
#include "svo/execution.hpp"

namespace svo {

enum class Role : std::uint8_t { Subject = 0, Object = 1 };

inline constexpr Role kRoles[] = {Role::Subject, Role::Object};

// "subj" / "obj", the spelling used in every artifact.
std::string_view role_name(Role role);
std::optional<Role> parse_role(std::string_view name);

// A (noun, verb) dependency in one grammatical role. Field order gives the
// artifact sort order (role, noun, verb).
struct DepPair {
  Role role = Role::Subject;
  std::string noun;
  std::string verb;

  auto operator<=>(const DepPair&) const = default;
};

struct DepPairHash {
  std::size_t operator()(const DepPair& p) const noexcept;
};

using LabelSet = std::set<std::string, std::less<>>;

struct ExtractionConfig {
  LabelSet subject_labels;
  LabelSet object_labels;
  LabelSet noun_pos;
  LabelSet verb_pos;

  // nsubj/nsubjpass subjects; dobj/iobj/nmod/xcomp objects; NOUN/PROPN/PRON
  // dependents of VERB heads.
  static ExtractionConfig defaults();

  // Throws std::invalid_argument when the two label sets overlap.
  void validate() const;
};

// ASCII lowercasing; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

// Lowercased LEMMA, or lowercased FORM when LEMMA is "_".
std::string lemma_of(const TokenRecord& token);

std::vector<DepPair> extract_pairs(const Sentence& sentence, const ExtractionConfig& cfg);

// Multiset of DepPairs. Tallies merge by addition, so shard order never
// affects the result.
class PairTally {
 public:
  void add(const DepPair& pair, std::uint64_t n = 1);
  void add(Role role, std::string_view noun, std::string_view verb, std::uint64_t n = 1);
  void merge(const PairTally& other);

  std::uint64_t count(const DepPair& pair) const;
  std::size_t distinct() const { return counts_.size(); }
  std::uint64_t total() const;
  bool empty() const { return counts_.empty(); }

  // Entries sorted by (role, noun, verb).
  std::vector<std::pair<DepPair, std::uint64_t>> sorted() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [pair, n] : counts_) f(pair, n);
  }

  bool operator==(const PairTally& other) const { return counts_ == other.counts_; }

 private:
  std::unordered_map<DepPair, std::uint64_t, DepPairHash> counts_;
};

// Reads a whole CoNLL-U stream in batches and tallies every extracted pair.
PairTally tally_corpus(std::istream& in, const ExtractionConfig& cfg, std::string_view source,
                       Execution exec = Execution::Parallel, std::size_t batch_sentences = 16384);

// Pair file: `role<TAB>noun<TAB>verb<TAB>count`, sorted by (role, noun, verb).
void write_pair_file(std::ostream& out, const PairTally& tally);
PairTally read_pair_file(std::istream& in, std::string_view source = "<pairs>");

}  // namespace svo
