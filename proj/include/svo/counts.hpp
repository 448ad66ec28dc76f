#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "svo/extract.hpp"

namespace svo {

// Role-specific (noun, verb) co-occurrence counts with their marginals.
// Per role: total = sum of joint counts = sum of each marginal.
class PairCountTable {
 public:
  template <typename V>
  using StringMap = std::map<std::string, V, std::less<>>;

  struct RoleCounts {
    StringMap<StringMap<std::uint64_t>> by_verb;  // verb -> noun -> count
    StringMap<std::uint64_t> noun_marginals;
    StringMap<std::uint64_t> verb_marginals;
    std::uint64_t total = 0;

    bool operator==(const RoleCounts&) const = default;
  };

  void add(Role role, std::string_view noun, std::string_view verb, std::uint64_t n = 1);
  void merge(const PairCountTable& other);

  std::uint64_t joint(Role role, std::string_view noun, std::string_view verb) const;
  std::uint64_t noun_marginal(Role role, std::string_view noun) const;
  std::uint64_t verb_marginal(Role role, std::string_view verb) const;
  std::uint64_t total(Role role) const { return roles_[index(role)].total; }

  const RoleCounts& role(Role role) const { return roles_[index(role)]; }

  // Recomputes marginals and totals from the joint counts and compares.
  bool marginals_consistent() const;

  bool operator==(const PairCountTable&) const = default;

 private:
  static std::size_t index(Role role) { return static_cast<std::size_t>(role); }
  std::array<RoleCounts, 2> roles_;
};

// Exact multiset counts; the caller has already filtered to the vocabulary.
PairCountTable accumulate_counts(std::span<const DepPair> pairs);
PairCountTable accumulate_counts(const PairTally& tally);

// Per role: `#role <subj|obj> total <T>` followed by `noun<TAB>verb<TAB>count`
// lines sorted by (noun, verb). Subject block first.
void save_counts(std::ostream& out, const PairCountTable& table);
// Rejects malformed lines, duplicate cells and a header total that disagrees
// with the block's cells.
PairCountTable load_counts(std::istream& in, std::string_view source = "<counts>");

}  // namespace svo
