#include "svo/vocabulary.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "svo/diagnostics.hpp"
#include "svo/error.hpp"

namespace svo {

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct RoleCounts {
  std::uint64_t as_subject = 0;
  std::uint64_t as_object = 0;
};

Vocabulary select(const std::map<std::string, RoleCounts, std::less<>>& nouns,
                  const std::map<std::string, std::uint64_t, std::less<>>& verbs,
                  std::uint64_t min_verb_count, std::uint64_t min_noun_count) {
  std::vector<std::string> kept_nouns;
  for (const auto& [noun, c] : nouns) {
    if (c.as_subject >= min_noun_count && c.as_object >= min_noun_count) kept_nouns.push_back(noun);
  }
  std::vector<std::string> kept_verbs;
  for (const auto& [verb, c] : verbs) {
    if (c >= min_verb_count) kept_verbs.push_back(verb);
  }
  Vocabulary vocab(std::move(kept_nouns), std::move(kept_verbs), min_verb_count, min_noun_count);
  if (vocab.noun_count() == 0 || vocab.verb_count() == 0) {
    std::ostringstream msg;
    msg << "vocabulary has " << vocab.noun_count() << " nouns and " << vocab.verb_count()
        << " verbs (thresholds: verbs " << min_verb_count << ", nouns " << min_noun_count << ")";
    warn(msg.str());
  }
  return vocab;
}

void count_into(std::map<std::string, RoleCounts, std::less<>>& nouns,
                std::map<std::string, std::uint64_t, std::less<>>& verbs, const DepPair& p,
                std::uint64_t n) {
  auto& c = nouns[p.noun];
  (p.role == Role::Subject ? c.as_subject : c.as_object) += n;
  verbs[p.verb] += n;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> nouns, std::vector<std::string> verbs,
                       std::uint64_t min_verb_count, std::uint64_t min_noun_count)
    : nouns_(std::move(nouns)),
      verbs_(std::move(verbs)),
      min_verb_count_(min_verb_count),
      min_noun_count_(min_noun_count) {
  sort_unique(nouns_);
  sort_unique(verbs_);
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view noun) const {
  const auto it = std::lower_bound(nouns_.begin(), nouns_.end(), noun);
  if (it == nouns_.end() || *it != noun) return std::nullopt;
  return static_cast<std::size_t>(it - nouns_.begin());
}

bool Vocabulary::contains_verb(std::string_view verb) const {
  return std::binary_search(verbs_.begin(), verbs_.end(), verb);
}

Vocabulary build_vocabulary(std::span<const DepPair> pairs, std::uint64_t min_verb_count,
                            std::uint64_t min_noun_count) {
  std::map<std::string, RoleCounts, std::less<>> nouns;
  std::map<std::string, std::uint64_t, std::less<>> verbs;
  for (const auto& p : pairs) count_into(nouns, verbs, p, 1);
  return select(nouns, verbs, min_verb_count, min_noun_count);
}

Vocabulary build_vocabulary(const PairTally& tally, std::uint64_t min_verb_count,
                            std::uint64_t min_noun_count) {
  std::map<std::string, RoleCounts, std::less<>> nouns;
  std::map<std::string, std::uint64_t, std::less<>> verbs;
  tally.for_each([&](const DepPair& p, std::uint64_t n) { count_into(nouns, verbs, p, n); });
  return select(nouns, verbs, min_verb_count, min_noun_count);
}

PairTally restrict_to(const PairTally& tally, const Vocabulary& vocab) {
  PairTally out;
  tally.for_each([&](const DepPair& p, std::uint64_t n) {
    if (vocab.contains_noun(p.noun) && vocab.contains_verb(p.verb)) out.add(p, n);
  });
  return out;
}

void save_vocabulary(std::ostream& out, const Vocabulary& vocab) {
  out << "#nouns " << vocab.noun_count() << " #verbs " << vocab.verb_count() << '\n';
  for (const auto& n : vocab.nouns()) out << "N\t" << n << '\n';
  for (const auto& v : vocab.verbs()) out << "V\t" << v << '\n';
}

Vocabulary load_vocabulary(std::istream& in, std::string_view source) {
  const std::string src(source);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(src, 1, "missing '#nouns <n> #verbs <m>' header");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream header(line);
  std::string tag_n, tag_v;
  std::size_t n_nouns = 0, n_verbs = 0;
  if (!(header >> tag_n >> n_nouns >> tag_v >> n_verbs) || tag_n != "#nouns" ||
      tag_v != "#verbs") {
    throw ParseError(src, 1, "malformed header, expected '#nouns <n> #verbs <m>'");
  }

  std::vector<std::string> nouns, verbs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() < 3 || line[1] != '\t' || (line[0] != 'N' && line[0] != 'V')) {
      throw ParseError(src, line_no, "expected 'N<TAB>lemma' or 'V<TAB>lemma'");
    }
    (line[0] == 'N' ? nouns : verbs).push_back(line.substr(2));
  }
  if (nouns.size() != n_nouns || verbs.size() != n_verbs) {
    throw ParseError(src, 1,
                     "header declares " + std::to_string(n_nouns) + " nouns and " +
                         std::to_string(n_verbs) + " verbs, file lists " +
                         std::to_string(nouns.size()) + " and " + std::to_string(verbs.size()));
  }
  Vocabulary vocab(std::move(nouns), std::move(verbs));
  if (vocab.noun_count() != n_nouns || vocab.verb_count() != n_verbs) {
    throw ParseError(src, 0, "duplicate lemmas in vocabulary file");
  }
  return vocab;
}

}  // namespace svo
