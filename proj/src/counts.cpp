#include "svo/counts.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <tuple>
#include <sstream>
#include <vector>

#include "svo/error.hpp"

namespace svo {

namespace {

template <typename M>
std::uint64_t lookup(const M& m, std::string_view key) {
  const auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

template <typename M>
auto& slot(M& m, std::string_view key) {
  auto it = m.find(key);
  if (it == m.end()) it = m.emplace(std::string(key), typename M::mapped_type{}).first;
  return it->second;
}

bool parse_u64(std::string_view s, std::uint64_t& v) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  return ec == std::errc() && ptr == end;
}

}  // namespace

void PairCountTable::add(Role role, std::string_view noun, std::string_view verb, std::uint64_t n) {
  if (n == 0) return;
  auto& r = roles_[index(role)];
  slot(slot(r.by_verb, verb), noun) += n;
  slot(r.noun_marginals, noun) += n;
  slot(r.verb_marginals, verb) += n;
  r.total += n;
}

void PairCountTable::merge(const PairCountTable& other) {
  for (Role role : kRoles) {
    for (const auto& [verb, column] : other.role(role).by_verb) {
      for (const auto& [noun, n] : column) add(role, noun, verb, n);
    }
  }
}

std::uint64_t PairCountTable::joint(Role role, std::string_view noun, std::string_view verb) const {
  const auto& by_verb = roles_[index(role)].by_verb;
  const auto it = by_verb.find(verb);
  return it == by_verb.end() ? 0 : lookup(it->second, noun);
}

std::uint64_t PairCountTable::noun_marginal(Role role, std::string_view noun) const {
  return lookup(roles_[index(role)].noun_marginals, noun);
}

std::uint64_t PairCountTable::verb_marginal(Role role, std::string_view verb) const {
  return lookup(roles_[index(role)].verb_marginals, verb);
}

bool PairCountTable::marginals_consistent() const {
  for (const auto& r : roles_) {
    RoleCounts rebuilt;
    for (const auto& [verb, column] : r.by_verb) {
      for (const auto& [noun, n] : column) {
        slot(rebuilt.noun_marginals, noun) += n;
        slot(rebuilt.verb_marginals, verb) += n;
        rebuilt.total += n;
      }
    }
    if (rebuilt.noun_marginals != r.noun_marginals || rebuilt.verb_marginals != r.verb_marginals ||
        rebuilt.total != r.total) {
      return false;
    }
  }
  return true;
}

PairCountTable accumulate_counts(std::span<const DepPair> pairs) {
  PairCountTable table;
  for (const auto& p : pairs) table.add(p.role, p.noun, p.verb);
  return table;
}

PairCountTable accumulate_counts(const PairTally& tally) {
  PairCountTable table;
  tally.for_each([&](const DepPair& p, std::uint64_t n) { table.add(p.role, p.noun, p.verb, n); });
  return table;
}

void save_counts(std::ostream& out, const PairCountTable& table) {
  for (Role role : kRoles) {
    const auto& r = table.role(role);
    out << "#role " << role_name(role) << " total " << r.total << '\n';
    // Cells are stored verb-major; the artifact is noun-major.
    std::vector<std::tuple<std::string_view, std::string_view, std::uint64_t>> cells;
    for (const auto& [verb, column] : r.by_verb) {
      for (const auto& [noun, n] : column) cells.emplace_back(noun, verb, n);
    }
    std::sort(cells.begin(), cells.end());
    for (const auto& [noun, verb, n] : cells) out << noun << '\t' << verb << '\t' << n << '\n';
  }
}

PairCountTable load_counts(std::istream& in, std::string_view source) {
  const std::string src(source);
  PairCountTable table;
  std::optional<Role> current;
  std::uint64_t declared = 0, seen = 0;
  std::size_t header_line = 0;
  bool have_role[2] = {false, false};

  const auto close_block = [&] {
    if (current && declared != seen) {
      throw ParseError(src, header_line,
                       "declared total " + std::to_string(declared) + " but cells sum to " +
                           std::to_string(seen));
    }
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (line.front() == '#') {
      close_block();
      std::istringstream hs(line);
      std::string tag_role, role_str, tag_total, total_str, extra;
      hs >> tag_role >> role_str >> tag_total >> total_str;
      const auto role = parse_role(role_str);
      std::uint64_t total = 0;
      if (tag_role != "#role" || tag_total != "total" || !role || !parse_u64(total_str, total) ||
          (hs >> extra)) {
        throw ParseError(src, line_no, "malformed header, expected '#role <subj|obj> total <T>'");
      }
      if (have_role[static_cast<int>(*role)]) {
        throw ParseError(src, line_no, "duplicate block for role " + role_str);
      }
      have_role[static_cast<int>(*role)] = true;
      current = role;
      declared = total;
      seen = 0;
      header_line = line_no;
      continue;
    }

    if (!current) throw ParseError(src, line_no, "count line before any '#role' header");
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError(src, line_no, "expected noun<TAB>verb<TAB>count");
    }
    const std::string_view l = line;
    const auto noun = l.substr(0, t1);
    const auto verb = l.substr(t1 + 1, t2 - t1 - 1);
    std::uint64_t n = 0;
    if (noun.empty() || verb.empty() || !parse_u64(l.substr(t2 + 1), n) || n == 0) {
      throw ParseError(src, line_no, "malformed count line");
    }
    if (table.joint(*current, noun, verb) != 0) {
      throw ParseError(src, line_no, "duplicate cell (" + std::string(noun) + ", " +
                                         std::string(verb) + ")");
    }
    table.add(*current, noun, verb, n);
    seen += n;
  }
  close_block();
  return table;
}

}  // namespace svo
