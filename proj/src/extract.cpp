#include "svo/extract.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "svo/error.hpp"
#include "svo/kernels.hpp"

namespace svo {

std::string_view role_name(Role role) { return role == Role::Subject ? "subj" : "obj"; }

std::optional<Role> parse_role(std::string_view name) {
  if (name == "subj") return Role::Subject;
  if (name == "obj") return Role::Object;
  return std::nullopt;
}

std::size_t DepPairHash::operator()(const DepPair& p) const noexcept {
  const std::hash<std::string_view> h;
  std::size_t seed = h(p.noun);
  seed ^= h(p.verb) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed ^ static_cast<std::size_t>(p.role);
}

ExtractionConfig ExtractionConfig::defaults() {
  ExtractionConfig cfg;
  cfg.subject_labels = {"nsubj", "nsubjpass"};
  cfg.object_labels = {"dobj", "iobj", "nmod", "xcomp"};
  cfg.noun_pos = {"NOUN", "PROPN", "PRON"};
  cfg.verb_pos = {"VERB"};
  return cfg;
}

void ExtractionConfig::validate() const {
  for (const auto& label : subject_labels) {
    if (object_labels.contains(label)) {
      throw std::invalid_argument("dependency label '" + label +
                                  "' is configured as both subject and object");
    }
  }
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string lemma_of(const TokenRecord& token) {
  return to_lower(token.lemma == "_" ? token.form : token.lemma);
}

std::vector<DepPair> extract_pairs(const Sentence& sentence, const ExtractionConfig& cfg) {
  std::vector<DepPair> pairs;
  if (sentence.empty()) return pairs;

  int max_index = 0;
  for (const auto& tok : sentence) max_index = std::max(max_index, tok.index);
  std::vector<int> position(static_cast<std::size_t>(max_index) + 1, -1);
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    position[static_cast<std::size_t>(sentence[i].index)] = static_cast<int>(i);
  }

  for (const auto& tok : sentence) {
    if (tok.head <= 0 || tok.head > max_index) continue;
    const int head_pos = position[static_cast<std::size_t>(tok.head)];
    if (head_pos < 0) continue;
    const auto& head = sentence[static_cast<std::size_t>(head_pos)];
    if (!cfg.noun_pos.contains(tok.upos) || !cfg.verb_pos.contains(head.upos)) continue;

    Role role;
    if (cfg.subject_labels.contains(tok.deprel)) {
      role = Role::Subject;
    } else if (cfg.object_labels.contains(tok.deprel)) {
      role = Role::Object;
    } else {
      continue;
    }
    auto noun = lemma_of(tok);
    auto verb = lemma_of(head);
    if (noun.empty() || verb.empty()) continue;
    pairs.push_back({role, std::move(noun), std::move(verb)});
  }
  return pairs;
}

void PairTally::add(const DepPair& pair, std::uint64_t n) {
  if (n == 0) return;
  counts_[pair] += n;
}

void PairTally::add(Role role, std::string_view noun, std::string_view verb, std::uint64_t n) {
  add(DepPair{role, std::string(noun), std::string(verb)}, n);
}

void PairTally::merge(const PairTally& other) {
  for (const auto& [pair, n] : other.counts_) counts_[pair] += n;
}

std::uint64_t PairTally::count(const DepPair& pair) const {
  const auto it = counts_.find(pair);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t PairTally::total() const {
  std::uint64_t sum = 0;
  for (const auto& [pair, n] : counts_) sum += n;
  return sum;
}

std::vector<std::pair<DepPair, std::uint64_t>> PairTally::sorted() const {
  std::vector<std::pair<DepPair, std::uint64_t>> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

PairTally tally_corpus(std::istream& in, const ExtractionConfig& cfg, std::string_view source,
                       Execution exec, std::size_t batch_sentences) {
  cfg.validate();
  if (batch_sentences == 0) batch_sentences = 1;
  PairTally tally;
  SentenceSplitter splitter(in);
  std::vector<RawSentence> batch;
  batch.reserve(batch_sentences);
  RawSentence raw;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_sentences && (more = splitter.next(raw))) {
      batch.push_back(std::move(raw));
    }
    if (!batch.empty()) tally.merge(kernels::tally_sentences(batch, cfg, source, exec));
  }
  return tally;
}

void write_pair_file(std::ostream& out, const PairTally& tally) {
  for (const auto& [pair, n] : tally.sorted()) {
    out << role_name(pair.role) << '\t' << pair.noun << '\t' << pair.verb << '\t' << n << '\n';
  }
}

PairTally read_pair_file(std::istream& in, std::string_view source) {
  PairTally tally;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view rest = line;
    for (std::size_t tab; (tab = rest.find('\t')) != std::string_view::npos;) {
      cols.push_back(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    cols.push_back(rest);
    if (cols.size() != 4) {
      throw ParseError(std::string(source), line_no, "expected role, noun, verb, count");
    }
    const auto role = parse_role(cols[0]);
    if (!role) {
      throw ParseError(std::string(source), line_no, "unknown role '" + std::string(cols[0]) + "'");
    }
    if (cols[1].empty() || cols[2].empty()) {
      throw ParseError(std::string(source), line_no, "empty noun or verb");
    }
    std::uint64_t n = 0;
    const auto* end = cols[3].data() + cols[3].size();
    const auto [ptr, ec] = std::from_chars(cols[3].data(), end, n);
    if (ec != std::errc() || ptr != end || n == 0) {
      throw ParseError(std::string(source), line_no, "invalid count '" + std::string(cols[3]) + "'");
    }
    tally.add(*role, cols[1], cols[2], n);
  }
  return tally;
}

}  // namespace svo
