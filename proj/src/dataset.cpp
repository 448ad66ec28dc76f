#include "svo/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>

#include "svo/error.hpp"

namespace svo {

namespace {

void split_ws(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back(line.substr(start, i - start));
  }
}

// Field order inside `columns`: annotator, s1, v1, o1, s2, v2, o2, score.
constexpr std::array<std::string_view, 8> kCanonical = {"annotator", "subj1", "verb1", "obj1",
                                                        "subj2",     "verb2", "obj2",  "score"};
constexpr std::array<std::string_view, 8> kNative = {"participant", "subject", "verb",   "object",
                                                     "subject",     "landmark", "object", "input"};

std::optional<std::size_t> column(const std::vector<std::string>& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace

std::vector<EvalItem> load_dataset(std::istream& in, std::string_view source,
                                   const DatasetOptions& options) {
  const std::string src(source);
  std::vector<EvalItem> items;
  std::vector<std::string_view> tokens;
  std::vector<std::string> header;
  std::array<std::size_t, 8> columns{};
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    split_ws(line, tokens);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (header.empty()) {
      for (auto t : tokens) header.push_back(to_lower(t));
      const auto& layout = column(header, "annotator") ? kCanonical : kNative;
      for (std::size_t f = 0; f < layout.size(); ++f) {
        const auto c = column(header, layout[f]);
        if (!c) {
          throw ParseError(src, line_no,
                           "header lacks column '" + std::string(layout[f]) +
                               "'; expected 'annotator subj1 verb1 obj1 subj2 verb2 obj2 score' "
                               "or 'participant verb subject object landmark input'");
        }
        columns[f] = *c;
      }
      continue;
    }

    if (tokens.size() != header.size()) {
      throw ParseError(src, line_no,
                       "expected " + std::to_string(header.size()) + " columns, found " +
                           std::to_string(tokens.size()));
    }
    const auto field = [&](std::size_t f) { return tokens[columns[f]]; };
    double score = 0.0;
    const auto s = field(7);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), score);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(score)) {
      throw ParseError(src, line_no, "unparseable score '" + std::string(s) + "'");
    }
    if (score < options.min_score || score > options.max_score) {
      throw ParseError(src, line_no,
                       "score " + std::string(s) + " outside [" + std::to_string(options.min_score) +
                           ", " + std::to_string(options.max_score) + "]");
    }
    items.push_back({std::string(field(0)), make_triplet(field(1), field(2), field(3)),
                     make_triplet(field(4), field(5), field(6)), score});
  }
  return items;
}

void write_dataset(std::ostream& out, const std::vector<EvalItem>& items) {
  out << "annotator\tsubj1\tverb1\tobj1\tsubj2\tverb2\tobj2\tscore\n";
  for (const auto& it : items) {
    out << it.annotator << '\t' << it.left.subject << '\t' << it.left.verb << '\t'
        << it.left.object << '\t' << it.right.subject << '\t' << it.right.verb << '\t'
        << it.right.object << '\t' << it.human_score << '\n';
  }
}

}  // namespace svo
