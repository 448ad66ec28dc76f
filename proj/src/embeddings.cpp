#include "svo/embeddings.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "svo/diagnostics.hpp"
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

template <typename T>
bool parse_number(std::string_view s, T& value) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

bool EmbeddingTable::insert(std::string_view word, std::span<const double> values) {
  if (values.size() != dim_) {
    throw std::invalid_argument("embedding for '" + std::string(word) + "' has dimension " +
                                std::to_string(values.size()) + ", table expects " +
                                std::to_string(dim_));
  }
  const double n = dense_norm(values);
  if (const auto it = index_.find(std::string(word)); it != index_.end()) {
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(it->second * dim_));
    norms_[it->second] = n;
    return false;
  }
  index_.emplace(std::string(word), words_.size());
  words_.emplace_back(word);
  data_.insert(data_.end(), values.begin(), values.end());
  norms_.push_back(n);
  return true;
}

std::optional<std::size_t> EmbeddingTable::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingTable load_embeddings(std::istream& in, std::string_view source, const WordFilter& keep) {
  const std::string src(source);
  std::optional<EmbeddingTable> table;
  std::vector<std::string_view> tokens;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    split_ws(line, tokens);
    if (tokens.empty()) continue;

    if (first) {
      first = false;
      std::size_t count = 0, dim = 0;
      if (tokens.size() == 2 && parse_number(tokens[0], count) && parse_number(tokens[1], dim)) {
        if (dim == 0) throw ParseError(src, line_no, "header declares dimension 0");
        table.emplace(dim);
        continue;
      }
    }
    if (tokens.size() < 2) throw ParseError(src, line_no, "expected a word followed by its vector");
    if (!table) table.emplace(tokens.size() - 1);
    if (tokens.size() - 1 != table->dimension()) {
      throw ParseError(src, line_no,
                       "vector has " + std::to_string(tokens.size() - 1) +
                           " components, expected " + std::to_string(table->dimension()));
    }
    if (keep && !keep(tokens[0])) continue;

    values.resize(tokens.size() - 1);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!parse_number(tokens[i], values[i - 1]) || !std::isfinite(values[i - 1])) {
        throw ParseError(src, line_no, "non-numeric component '" + std::string(tokens[i]) + "'");
      }
    }
    if (!table->insert(tokens[0], values)) {
      warn(src + ":" + std::to_string(line_no) + ": duplicate word '" + std::string(tokens[0]) +
           "', keeping the last occurrence");
    }
  }
  if (!table) throw ParseError(src, 0, "no vectors found, dimension cannot be inferred");
  for (std::size_t r = 0; r < table->size(); ++r) {
    if (table->norm(r) == 0.0) {
      warn("word '" + table->word(r) + "' has a zero vector; its similarities are defined as 0");
    }
  }
  return std::move(*table);
}

EmbeddingTable load_embeddings_file(const std::filesystem::path& path, const WordFilter& keep) {
  if (path.extension() == ".gz") {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (gz == nullptr) throw Error("cannot open " + path.string());
    std::string text;
    char buf[1 << 16];
    int got;
    while ((got = gzread(gz, buf, sizeof buf)) > 0) text.append(buf, static_cast<std::size_t>(got));
    const bool failed = got < 0;
    gzclose(gz);
    if (failed) throw Error("cannot decompress " + path.string());
    std::istringstream in(std::move(text));
    return load_embeddings(in, path.string(), keep);
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_embeddings(in, path.string(), keep);
}

double dense_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double cosine(std::span<const double> a, double norm_a, std::span<const double> b, double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * b[i];
  return d / (norm_a * norm_b);
}

double word_similarity(const EmbeddingTable& table, std::string_view x, std::string_view y,
                       OovPolicy oov) {
  const auto rx = table.find(x);
  const auto ry = table.find(y);
  if (!rx || !ry) {
    const std::string missing(rx ? y : x);
    if (oov == OovPolicy::Strict) throw OovError(missing, "no embedding");
    warn("no embedding for '" + missing + "', similarity taken as 0");
    return 0.0;
  }
  return cosine(table.row(*rx), table.norm(*rx), table.row(*ry), table.norm(*ry));
}

}  // namespace svo
