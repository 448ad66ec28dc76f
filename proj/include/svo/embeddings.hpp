#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace svo {

enum class OovPolicy { Strict, Lenient };

// Dense word vectors of one fixed dimension, stored row-major with cached
// Euclidean norms. Immutable once loaded; concurrent reads are safe.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension) : dim_(dimension) {}

  // Replaces an existing entry (returns false in that case).
  bool insert(std::string_view word, std::span<const double> values);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return words_.size(); }

  std::optional<std::size_t> find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word).has_value(); }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }
  double norm(std::size_t r) const { return norms_[r]; }
  const std::string& word(std::size_t r) const { return words_[r]; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Optional predicate limiting which words are kept while loading.
using WordFilter = std::function<bool(std::string_view)>;

// Text format: optional `<count> <dim>` header, then `word v1 ... vd`.
EmbeddingTable load_embeddings(std::istream& in, std::string_view source = "<embeddings>",
                               const WordFilter& keep = {});
// Transparently gunzips paths ending in ".gz".
EmbeddingTable load_embeddings_file(const std::filesystem::path& path, const WordFilter& keep = {});

// Cosine from precomputed norms; 0 when either norm is 0.
double cosine(std::span<const double> a, double norm_a, std::span<const double> b, double norm_b);
double dense_norm(std::span<const double> v);

// Cosine similarity of two stored words. Under Lenient a missing word logs a
// warning and yields 0; under Strict it throws OovError.
double word_similarity(const EmbeddingTable& table, std::string_view x, std::string_view y,
                       OovPolicy oov = OovPolicy::Strict);

// Noun-noun similarity.
inline double nn_sim(const EmbeddingTable& table, std::string_view x, std::string_view y,
                     OovPolicy oov = OovPolicy::Strict) {
  return word_similarity(table, x, y, oov);
}

// Noun-verb similarity, used by the w2v-all baseline.
inline double nv_sim(const EmbeddingTable& table, std::string_view noun, std::string_view verb,
                     OovPolicy oov = OovPolicy::Strict) {
  return word_similarity(table, noun, verb, oov);
}

}  // namespace svo
