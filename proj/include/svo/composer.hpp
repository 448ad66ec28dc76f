#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "svo/embeddings.hpp"
#include "svo/execution.hpp"
#include "svo/extract.hpp"
#include "svo/lemma_map.hpp"
#include "svo/ppmi.hpp"
#include "svo/sparse.hpp"
#include "svo/vocabulary.hpp"

namespace svo {

struct Triplet {
  std::string subject;
  std::string verb;
  std::string object;

  auto operator<=>(const Triplet&) const = default;
};

// Lowercases; throws std::invalid_argument on an empty word.
Triplet make_triplet(std::string_view subject, std::string_view verb, std::string_view object);
std::string to_string(const Triplet& t);

// How a pair vector weights noun k against the verb: role-matched PPMI
// (the factorized model) or embedding cosine (the w2v-all baseline).
enum class Weighting { Ppmi, NvSim };

enum class Method {
  Concat,
  CoordMult,
  MultScore,
  W2vSum,
  W2vAllConcat,
  W2vAllCoordMult,
  W2vAllMultScore,
};

inline constexpr std::array<Method, 7> kAllMethods = {
    Method::Concat,       Method::CoordMult,       Method::MultScore,      Method::W2vSum,
    Method::W2vAllConcat, Method::W2vAllCoordMult, Method::W2vAllMultScore,
};

// CLI / report names: concat, coord-mult, mult-score, w2v-sum, w2v-all-concat, ...
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

enum class Combination { Concat, CoordMult, MultScore };

// The (s,v) or (v,o) vector over the vocabulary's noun coordinates.
struct PairVector {
  const Vocabulary* noun_space = nullptr;
  Role side = Role::Subject;
  Weighting weighting = Weighting::Ppmi;
  SparseVector entries;
};

// [u_sv ; u_vo], length 2|N|; object-side coordinates are offset by |N|.
struct ConcatVector {
  const Vocabulary* noun_space = nullptr;
  SparseVector entries;
};

struct CoordMultVector {
  const Vocabulary* noun_space = nullptr;
  SparseVector entries;
};

struct PairTuple {
  PairVector subject_side;
  PairVector object_side;
};

using SvoRepresentation = std::variant<ConcatVector, CoordMultVector, PairTuple>;

// Throw SpaceMismatchError when the operands were built over different vocabularies.
ConcatVector compose_concat(const PairVector& u_sv, const PairVector& u_vo);
CoordMultVector compose_coord_mult(const PairVector& u_sv, const PairVector& u_vo);
SvoRepresentation compose(const PairVector& u_sv, const PairVector& u_vo, Combination how);

// Cosine for Concat/CoordMult, product of component cosines for PairTuple.
// Sets *degenerate when a zero vector forced a 0.
double representation_similarity(const SvoRepresentation& a, const SvoRepresentation& b,
                                 bool* degenerate = nullptr);

// Word-vector sum s + v + o.
std::vector<double> baseline_w2v_sum(const Triplet& t, const EmbeddingTable& table,
                                     OovPolicy oov = OovPolicy::Strict);

// Everything a method needs to score one triplet.
struct TripletFeatures {
  PairVector subject_side;
  PairVector object_side;
  SparseVector coord_mult;     // CoordMult methods only
  std::vector<double> summed;  // W2vSum only
  double summed_norm = 0.0;
};

// Scores two feature sets under `method`. Concat uses the two halves
// directly (dot = dot_sv + dot_vo, norm^2 = norm_sv^2 + norm_vo^2).
double score_features(const TripletFeatures& a, const TripletFeatures& b, Method method,
                      bool* degenerate = nullptr);

struct ComposerOptions {
  OovPolicy oov = OovPolicy::Strict;
  const LemmaMap* lemmas = nullptr;
  // Inner per-noun loops; keep Serial when the caller already parallelises
  // over triplets.
  Execution kernel_execution = Execution::Serial;
};

// Binds vocabulary, PPMI statistics and embeddings. Every referenced object
// must outlive the composer. All member functions are const and thread-safe.
class Composer {
 public:
  Composer(const Vocabulary& vocab, const PpmiModel& ppmi, const EmbeddingTable& embeddings,
           ComposerOptions options = {});

  // entry[k] = assoc(n_k, verb) * cos(n_k, noun); coordinates with assoc = 0
  // are left out. Throws UnknownVerbError for a PPMI vector over a verb
  // outside the vocabulary, OovError for unresolvable words under Strict.
  PairVector pair_vector(Role side, std::string_view noun, std::string_view verb,
                         Weighting weighting) const;

  TripletFeatures features(const Triplet& t, Method method) const;

  double similarity(const Triplet& a, const Triplet& b, Method method) const;

  // First word of `t` that `method` cannot resolve, if any.
  std::optional<std::string> missing_word(const Triplet& t, Method method) const;

  const Vocabulary& vocabulary() const { return *vocab_; }
  const EmbeddingTable& embeddings() const { return *embeddings_; }
  const PpmiModel& ppmi() const { return *ppmi_; }
  OovPolicy oov() const { return options_.oov; }

  // Embedding row of noun k, or nullopt when the noun has no vector.
  std::optional<std::size_t> noun_row(std::size_t k) const;

 private:
  std::optional<std::size_t> resolve_embedding(std::string_view word) const;
  std::optional<std::string> resolve_verb(std::string_view verb) const;
  // Cosine of every vocabulary noun against one embedding row.
  void noun_cosines(std::optional<std::size_t> query, std::span<double> out) const;

  const Vocabulary* vocab_;
  const PpmiModel* ppmi_;
  const EmbeddingTable* embeddings_;
  ComposerOptions options_;
  std::vector<std::ptrdiff_t> noun_rows_;  // -1 when missing
};

}  // namespace svo
