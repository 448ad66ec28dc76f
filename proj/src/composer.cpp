#include "svo/composer.hpp"

#include <cmath>
#include <stdexcept>

#include "svo/diagnostics.hpp"
#include "svo/error.hpp"
#include "svo/kernels.hpp"

namespace svo {

namespace {

struct MethodInfo {
  Method method;
  std::string_view name;
};

constexpr MethodInfo kMethodInfo[] = {
    {Method::Concat, "concat"},
    {Method::CoordMult, "coord-mult"},
    {Method::MultScore, "mult-score"},
    {Method::W2vSum, "w2v-sum"},
    {Method::W2vAllConcat, "w2v-all-concat"},
    {Method::W2vAllCoordMult, "w2v-all-coord-mult"},
    {Method::W2vAllMultScore, "w2v-all-mult-score"},
};

std::optional<Weighting> weighting_of(Method m) {
  switch (m) {
    case Method::Concat:
    case Method::CoordMult:
    case Method::MultScore:
      return Weighting::Ppmi;
    case Method::W2vAllConcat:
    case Method::W2vAllCoordMult:
    case Method::W2vAllMultScore:
      return Weighting::NvSim;
    case Method::W2vSum:
      break;
  }
  return std::nullopt;
}

Combination combination_of(Method m) {
  switch (m) {
    case Method::Concat:
    case Method::W2vAllConcat:
      return Combination::Concat;
    case Method::CoordMult:
    case Method::W2vAllCoordMult:
      return Combination::CoordMult;
    default:
      return Combination::MultScore;
  }
}

void check_space(const PairVector& a, const PairVector& b) {
  if (a.noun_space == nullptr || a.noun_space != b.noun_space) {
    throw SpaceMismatchError("pair vectors were built over different noun spaces");
  }
}

double concat_cosine(const PairVector& a_sv, const PairVector& a_vo, const PairVector& b_sv,
                     const PairVector& b_vo, bool& degenerate) {
  const double na = squared_norm(a_sv.entries) + squared_norm(a_vo.entries);
  const double nb = squared_norm(b_sv.entries) + squared_norm(b_vo.entries);
  if (na == 0.0 || nb == 0.0) {
    degenerate = true;
    return 0.0;
  }
  const double d = dot(a_sv.entries, b_sv.entries) + dot(a_vo.entries, b_vo.entries);
  return d / (std::sqrt(na) * std::sqrt(nb));
}

double checked_cosine(const SparseVector& a, const SparseVector& b, bool& degenerate) {
  if (is_zero(a) || is_zero(b)) {
    degenerate = true;
    return 0.0;
  }
  return cosine(a, b);
}

}  // namespace

Triplet make_triplet(std::string_view subject, std::string_view verb, std::string_view object) {
  if (subject.empty() || verb.empty() || object.empty()) {
    throw std::invalid_argument("triplet words must be non-empty");
  }
  return {to_lower(subject), to_lower(verb), to_lower(object)};
}

std::string to_string(const Triplet& t) {
  return "(" + t.subject + ", " + t.verb + ", " + t.object + ")";
}

std::string_view method_name(Method m) {
  for (const auto& info : kMethodInfo) {
    if (info.method == m) return info.name;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& info : kMethodInfo) {
    if (info.name == name) return info.method;
  }
  return std::nullopt;
}

ConcatVector compose_concat(const PairVector& u_sv, const PairVector& u_vo) {
  check_space(u_sv, u_vo);
  const auto offset = static_cast<std::uint32_t>(u_sv.noun_space->noun_count());
  ConcatVector out{u_sv.noun_space, u_sv.entries};
  for (std::size_t i = 0; i < u_vo.entries.nnz(); ++i) {
    out.entries.index.push_back(u_vo.entries.index[i] + offset);
    out.entries.value.push_back(u_vo.entries.value[i]);
  }
  return out;
}

CoordMultVector compose_coord_mult(const PairVector& u_sv, const PairVector& u_vo) {
  check_space(u_sv, u_vo);
  return {u_sv.noun_space, hadamard(u_sv.entries, u_vo.entries)};
}

SvoRepresentation compose(const PairVector& u_sv, const PairVector& u_vo, Combination how) {
  switch (how) {
    case Combination::Concat:
      return compose_concat(u_sv, u_vo);
    case Combination::CoordMult:
      return compose_coord_mult(u_sv, u_vo);
    case Combination::MultScore:
      check_space(u_sv, u_vo);
      return PairTuple{u_sv, u_vo};
  }
  throw std::invalid_argument("unknown combination");
}

double representation_similarity(const SvoRepresentation& a, const SvoRepresentation& b,
                                 bool* degenerate) {
  if (a.index() != b.index()) {
    throw std::invalid_argument("cannot compare representations of different kinds");
  }
  bool zero = false;
  double result = 0.0;
  const auto same_space = [](const Vocabulary* x, const Vocabulary* y) {
    if (x != y) throw SpaceMismatchError("representations were built over different noun spaces");
  };
  if (const auto* ca = std::get_if<ConcatVector>(&a)) {
    const auto& cb = std::get<ConcatVector>(b);
    same_space(ca->noun_space, cb.noun_space);
    result = checked_cosine(ca->entries, cb.entries, zero);
  } else if (const auto* ma = std::get_if<CoordMultVector>(&a)) {
    const auto& mb = std::get<CoordMultVector>(b);
    same_space(ma->noun_space, mb.noun_space);
    result = checked_cosine(ma->entries, mb.entries, zero);
  } else {
    const auto& ta = std::get<PairTuple>(a);
    const auto& tb = std::get<PairTuple>(b);
    same_space(ta.subject_side.noun_space, tb.subject_side.noun_space);
    const double c_sv = checked_cosine(ta.subject_side.entries, tb.subject_side.entries, zero);
    const double c_vo = checked_cosine(ta.object_side.entries, tb.object_side.entries, zero);
    result = c_sv * c_vo;
  }
  if (degenerate) *degenerate = zero;
  return result;
}

std::vector<double> baseline_w2v_sum(const Triplet& t, const EmbeddingTable& table, OovPolicy oov) {
  std::vector<double> sum(table.dimension(), 0.0);
  for (const std::string* w : {&t.subject, &t.verb, &t.object}) {
    const auto row = table.find(*w);
    if (!row) {
      if (oov == OovPolicy::Strict) throw OovError(*w, "no embedding");
      warn("no embedding for '" + *w + "', treated as a zero vector");
      continue;
    }
    const auto v = table.row(*row);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  return sum;
}

double score_features(const TripletFeatures& a, const TripletFeatures& b, Method method,
                      bool* degenerate) {
  bool zero = false;
  double result = 0.0;
  if (method == Method::W2vSum) {
    if (a.summed_norm == 0.0 || b.summed_norm == 0.0) {
      zero = true;
    } else {
      result = cosine(a.summed, a.summed_norm, b.summed, b.summed_norm);
    }
  } else {
    switch (combination_of(method)) {
      case Combination::Concat:
        result = concat_cosine(a.subject_side, a.object_side, b.subject_side, b.object_side, zero);
        break;
      case Combination::CoordMult:
        result = checked_cosine(a.coord_mult, b.coord_mult, zero);
        break;
      case Combination::MultScore: {
        const double c_sv = checked_cosine(a.subject_side.entries, b.subject_side.entries, zero);
        const double c_vo = checked_cosine(a.object_side.entries, b.object_side.entries, zero);
        result = c_sv * c_vo;
        break;
      }
    }
  }
  if (degenerate) *degenerate = zero;
  return result;
}

Composer::Composer(const Vocabulary& vocab, const PpmiModel& ppmi, const EmbeddingTable& embeddings,
                   ComposerOptions options)
    : vocab_(&vocab), ppmi_(&ppmi), embeddings_(&embeddings), options_(options) {
  noun_rows_.reserve(vocab.noun_count());
  std::size_t missing = 0;
  for (const auto& noun : vocab.nouns()) {
    const auto row = embeddings.find(noun);
    noun_rows_.push_back(row ? static_cast<std::ptrdiff_t>(*row) : -1);
    if (!row) ++missing;
  }
  if (missing > 0) {
    warn(std::to_string(missing) + " of " + std::to_string(vocab.noun_count()) +
         " vocabulary nouns have no embedding; their similarities are 0");
  }
}

std::optional<std::size_t> Composer::noun_row(std::size_t k) const {
  const auto r = noun_rows_.at(k);
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::optional<std::size_t> Composer::resolve_embedding(std::string_view word) const {
  if (auto row = embeddings_->find(word)) return row;
  if (options_.lemmas) {
    if (const auto lemma = options_.lemmas->lemma_of(word)) return embeddings_->find(*lemma);
  }
  return std::nullopt;
}

std::optional<std::string> Composer::resolve_verb(std::string_view verb) const {
  if (vocab_->contains_verb(verb)) return std::string(verb);
  if (options_.lemmas) {
    if (const auto lemma = options_.lemmas->lemma_of(verb); lemma && vocab_->contains_verb(*lemma)) {
      return std::string(*lemma);
    }
  }
  return std::nullopt;
}

void Composer::noun_cosines(std::optional<std::size_t> query, std::span<double> out) const {
  if (!query) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  kernels::row_cosines(*embeddings_, noun_rows_, embeddings_->row(*query),
                       embeddings_->norm(*query), out, options_.kernel_execution);
}

PairVector Composer::pair_vector(Role side, std::string_view noun, std::string_view verb,
                                 Weighting weighting) const {
  PairVector out{vocab_, side, weighting, {}};

  const auto query = resolve_embedding(noun);
  if (!query) {
    if (options_.oov == OovPolicy::Strict) throw OovError(std::string(noun), "no embedding");
    warn("no embedding for '" + std::string(noun) + "', its similarities are taken as 0");
  }

  if (weighting == Weighting::Ppmi) {
    const auto resolved = resolve_verb(verb);
    if (!resolved) throw UnknownVerbError(std::string(verb));
    if (ppmi_->counts().total(side) == 0) {
      throw EmptyModelError("no " + std::string(role_name(side)) + " observations to weight with");
    }
    for (const auto& [n, assoc] : ppmi_->column(side, *resolved)) {
      const auto k = vocab_->index_of(n);
      if (!k) continue;
      double sim = 0.0;
      if (query && noun_rows_[*k] >= 0) {
        const auto r = static_cast<std::size_t>(noun_rows_[*k]);
        sim = cosine(embeddings_->row(r), embeddings_->norm(r), embeddings_->row(*query),
                     embeddings_->norm(*query));
      }
      out.entries.index.push_back(static_cast<std::uint32_t>(*k));
      out.entries.value.push_back(assoc * sim);
    }
    return out;
  }

  const auto verb_row = resolve_embedding(verb);
  if (!verb_row) {
    if (options_.oov == OovPolicy::Strict) throw OovError(std::string(verb), "no embedding");
    warn("no embedding for '" + std::string(verb) + "', its similarities are taken as 0");
    return out;
  }
  const std::size_t n = vocab_->noun_count();
  std::vector<double> assoc(n), sim(n);
  noun_cosines(verb_row, assoc);
  noun_cosines(query, sim);
  for (std::size_t k = 0; k < n; ++k) {
    if (assoc[k] == 0.0) continue;
    out.entries.index.push_back(static_cast<std::uint32_t>(k));
    out.entries.value.push_back(assoc[k] * sim[k]);
  }
  return out;
}

TripletFeatures Composer::features(const Triplet& t, Method method) const {
  TripletFeatures f;
  const auto weighting = weighting_of(method);
  if (!weighting) {
    Triplet resolved = t;
    for (std::string* w : {&resolved.subject, &resolved.verb, &resolved.object}) {
      if (const auto row = resolve_embedding(*w)) *w = embeddings_->word(*row);
    }
    f.summed = baseline_w2v_sum(resolved, *embeddings_, options_.oov);
    f.summed_norm = dense_norm(f.summed);
    return f;
  }
  f.subject_side = pair_vector(Role::Subject, t.subject, t.verb, *weighting);
  f.object_side = pair_vector(Role::Object, t.object, t.verb, *weighting);
  if (combination_of(method) == Combination::CoordMult) {
    f.coord_mult = hadamard(f.subject_side.entries, f.object_side.entries);
  }
  return f;
}

double Composer::similarity(const Triplet& a, const Triplet& b, Method method) const {
  bool degenerate = false;
  const double s = score_features(features(a, method), features(b, method), method, &degenerate);
  if (degenerate) {
    warn(std::string(method_name(method)) + ": zero representation for " + to_string(a) + " or " +
         to_string(b) + ", similarity set to 0");
  }
  return s;
}

std::optional<std::string> Composer::missing_word(const Triplet& t, Method method) const {
  const bool ppmi = weighting_of(method) == Weighting::Ppmi;
  if (!resolve_embedding(t.subject)) return t.subject;
  if (ppmi ? !resolve_verb(t.verb) : !resolve_embedding(t.verb)) return t.verb;
  if (!resolve_embedding(t.object)) return t.object;
  return std::nullopt;
}

}  // namespace svo
