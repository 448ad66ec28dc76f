#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "svo/composer.hpp"
#include "svo/counts.hpp"
#include "svo/dataset.hpp"
#include "svo/diagnostics.hpp"
#include "svo/embeddings.hpp"
#include "svo/error.hpp"
#include "svo/evaluate.hpp"
#include "svo/execution.hpp"
#include "svo/extract.hpp"
#include "svo/lemma_map.hpp"
#include "svo/ppmi.hpp"
#include "svo/vocabulary.hpp"

namespace svo::cli {

namespace fs = std::filesystem;

namespace {

// Raised for problems with the request itself (exit status 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write " + path);
      stream_ = &file_;
      path_ = path;
    }
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw Error("write failed" + (path_.empty() ? "" : " for " + path_));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

std::vector<fs::path> corpus_files(const std::vector<std::string>& paths) {
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".conllu" || ext == ".conll")) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(p);
    }
  }
  return files;
}

double parse_log_base(const std::string& s) {
  if (s == "e") return std::numbers::e;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !(v > 1.0) || !std::isfinite(v)) {
    throw UsageError("--log-base must be 'e' or a number greater than 1, got '" + s + "'");
  }
  return v;
}

OovPolicy parse_oov(const std::string& s) {
  if (s == "strict") return OovPolicy::Strict;
  if (s == "lenient") return OovPolicy::Lenient;
  throw UsageError("--oov must be 'strict' or 'lenient'");
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> methods;
  for (const auto& n : names) {
    if (n.empty()) continue;
    const auto m = parse_method(n);
    if (!m) throw UsageError("unknown method '" + n + "'");
    methods.push_back(*m);
  }
  if (methods.empty()) throw UsageError("no methods requested");
  return methods;
}

std::vector<Aggregation> parse_aggregations(const std::vector<std::string>& names) {
  std::vector<Aggregation> out;
  for (const auto& n : names) {
    if (n.empty()) continue;
    const auto a = parse_aggregation(n);
    if (!a) throw UsageError("unknown aggregation '" + n + "'");
    out.push_back(*a);
  }
  if (out.empty()) throw UsageError("no aggregations requested");
  return out;
}

LabelSet to_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

Triplet triplet_arg(const std::vector<std::string>& words, const char* flag) {
  if (words.size() != 3) throw UsageError(std::string(flag) + " takes three words: subject verb object");
  return make_triplet(words[0], words[1], words[2]);
}

// Counts, vocabulary, embeddings and the composer over them. Not movable:
// the composer points into the other members.
class Model {
 public:
  Model(const RunConfig& cfg, const std::unordered_set<std::string>& extra_words) {
    {
      auto in = open_input(cfg.vocabulary);
      vocab_ = load_vocabulary(in, cfg.vocabulary);
    }
    {
      auto in = open_input(cfg.counts);
      counts_ = load_counts(in, cfg.counts);
    }
    check_counts_within_vocabulary();
    if (!cfg.lemma_map.empty()) {
      auto in = open_input(cfg.lemma_map);
      lemmas_ = load_lemma_map(in, cfg.lemma_map);
    }

    std::unordered_set<std::string> wanted(extra_words);
    for (const auto& n : vocab_.nouns()) wanted.insert(n);
    if (lemmas_) {
      for (const auto& w : extra_words) {
        if (const auto l = lemmas_->lemma_of(w)) wanted.emplace(*l);
      }
    }
    embeddings_ = load_embeddings_file(
        cfg.embeddings, [&](std::string_view w) { return wanted.contains(std::string(w)); });

    ppmi_ = std::make_unique<PpmiModel>(counts_, parse_log_base(cfg.log_base));
    ComposerOptions options;
    options.oov = parse_oov(cfg.oov);
    options.lemmas = lemmas_ ? &*lemmas_ : nullptr;
    composer_ = std::make_unique<Composer>(vocab_, *ppmi_, embeddings_, options);
  }
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  const Composer& composer() const { return *composer_; }
  const Vocabulary& vocabulary() const { return vocab_; }

 private:
  void check_counts_within_vocabulary() const {
    for (Role role : kRoles) {
      for (const auto& [verb, column] : counts_.role(role).by_verb) {
        if (!vocab_.contains_verb(verb)) {
          throw Error("counts mention verb '" + verb + "' which is not in the vocabulary");
        }
        for (const auto& [noun, n] : column) {
          if (!vocab_.contains_noun(noun)) {
            throw Error("counts mention noun '" + noun + "' which is not in the vocabulary");
          }
        }
      }
    }
  }

  Vocabulary vocab_;
  PairCountTable counts_;
  std::optional<LemmaMap> lemmas_;
  EmbeddingTable embeddings_;
  std::unique_ptr<PpmiModel> ppmi_;
  std::unique_ptr<Composer> composer_;
};

void insert_words(std::unordered_set<std::string>& words, const Triplet& t) {
  words.insert(t.subject);
  words.insert(t.verb);
  words.insert(t.object);
}

void cmd_extract(const RunConfig& cfg, std::ostream& out) {
  ExtractionConfig ext;
  ext.subject_labels = to_set(cfg.subject_labels);
  ext.object_labels = to_set(cfg.object_labels);
  ext.noun_pos = to_set(cfg.noun_pos);
  ext.verb_pos = to_set(cfg.verb_pos);
  try {
    ext.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  PairTally tally;
  for (const auto& path : corpus_files(cfg.corpus)) {
    auto in = open_input(path.string());
    tally.merge(tally_corpus(in, ext, path.string(), Execution::Parallel));
  }
  if (tally.empty()) warn("corpus yielded no (noun, verb) pairs");

  const auto vocab = build_vocabulary(tally, cfg.min_verb_count, cfg.min_noun_count);
  const auto kept = restrict_to(tally, vocab);

  Output pairs(cfg.output, out);
  write_pair_file(pairs.stream(), kept);
  pairs.close();
  Output vocab_out(cfg.vocabulary_output, out);
  save_vocabulary(vocab_out.stream(), vocab);
  vocab_out.close();
}

void cmd_stats(const RunConfig& cfg, std::ostream& out) {
  PairTally tally;
  {
    auto in = open_input(cfg.pairs);
    tally = read_pair_file(in, cfg.pairs);
  }
  Vocabulary vocab;
  {
    auto in = open_input(cfg.vocabulary);
    vocab = load_vocabulary(in, cfg.vocabulary);
  }
  for (const auto& [pair, n] : tally.sorted()) {
    if (!vocab.contains_noun(pair.noun)) {
      throw Error(cfg.pairs + ": noun '" + pair.noun + "' is not in the vocabulary");
    }
    if (!vocab.contains_verb(pair.verb)) {
      throw Error(cfg.pairs + ": verb '" + pair.verb + "' is not in the vocabulary");
    }
  }
  const auto table = accumulate_counts(tally);
  Output counts(cfg.output, out);
  save_counts(counts.stream(), table);
  counts.close();
}

void cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const auto methods = parse_methods(cfg.methods);
  const auto aggregations = parse_aggregations(cfg.aggregations);
  if (cfg.format != "tsv" && cfg.format != "table") throw UsageError("--format must be tsv or table");
  const auto oov = parse_oov(cfg.oov);
  parse_log_base(cfg.log_base);

  std::vector<EvalItem> items;
  {
    auto in = open_input(cfg.dataset);
    items = load_dataset(in, cfg.dataset, {cfg.min_score, cfg.max_score});
  }
  std::unordered_set<std::string> words;
  for (const auto& it : items) {
    insert_words(words, it.left);
    insert_words(words, it.right);
  }
  const Model model(cfg, words);

  std::vector<EvalReport> reports;
  for (const auto m : methods) {
    MethodScorer scorer(model.composer(), m);
    const auto scored = score_dataset(items, scorer, oov, Execution::Parallel);
    for (const auto a : aggregations) reports.push_back(aggregate(scored, a));
  }

  Output report(cfg.output, out);
  if (cfg.format == "table") {
    report.stream() << format_report_table(reports);
  } else {
    for (const auto& r : reports) report.stream() << format_report_line(r) << '\n';
  }
  report.close();
}

void write_entries(std::ostream& out, const Vocabulary& vocab, const SparseVector& v,
                   std::size_t offset) {
  for (std::size_t i = 0; i < v.nnz(); ++i) {
    out << vocab.nouns()[v.index[i] - offset] << '\t' << fmt::format("{:.17g}", v.value[i]) << '\n';
  }
}

void cmd_dump_vector(const RunConfig& cfg, std::ostream& out) {
  const auto t = triplet_arg(cfg.left, "--triplet");
  Weighting weighting;
  if (cfg.weighting == "ppmi") {
    weighting = Weighting::Ppmi;
  } else if (cfg.weighting == "nvsim") {
    weighting = Weighting::NvSim;
  } else {
    throw UsageError("--weighting must be ppmi or nvsim");
  }
  if (cfg.kind != "sv" && cfg.kind != "vo" && cfg.kind != "concat" && cfg.kind != "coord-mult") {
    throw UsageError("--kind must be sv, vo, concat or coord-mult");
  }
  std::unordered_set<std::string> words;
  insert_words(words, t);
  const Model model(cfg, words);
  const auto& c = model.composer();
  const auto& vocab = model.vocabulary();

  Output dump(cfg.output, out);
  auto& os = dump.stream();
  if (cfg.kind == "sv") {
    write_entries(os, vocab, c.pair_vector(Role::Subject, t.subject, t.verb, weighting).entries, 0);
  } else if (cfg.kind == "vo") {
    write_entries(os, vocab, c.pair_vector(Role::Object, t.object, t.verb, weighting).entries, 0);
  } else {
    const auto sv = c.pair_vector(Role::Subject, t.subject, t.verb, weighting);
    const auto vo = c.pair_vector(Role::Object, t.object, t.verb, weighting);
    if (cfg.kind == "coord-mult") {
      write_entries(os, vocab, compose_coord_mult(sv, vo).entries, 0);
    } else {
      // Subject half, then object half.
      write_entries(os, vocab, sv.entries, 0);
      write_entries(os, vocab, vo.entries, 0);
    }
  }
  dump.close();
}

void cmd_similarity(const RunConfig& cfg, std::ostream& out) {
  const auto a = triplet_arg(cfg.left, "--left");
  const auto b = triplet_arg(cfg.right, "--right");
  const auto methods = parse_methods(cfg.methods);
  std::unordered_set<std::string> words;
  insert_words(words, a);
  insert_words(words, b);
  const Model model(cfg, words);
  Output result(cfg.output, out);
  for (const auto m : methods) {
    result.stream() << method_name(m) << '\t'
                    << fmt::format("{:.6f}", model.composer().similarity(a, b, m)) << '\n';
  }
  result.close();
}

void add_threads(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
}

void add_model_inputs(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--counts", cfg.counts, "Count artifact written by `stats`")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--vocab", cfg.vocabulary, "Vocabulary file written by `extract`")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--embeddings", cfg.embeddings, "Text word vectors (.gz accepted)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--lemma-map", cfg.lemma_map, "form<TAB>lemma fallback for dataset words")
      ->check(CLI::ExistingFile);
  sub->add_option("--log-base", cfg.log_base, "PPMI logarithm base: e or a number > 1")
      ->capture_default_str();
  sub->add_option("--oov", cfg.oov, "strict | lenient")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Factorized subject-verb-object composition: extract, count, score, evaluate"};
  app.set_config("--config", "", "key=value configuration file (flags take precedence)");
  app.require_subcommand(1);

  auto* extract = app.add_subcommand("extract", "CoNLL-U corpus -> pair file + vocabulary file");
  extract->add_option("--corpus", cfg.corpus, "CoNLL-U files or directories")
      ->required()
      ->check(CLI::ExistingPath);
  extract->add_option("--pairs-out,-o", cfg.output, "Pair file to write")->required();
  extract->add_option("--vocab-out", cfg.vocabulary_output, "Vocabulary file to write")->required();
  extract->add_option("--min-verb-count", cfg.min_verb_count)->capture_default_str();
  extract->add_option("--min-noun-count", cfg.min_noun_count)->capture_default_str();
  extract->add_option("--subject-labels", cfg.subject_labels)->delimiter(',')->capture_default_str();
  extract->add_option("--object-labels", cfg.object_labels)->delimiter(',')->capture_default_str();
  extract->add_option("--noun-pos", cfg.noun_pos)->delimiter(',')->capture_default_str();
  extract->add_option("--verb-pos", cfg.verb_pos)->delimiter(',')->capture_default_str();
  add_threads(extract, cfg);

  auto* stats = app.add_subcommand("stats", "pair file + vocabulary -> count artifact");
  stats->add_option("--pairs", cfg.pairs)->required()->check(CLI::ExistingFile);
  stats->add_option("--vocab", cfg.vocabulary)->required()->check(CLI::ExistingFile);
  stats->add_option("--counts-out,-o", cfg.output, "Count artifact to write")->required();
  add_threads(stats, cfg);

  auto* eval = app.add_subcommand("eval", "Spearman's rho of every method on a dataset");
  add_model_inputs(eval, cfg);
  eval->add_option("--dataset", cfg.dataset)->required()->check(CLI::ExistingFile);
  eval->add_option("--methods", cfg.methods)->delimiter(',')->capture_default_str();
  eval->add_option("--aggregations", cfg.aggregations)->delimiter(',')->capture_default_str();
  eval->add_option("--format", cfg.format, "tsv | table")->capture_default_str();
  eval->add_option("--min-score", cfg.min_score)->capture_default_str();
  eval->add_option("--max-score", cfg.max_score)->capture_default_str();
  eval->add_option("--output,-o", cfg.output, "Report file (default: standard output)");
  add_threads(eval, cfg);

  auto* dump = app.add_subcommand("dump-vector", "Print a pair or composed vector as noun<TAB>value");
  add_model_inputs(dump, cfg);
  dump->add_option("--triplet", cfg.left, "subject verb object")->expected(3)->required();
  dump->add_option("--kind", cfg.kind, "sv | vo | concat | coord-mult")->capture_default_str();
  dump->add_option("--weighting", cfg.weighting, "ppmi | nvsim")->capture_default_str();
  dump->add_option("--output,-o", cfg.output);
  add_threads(dump, cfg);

  auto* sim = app.add_subcommand("similarity", "Score two triplets with each method");
  add_model_inputs(sim, cfg);
  sim->add_option("--left", cfg.left, "subject verb object")->expected(3)->required();
  sim->add_option("--right", cfg.right, "subject verb object")->expected(3)->required();
  sim->add_option("--methods", cfg.methods)->delimiter(',')->capture_default_str();
  sim->add_option("--output,-o", cfg.output);
  add_threads(sim, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_thread_count(cfg.threads);
    if (*extract) {
      cmd_extract(cfg, out);
    } else if (*stats) {
      cmd_stats(cfg, out);
    } else if (*eval) {
      cmd_eval(cfg, out);
    } else if (*dump) {
      cmd_dump_vector(cfg, out);
    } else if (*sim) {
      cmd_similarity(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "svo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "svo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "svo: error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("svo");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace svo::cli
