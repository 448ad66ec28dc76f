#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace svo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Everything a subcommand may read. Flags override the `--config` file,
// which overrides these defaults.
struct RunConfig {
  std::vector<std::string> corpus;
  std::string pairs;
  std::string counts;
  std::string vocabulary;
  std::string embeddings;
  std::string dataset;
  std::string lemma_map;
  std::string output;
  std::string vocabulary_output;

  std::uint64_t min_verb_count = 50;
  std::uint64_t min_noun_count = 50;
  std::vector<std::string> subject_labels{"nsubj", "nsubjpass"};
  std::vector<std::string> object_labels{"dobj", "iobj", "nmod", "xcomp"};
  std::vector<std::string> noun_pos{"NOUN", "PROPN", "PRON"};
  std::vector<std::string> verb_pos{"VERB"};

  std::string log_base = "e";
  std::string oov = "strict";
  std::vector<std::string> methods{"concat",         "coord-mult",         "mult-score",
                                   "w2v-sum",        "w2v-all-concat",     "w2v-all-coord-mult",
                                   "w2v-all-mult-score"};
  std::vector<std::string> aggregations{"averaged", "non-averaged"};
  std::string format = "tsv";
  double min_score = 1.0;
  double max_score = 7.0;
  int threads = 0;

  // dump-vector / similarity
  std::string kind = "coord-mult";
  std::string weighting = "ppmi";
  std::vector<std::string> left;
  std::vector<std::string> right;
};

// Runs the `svo` command line. Reports go to `out`, usage errors to `err`,
// data-level diagnostics to the diagnostics logger.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svo::cli
