#include <omp.h>

#include "svo/kernels.hpp"

namespace svo::kernels {

PairTally tally_sentences_serial(std::span<const RawSentence> batch, const ExtractionConfig& cfg,
                                 std::string_view source) {
  PairTally tally;
  for (const auto& raw : batch) {
    for (const auto& p : extract_pairs(parse_sentence(raw, source), cfg)) tally.add(p);
  }
  return tally;
}

PairTally tally_sentences_parallel(std::span<const RawSentence> batch, const ExtractionConfig& cfg,
                                   std::string_view source) {
  std::vector<PairTally> shards(static_cast<std::size_t>(omp_get_max_threads()));
  for_each_index_parallel(batch.size(), [&](std::size_t i) {
    auto& shard = shards[static_cast<std::size_t>(omp_get_thread_num())];
    for (const auto& p : extract_pairs(parse_sentence(batch[i], source), cfg)) shard.add(p);
  });
  PairTally tally;
  for (const auto& shard : shards) tally.merge(shard);
  return tally;
}

PairTally tally_sentences(std::span<const RawSentence> batch, const ExtractionConfig& cfg,
                          std::string_view source, Execution exec) {
  return exec == Execution::Parallel ? tally_sentences_parallel(batch, cfg, source)
                                     : tally_sentences_serial(batch, cfg, source);
}

}  // namespace svo::kernels
