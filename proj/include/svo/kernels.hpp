#pragma once

// Data-parallel hot loops. Each OpenMP kernel has a serial twin that is kept
// as the reference: tests require bitwise-equal output and the benchmark
// compares their speed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "svo/composer.hpp"
#include "svo/conllu.hpp"
#include "svo/embeddings.hpp"
#include "svo/execution.hpp"
#include "svo/extract.hpp"

namespace svo::kernels {

// Runs body(i) for i in [0, n). If several iterations throw, the exception of
// the lowest index is rethrown after the loop, so errors are deterministic.
void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& body);
void for_each_index_parallel(std::size_t n, const std::function<void(std::size_t)>& body);
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec);

// Parse + extract + count a batch of sentences. The parallel version keeps a
// tally per thread and merges at the end.
PairTally tally_sentences_serial(std::span<const RawSentence> batch, const ExtractionConfig& cfg,
                                 std::string_view source);
PairTally tally_sentences_parallel(std::span<const RawSentence> batch, const ExtractionConfig& cfg,
                                   std::string_view source);
PairTally tally_sentences(std::span<const RawSentence> batch, const ExtractionConfig& cfg,
                          std::string_view source, Execution exec);

// out[k] = cos(table.row(rows[k]), query); rows[k] < 0 or a zero norm gives 0.
void row_cosines_serial(const EmbeddingTable& table, std::span<const std::ptrdiff_t> rows,
                        std::span<const double> query, double query_norm, std::span<double> out);
void row_cosines_parallel(const EmbeddingTable& table, std::span<const std::ptrdiff_t> rows,
                          std::span<const double> query, double query_norm,
                          std::span<double> out);
void row_cosines(const EmbeddingTable& table, std::span<const std::ptrdiff_t> rows,
                 std::span<const double> query, double query_norm, std::span<double> out,
                 Execution exec);

// Scores index pairs into `features`. When `degenerate` is given it receives
// 1 for every pair whose score was forced to 0 by a zero representation.
using IndexPair = std::pair<std::size_t, std::size_t>;
std::vector<double> score_pairs_serial(std::span<const TripletFeatures> features,
                                       std::span<const IndexPair> pairs, Method method,
                                       std::vector<std::uint8_t>* degenerate = nullptr);
std::vector<double> score_pairs_parallel(std::span<const TripletFeatures> features,
                                         std::span<const IndexPair> pairs, Method method,
                                         std::vector<std::uint8_t>* degenerate = nullptr);
std::vector<double> score_pairs(std::span<const TripletFeatures> features,
                                std::span<const IndexPair> pairs, Method method, Execution exec,
                                std::vector<std::uint8_t>* degenerate = nullptr);

}  // namespace svo::kernels
