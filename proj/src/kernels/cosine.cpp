#include "svo/kernels.hpp"

namespace svo::kernels {

namespace {

inline double row_cosine(const EmbeddingTable& table, std::ptrdiff_t row,
                         std::span<const double> query, double query_norm) {
  if (row < 0) return 0.0;
  const auto r = static_cast<std::size_t>(row);
  return cosine(table.row(r), table.norm(r), query, query_norm);
}

}  // namespace

void row_cosines_serial(const EmbeddingTable& table, std::span<const std::ptrdiff_t> rows,
                        std::span<const double> query, double query_norm, std::span<double> out) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out[k] = row_cosine(table, rows[k], query, query_norm);
  }
}

void row_cosines_parallel(const EmbeddingTable& table, std::span<const std::ptrdiff_t> rows,
                          std::span<const double> query, double query_norm,
                          std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] =
        row_cosine(table, rows[static_cast<std::size_t>(k)], query, query_norm);
  }
}

void row_cosines(const EmbeddingTable& table, std::span<const std::ptrdiff_t> rows,
                 std::span<const double> query, double query_norm, std::span<double> out,
                 Execution exec) {
  if (exec == Execution::Parallel) {
    row_cosines_parallel(table, rows, query, query_norm, out);
  } else {
    row_cosines_serial(table, rows, query, query_norm, out);
  }
}

}  // namespace svo::kernels
