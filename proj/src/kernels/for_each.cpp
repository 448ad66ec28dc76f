#include <exception>
#include <limits>

#include "svo/kernels.hpp"

namespace svo::kernels {

void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

void for_each_index_parallel(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr error;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(svo_for_each_error)
      {
        if (static_cast<std::size_t>(i) < error_index) {
          error_index = static_cast<std::size_t>(i);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec) {
  if (exec == Execution::Parallel) {
    for_each_index_parallel(n, body);
  } else {
    for_each_index_serial(n, body);
  }
}

}  // namespace svo::kernels
