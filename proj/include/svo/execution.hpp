#pragma once

namespace svo {

// Selects between the OpenMP kernel and its serial reference. Both paths
// perform the same floating-point operations in the same per-element order,
// so their results are bitwise identical.
enum class Execution { Serial, Parallel };

// Thread count used by parallel kernels; 0 leaves the OpenMP default alone.
void set_thread_count(int threads);
int thread_count();

}  // namespace svo
