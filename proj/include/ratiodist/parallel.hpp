#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace ratiodist {

/// Selects the serial reference loop or the OpenMP kernel.
enum class Exec { Serial, Parallel };

/// Number of OpenMP worker threads the parallel kernels will use.
int max_threads();

/// Caps the OpenMP worker count; values < 1 are ignored.
void set_max_threads(int n);

/// Runs body(i) for i in [0, n). Under Exec::Parallel the iterations are
/// spread over OpenMP threads; the first exception thrown by any iteration
/// is rethrown on the calling thread once the loop has finished.
template <typename Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ratiodist
