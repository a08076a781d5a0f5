#include <omp.h>

#include <exception>
#include <mutex>

#include "lch/kernels.hpp"
#include "lch/parallel.hpp"

namespace lch::kernels {

namespace serial {
void map_trials(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}
}  // namespace serial

namespace omp {
void map_trials(std::size_t n, const std::function<void(std::size_t)>& body) {
  // Exceptions cannot cross the parallel region; keep the one from the lowest index.
  std::exception_ptr first;
  std::size_t first_index = n;
  std::mutex mu;
  const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (static_cast<std::size_t>(i) < first_index) {
        first_index = static_cast<std::size_t>(i);
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}
}  // namespace omp

}  // namespace lch::kernels
