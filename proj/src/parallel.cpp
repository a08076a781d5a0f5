#include "lch/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace lch {

int thread_count() {
  static const int count = [] {
    const int omp_default = omp_get_max_threads();
    if (const char* env = std::getenv("LCH_THREADS")) {
      try {
        const int v = std::stoi(env);
        if (v >= 1) return v;
      } catch (...) {
      }
    }
    return omp_default;
  }();
  return count;
}

}  // namespace lch
