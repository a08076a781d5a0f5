#pragma once

namespace lch {

// Thread budget for the OpenMP kernels: LCH_THREADS if set (>= 1), else the OpenMP default.
int thread_count();

}  // namespace lch
