#pragma once

#include <functional>
#include <vector>

namespace lch::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

// Adaptive Gauss-Kronrod (31 points) over [a, b]. Throws NumericError when the
// estimated error stays above both 100 * rel_tol * L1 and abs_tol.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-11, unsigned max_depth = 18, double abs_tol = 1e-15);

// Same, split at the given interior breakpoints (sorted, duplicates ignored).
Result integrate(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                 double rel_tol = 1e-11, unsigned max_depth = 18, double abs_tol = 1e-15);

// Fixed-order Gauss-Legendre rule on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

}  // namespace lch::quad
