#include "lch/core.hpp"

#include <sstream>

namespace lch {

double clamp_domain(double x, double lo, double hi, double tol) {
  if (x < lo) {
    if (x < lo - tol) {
      std::ostringstream os;
      os << "argument " << x << " below domain [" << lo << ", " << hi << "]";
      throw NumericError(os.str());
    }
    return lo;
  }
  if (x > hi) {
    if (x > hi + tol) {
      std::ostringstream os;
      os << "argument " << x << " above domain [" << lo << ", " << hi << "]";
      throw NumericError(os.str());
    }
    return hi;
  }
  return x;
}

}  // namespace lch
