#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lch {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Error hierarchy. Everything thrown by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyBody : Error { using Error::Error; };
struct DegenerateBody : Error { using Error::Error; };
struct TopologyError : Error { using Error::Error; };
struct NonCompact : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };
struct GenerationError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };

// Clamp to [lo, hi] after allowing a small overshoot; larger overshoot is a bug upstream.
double clamp_domain(double x, double lo, double hi, double tol = 1e-12);
// Silent clamps for geometric quantities that are mathematically in range.
inline double safe_acos(double x) { return std::acos(x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x)); }
inline double safe_asin(double x) { return std::asin(x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x)); }
inline double safe_sqrt(double x) { return std::sqrt(x < 0.0 ? 0.0 : x); }

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace lch
