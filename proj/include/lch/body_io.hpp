#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lch/arc_polygon2.hpp"
#include "lch/ball_polytope3.hpp"

namespace lch {

// Malformed body description; what() names the offending field.
struct FormatError : InvalidParameter {
  using InvalidParameter::InvalidParameter;
};

inline constexpr const char* kBodyFormat = "lch-1";

struct Body3 {
  double lambda = 1.0;
  std::vector<Vec3> centers;
};

struct Body2 {
  double lambda = 1.0;
  double curvature = 0.0;
  std::vector<LambdaDisk2> disks;
};

using BodySpec = std::variant<Body3, Body2>;

BodySpec parse_body(const nlohmann::json& j);
BodySpec read_body(const std::string& path);  // FormatError also for unreadable files
nlohmann::json to_json(const Body3& b);
nlohmann::json to_json(const Body2& b);
void write_body(const std::string& path, const BodySpec& b);

BallPolytope3 build(const Body3& b);
ArcPolygon2 build(const Body2& b);

}  // namespace lch
