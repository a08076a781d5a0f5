#include "lch/body_io.hpp"

#include <fstream>

namespace lch {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(where + "." + name + ": missing");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError(where + ": expected a number");
  return j.get<double>();
}

template <int D>
Eigen::Matrix<double, D, 1> point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != D) throw FormatError(where + ": expected an array of " + std::to_string(D) + " numbers");
  Eigen::Matrix<double, D, 1> p;
  for (int k = 0; k < D; ++k) p[k] = number(j[static_cast<std::size_t>(k)], where + "[" + std::to_string(k) + "]");
  return p;
}

const json& array_field(const json& j, const char* name, const std::string& where) {
  const json& a = field(j, name, where);
  if (!a.is_array() || a.empty()) throw FormatError(where + "." + name + ": expected a nonempty array");
  return a;
}

LambdaDisk2 parse_disk(const json& d, double c, double lambda, const std::string& where) {
  const json& kind = field(d, "kind", where);
  if (!kind.is_string()) throw FormatError(where + ".kind: expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "geodesic") return LambdaDisk2::geodesic(c, lambda, point<2>(field(d, "center", where), where + ".center"));
    if (k == "horo") {
      if (c != -1.0) throw FormatError(where + ".kind: horodisks need curvature -1");
      double offset = 0.0;
      if (d.contains("offset")) offset = number(d["offset"], where + ".offset");
      return LambdaDisk2::horo(lambda, point<2>(field(d, "ideal", where), where + ".ideal"), offset);
    }
    if (k == "equidistant") {
      if (c != -1.0) throw FormatError(where + ".kind: equidistant domains need curvature -1");
      const json& g = field(d, "geodesic", where);
      if (!g.is_array() || g.size() != 2) throw FormatError(where + ".geodesic: expected two points");
      return LambdaDisk2::equidistant(lambda, point<2>(g[0], where + ".geodesic[0]"), point<2>(g[1], where + ".geodesic[1]"));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ".kind: unknown kind '" + k + "'");
}

}  // namespace

BodySpec parse_body(const json& j) {
  const std::string root = "body";
  if (!j.is_object()) throw FormatError(root + ": expected an object");
  if (j.contains("version")) {
    if (!j["version"].is_string() || j["version"].get<std::string>() != kBodyFormat)
      throw FormatError(root + ".version: expected \"" + std::string(kBodyFormat) + "\"");
  }
  const double lambda = number(field(j, "lambda", root), root + ".lambda");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw FormatError(root + ".lambda: must be positive and finite");
  int dim = 0;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw FormatError(root + ".dim: expected 2 or 3");
    dim = j["dim"].get<int>();
    if (dim != 2 && dim != 3) throw FormatError(root + ".dim: expected 2 or 3");
  }
  if (j.contains("disks")) {
    if (dim == 3) throw FormatError(root + ".disks: not allowed with dim 3");
    Body2 b;
    b.lambda = lambda;
    if (j.contains("curvature")) b.curvature = number(j["curvature"], root + ".curvature");
    if (b.curvature != -1.0 && b.curvature != 0.0 && b.curvature != 1.0)
      throw FormatError(root + ".curvature: expected -1, 0 or 1");
    const json& disks = array_field(j, "disks", root);
    for (std::size_t i = 0; i < disks.size(); ++i)
      b.disks.push_back(parse_disk(disks[i], b.curvature, lambda, root + ".disks[" + std::to_string(i) + "]"));
    return b;
  }
  const json& centers = array_field(j, "centers", root);
  if (dim == 0) dim = centers[0].is_array() && centers[0].size() == 2 ? 2 : 3;
  if (dim == 2) {
    Body2 b;
    b.lambda = lambda;
    if (j.contains("curvature") && number(j["curvature"], root + ".curvature") != 0.0)
      throw FormatError(root + ".curvature: the centers shorthand is Euclidean only");
    for (std::size_t i = 0; i < centers.size(); ++i)
      b.disks.push_back(LambdaDisk2::geodesic(0.0, lambda, point<2>(centers[i], root + ".centers[" + std::to_string(i) + "]")));
    return b;
  }
  Body3 b;
  b.lambda = lambda;
  for (std::size_t i = 0; i < centers.size(); ++i)
    b.centers.push_back(point<3>(centers[i], root + ".centers[" + std::to_string(i) + "]"));
  return b;
}

BodySpec read_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return parse_body(j);
}

json to_json(const Body3& b) {
  json j;
  j["version"] = kBodyFormat;
  j["lambda"] = b.lambda;
  j["dim"] = 3;
  j["centers"] = json::array();
  for (const Vec3& c : b.centers) j["centers"].push_back({c.x(), c.y(), c.z()});
  return j;
}

json to_json(const Body2& b) {
  json j;
  j["version"] = kBodyFormat;
  j["lambda"] = b.lambda;
  j["dim"] = 2;
  j["curvature"] = b.curvature;
  j["disks"] = json::array();
  for (const LambdaDisk2& d : b.disks) {
    json e;
    switch (d.kind()) {
      case LambdaDisk2::Kind::Geodesic:
        e["kind"] = "geodesic";
        e["center"] = {d.center().x(), d.center().y()};
        break;
      case LambdaDisk2::Kind::Horo:
        e["kind"] = "horo";
        e["ideal"] = {d.ideal().x(), d.ideal().y()};
        if (d.offset() != 0.0) e["offset"] = d.offset();
        break;
      case LambdaDisk2::Kind::Equidistant:
        e["kind"] = "equidistant";
        e["geodesic"] = {{d.end_a().x(), d.end_a().y()}, {d.end_b().x(), d.end_b().y()}};
        break;
    }
    j["disks"].push_back(e);
  }
  return j;
}

void write_body(const std::string& path, const BodySpec& b) {
  const json j = std::visit([](const auto& x) { return to_json(x); }, b);
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot write");
  out << j.dump(2) << '\n';
}

BallPolytope3 build(const Body3& b) { return BallPolytope3::build(b.lambda, b.centers); }

ArcPolygon2 build(const Body2& b) {
  return ArcPolygon2::build2(ModelSpace{2, b.curvature}, b.lambda, b.disks);
}

}  // namespace lch
