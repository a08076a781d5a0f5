#include "lch/gauss_bonnet.hpp"

#include <algorithm>
#include <cmath>

namespace lch {

double edge_spherical_image(const EdgeArc& edge, double lambda) {
  if (!(edge.dihedral >= 0.0) || edge.dihedral >= kPi) throw InvalidParameter("edge dihedral angle must lie in [0, pi)");
  return 2.0 * lambda * edge.length * std::tan(0.5 * edge.dihedral);
}

double spherical_polygon_area(std::vector<Vec3> normals) {
  const std::size_t k = normals.size();
  if (k < 3) throw DegenerateBody("spherical polygon needs three vertices");
  Vec3 c = Vec3::Zero();
  for (const Vec3& n : normals) c += n;
  if (c.norm() < 1e-12) throw DegenerateBody("normals are not in convex position");
  c.normalize();
  const Vec3 e1 = (std::abs(c.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY()).cross(c).normalized();
  const Vec3 e2 = c.cross(e1);
  std::sort(normals.begin(), normals.end(), [&](const Vec3& a, const Vec3& b) {
    return std::atan2(a.dot(e2), a.dot(e1)) < std::atan2(b.dot(e2), b.dot(e1));
  });
  for (std::size_t i = 0; i < k; ++i) {
    const Vec3& a = normals[i];
    const Vec3& b = normals[(i + 1) % k];
    const Vec3& d = normals[(i + 2) % k];
    if (a.cross(b).dot(d) <= 0.0) throw DegenerateBody("normals are not in convex position");
  }
  // Fan of triangles from the centroid direction; each by the Van Oosterom-Strackee formula.
  double area = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec3& a = normals[i];
    const Vec3& b = normals[(i + 1) % k];
    const double num = c.dot(a.cross(b));
    const double den = 1.0 + c.dot(a) + a.dot(b) + b.dot(c);
    area += 2.0 * std::atan2(num, den);
  }
  return area;
}

double vertex_spherical_image(const BallPolytope3& k, const Vertex& v) {
  std::vector<Vec3> normals;
  for (int i : v.incident) normals.push_back((v.position - k.centers()[static_cast<std::size_t>(i)]).normalized());
  return spherical_polygon_area(std::move(normals));
}

GBReport gb_total(const BallPolytope3& k) {
  GBReport r;
  const double lam2 = k.lambda() * k.lambda();
  for (const Facet& f : k.facets()) r.facet_total += lam2 * f.area;
  for (const EdgeArc& e : k.edges()) r.edge_total += edge_spherical_image(e, k.lambda());
  for (const Vertex& v : k.vertices()) r.vertex_total += vertex_spherical_image(k, v);
  r.grand_total = r.facet_total + r.edge_total + r.vertex_total;
  return r;
}

}  // namespace lch
