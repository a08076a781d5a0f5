#include "lch/ball_polytope3.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "lch/detail/arc_set.hpp"
#include "lch/quadrature.hpp"
#include "lch/rng.hpp"

namespace lch {

Vec3 EdgeArc::point(double theta) const {
  return circle_center + circle_radius * (std::cos(theta) * e1 + std::sin(theta) * e2);
}

Vec3 EdgeArc::tangent(double theta) const { return -std::sin(theta) * e1 + std::cos(theta) * e2; }

namespace {

Vec3 any_perpendicular(const Vec3& n) {
  const Vec3 trial = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (trial - trial.dot(n) * n).normalized();
}

double arc_end_theta(const EdgeArc& e, bool forward) { return forward ? e.theta_start + e.arc_angle : e.theta_start; }
double arc_begin_theta(const EdgeArc& e, bool forward) { return forward ? e.theta_start : e.theta_start + e.arc_angle; }
int arc_begin_vertex(const EdgeArc& e, bool forward) { return forward ? e.v_start : e.v_end; }
int arc_end_vertex(const EdgeArc& e, bool forward) { return forward ? e.v_end : e.v_start; }

}  // namespace

BallPolytope3 BallPolytope3::build(double lambda, std::vector<Vec3> centers) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidParameter("lambda must be positive and finite");
  if (centers.empty()) throw InvalidParameter("at least one center is required");
  for (const Vec3& c : centers)
    if (!c.allFinite()) throw InvalidParameter("center coordinates must be finite");

  BallPolytope3 k;
  k.lambda_ = lambda;
  k.centers_ = std::move(centers);
  const double R = 1.0 / lambda;
  const int n = static_cast<int>(k.centers_.size());

  k.meb_ = minimal_enclosing_ball(k.centers_, 1e-9 * R);
  if (k.meb_.radius > R * (1.0 + 1e-12)) throw EmptyBody("balls have empty intersection");
  if (k.meb_.radius >= R * (1.0 - 1e-9)) throw DegenerateBody("intersection has empty interior");

  // Work relative to the enclosing-ball center for accuracy.
  const Vec3 shift = k.meb_.center;
  std::vector<Vec3> o(n);
  for (int i = 0; i < n; ++i) o[i] = k.centers_[i] - shift;

  std::vector<bool> duplicate(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i && !duplicate[i]; ++j)
      if (!duplicate[j] && (o[i] - o[j]).norm() <= 1e-12 * R) duplicate[i] = true;

  // Edge arcs from pairwise circles clipped by every other ball.
  struct Endpoint {
    int edge;
    bool at_start;
    std::array<int, 3> triple;
    Vec3 pos;
  };
  std::vector<Endpoint> endpoints;
  std::vector<detail::CircleConstraint> cons;
  for (int i = 0; i < n; ++i) {
    if (duplicate[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (duplicate[j]) continue;
      const Vec3 dv = o[j] - o[i];
      const double d = dv.norm();
      if (d >= 2.0 * R) continue;
      EdgeArc proto;
      proto.i = i;
      proto.j = j;
      proto.axis = dv / d;
      proto.circle_center = 0.5 * (o[i] + o[j]);
      proto.circle_radius = std::sqrt(R * R - 0.25 * d * d);
      proto.e1 = any_perpendicular(proto.axis);
      proto.e2 = proto.axis.cross(proto.e1);
      proto.dihedral = 2.0 * std::asin(std::min(1.0, 0.5 * d * lambda));
      const double rho = proto.circle_radius;

      cons.clear();
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j || duplicate[l]) continue;
        const Vec3 w = proto.circle_center - o[l];
        cons.push_back({2.0 * rho * w.dot(proto.e1), 2.0 * rho * w.dot(proto.e2), R * R - w.squaredNorm() - rho * rho, l});
      }
      for (const detail::ArcPiece& piece : detail::allowed_arcs(cons)) {
        EdgeArc e = proto;
        e.theta_start = piece.start;
        e.arc_angle = piece.length;
        e.full_circle = piece.start_tag < 0;
        if (!e.full_circle && (piece.length < 1e-9 || rho * piece.length < 1e-10 * R))
          throw DegenerateBody("edge arc of vanishing length");
        e.length = rho * e.arc_angle;
        const int idx = static_cast<int>(k.edges_.size());
        k.edges_.push_back(e);
        if (!e.full_circle) {
          auto triple = [&](int t) {
            std::array<int, 3> tr{i, j, t};
            std::sort(tr.begin(), tr.end());
            return tr;
          };
          endpoints.push_back({idx, true, triple(piece.start_tag), e.point(e.theta_start)});
          endpoints.push_back({idx, false, triple(piece.end_tag), e.point(e.theta_start + e.arc_angle)});
        }
      }
    }
  }

  // Merge endpoints into vertices.
  std::vector<int> refs;
  std::vector<Vec3> vpos;
  for (const Endpoint& ep : endpoints) {
    int found = -1;
    for (std::size_t v = 0; v < k.vertices_.size(); ++v) {
      if (k.vertices_[v].incident != ep.triple) continue;
      const double gap = (vpos[v] - ep.pos).norm();
      if (gap < 1e-7 * R) {
        found = static_cast<int>(v);
        break;
      }
      if (gap < 1e-6 * R) throw DegenerateBody("two vertices of the same sphere triple nearly coincide");
    }
    if (found < 0) {
      found = static_cast<int>(k.vertices_.size());
      k.vertices_.push_back({ep.pos, ep.triple});
      vpos.push_back(ep.pos);
      refs.push_back(0);
    }
    ++refs[found];
    (ep.at_start ? k.edges_[ep.edge].v_start : k.edges_[ep.edge].v_end) = found;
  }
  for (std::size_t v = 0; v < k.vertices_.size(); ++v) {
    if (refs[v] != 3) throw DegenerateBody("vertex is not trivalent");
    const auto& tr = k.vertices_[v].incident;
    for (int l = 0; l < n; ++l) {
      if (duplicate[l] || l == tr[0] || l == tr[1] || l == tr[2]) continue;
      if ((vpos[v] - o[l]).norm() >= R * (1.0 - 1e-9)) throw DegenerateBody("four spheres meet at a vertex");
    }
  }

  // Facets: balls with at least one arc, or the lone ball.
  std::vector<std::vector<ArcUse>> uses(n);
  for (int e = 0; e < static_cast<int>(k.edges_.size()); ++e) {
    uses[k.edges_[e].i].push_back({e, true});
    uses[k.edges_[e].j].push_back({e, false});
  }
  int distinct = 0;
  for (int i = 0; i < n; ++i) distinct += duplicate[i] ? 0 : 1;
  for (int i = 0; i < n; ++i) {
    const bool alone = distinct == 1 && !duplicate[i];
    if (uses[i].empty() && !alone) {
      k.redundant_.push_back(i);
      continue;
    }
    Facet f;
    f.ball_index = i;
    std::vector<bool> used(uses[i].size(), false);
    std::map<int, int> by_start;
    for (std::size_t u = 0; u < uses[i].size(); ++u) {
      const EdgeArc& e = k.edges_[uses[i][u].edge];
      if (e.full_circle) continue;
      const int sv = arc_begin_vertex(e, uses[i][u].forward);
      if (!by_start.emplace(sv, static_cast<int>(u)).second) throw TopologyError("facet boundary branches at a vertex");
    }
    for (std::size_t u0 = 0; u0 < uses[i].size(); ++u0) {
      if (used[u0]) continue;
      std::vector<ArcUse> loop;
      std::size_t u = u0;
      while (true) {
        used[u] = true;
        loop.push_back(uses[i][u]);
        const EdgeArc& e = k.edges_[uses[i][u].edge];
        if (e.full_circle) break;
        const int ev = arc_end_vertex(e, uses[i][u].forward);
        auto it = by_start.find(ev);
        if (it == by_start.end()) throw TopologyError("open facet boundary loop");
        u = static_cast<std::size_t>(it->second);
        if (u == u0) break;
        if (used[u]) throw TopologyError("facet boundary loop does not close");
      }
      f.boundary_loops.push_back(std::move(loop));
    }
    k.facets_.push_back(std::move(f));
    k.retained_.push_back(i);
  }
  for (int i = 0; i < n; ++i)
    if (duplicate[i]) k.redundant_.push_back(i);
  std::sort(k.redundant_.begin(), k.redundant_.end());

  // Translate geometry back to the caller's frame.
  for (EdgeArc& e : k.edges_) e.circle_center += shift;
  for (Vertex& v : k.vertices_) v.position += shift;

  for (Facet& f : k.facets_) {
    f.area = facet_area(k, f);
    // The area comes from an angle sum with absolute rounding near 1e-15 R^2.
    if (!(f.area > 1e-12 * R * R)) throw DegenerateBody("facet of vanishing area");
  }

  bool single_loops = true;
  for (const Facet& f : k.facets_) single_loops = single_loops && f.boundary_loops.size() <= 1;
  const long V = static_cast<long>(k.vertices_.size()), E = static_cast<long>(k.edges_.size()),
             F = static_cast<long>(k.facets_.size());
  const bool lens = V == 0 && E == 1 && F == 2;
  if (single_loops && F > 1 && !lens && V - E + F != 2) throw TopologyError("Euler characteristic mismatch");
  return k;
}

int BallPolytope3::facet_of_ball(int b) const {
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (facets_[f].ball_index == b) return static_cast<int>(f);
  return -1;
}

double BallPolytope3::surface_area() const {
  double s = 0.0;
  for (const Facet& f : facets_) s += f.area;
  return s;
}

double BallPolytope3::volume() const { return lch::volume(*this); }

bool BallPolytope3::contains(const Vec3& x) const {
  const double R = ball_radius();
  for (const Vec3& c : centers_)
    if ((x - c).norm() > R) return false;
  return true;
}

std::vector<std::int64_t> BallPolytope3::signature() const {
  const std::int64_t m = static_cast<std::int64_t>(centers_.size()) + 1;
  std::vector<std::int64_t> sig(retained_.begin(), retained_.end());
  sig.push_back(-1);
  std::vector<std::int64_t> tri;
  for (const Vertex& v : vertices_) tri.push_back((v.incident[0] * m + v.incident[1]) * m + v.incident[2]);
  std::sort(tri.begin(), tri.end());
  sig.insert(sig.end(), tri.begin(), tri.end());
  sig.push_back(-2);
  for (const EdgeArc& e : edges_)
    if (e.full_circle) sig.push_back(e.i * m + e.j);
  return sig;
}

double facet_area(const BallPolytope3& k, const Facet& f) {
  const double R = k.ball_radius();
  const Vec3& oi = k.centers()[f.ball_index];
  const double loops = static_cast<double>(f.boundary_loops.size());
  double total = kTwoPi * (2.0 - loops);
  for (const auto& loop : f.boundary_loops) {
    if (loop.empty()) throw TopologyError("empty boundary loop");
    for (std::size_t a = 0; a < loop.size(); ++a) {
      const EdgeArc& e = k.edges()[loop[a].edge];
      const double d = (k.centers()[e.j] - k.centers()[e.i]).norm();
      total -= (0.5 * d / R) * e.arc_angle;  // geodesic curvature cot(psi) times length sin(psi) dtheta
      if (e.full_circle) continue;
      const ArcUse& next = loop[(a + 1) % loop.size()];
      const EdgeArc& en = k.edges()[next.edge];
      const int shared = arc_end_vertex(e, loop[a].forward);
      if (arc_begin_vertex(en, next.forward) != shared) throw TopologyError("boundary loop is not closed");
      const Vec3 t_in = (loop[a].forward ? 1.0 : -1.0) * e.tangent(arc_end_theta(e, loop[a].forward));
      const Vec3 t_out = (next.forward ? 1.0 : -1.0) * en.tangent(arc_begin_theta(en, next.forward));
      const Vec3 normal = (k.vertices()[shared].position - oi).normalized();
      total -= std::atan2(normal.dot(t_in.cross(t_out)), t_in.dot(t_out));
    }
  }
  return R * R * total;
}

double surface_area(const BallPolytope3& k) { return k.surface_area(); }

namespace {

// Half of the line integral of (x - ref) x dx along an arc, in closed form.
Vec3 arc_vector_area(const EdgeArc& e, bool forward, const Vec3& ref) {
  const double a = e.theta_start, b = e.theta_start + e.arc_angle;
  const Vec3 c = e.circle_center - ref;
  const double rho = e.circle_radius;
  const Vec3 chord = (std::cos(b) - std::cos(a)) * e.e1 + (std::sin(b) - std::sin(a)) * e.e2;
  const Vec3 val = 0.5 * (rho * c.cross(chord) + rho * rho * (b - a) * e.axis);
  return forward ? val : Vec3(-val);
}

Vec3 arc_vector_area_gl(const EdgeArc& e, bool forward, const Vec3& ref, int order) {
  Vec3 acc = Vec3::Zero();
  for (int comp = 0; comp < 3; ++comp) {
    acc[comp] = quad::gauss_legendre(
        [&](double t) {
          const Vec3 x = e.point(t) - ref;
          const Vec3 dx = e.circle_radius * e.tangent(t);
          return 0.5 * x.cross(dx)[comp];
        },
        e.theta_start, e.theta_start + e.arc_angle, order);
  }
  return forward ? acc : Vec3(-acc);
}

template <class ArcArea>
double divergence_volume(const BallPolytope3& k, ArcArea arc_area) {
  const double R = k.ball_radius();
  const Vec3 ref = k.center_meb().center;
  double total = 0.0;
  for (const Facet& f : k.facets()) {
    Vec3 vec_area = Vec3::Zero();
    for (const auto& loop : f.boundary_loops)
      for (const ArcUse& u : loop) vec_area += arc_area(k.edges()[u.edge], u.forward, ref);
    total += R * f.area + (k.centers()[f.ball_index] - ref).dot(vec_area);
  }
  return total / 3.0;
}

}  // namespace

double volume(const BallPolytope3& k) { return divergence_volume(k, arc_vector_area); }

double volume_quadrature(const BallPolytope3& k) {
  double prev = divergence_volume(k, [](const EdgeArc& e, bool fw, const Vec3& ref) { return arc_vector_area_gl(e, fw, ref, 32); });
  const double cur = divergence_volume(k, [](const EdgeArc& e, bool fw, const Vec3& ref) { return arc_vector_area_gl(e, fw, ref, 64); });
  if (std::abs(cur - prev) > 1e-12 * std::max(1.0, std::abs(cur)))
    throw NumericError("Gauss-Legendre volume did not stabilize");
  return cur;
}

bool membership(const BallPolytope3& k, const Vec3& x) { return k.contains(x); }

ConvexityReport validate_lambda_convexity(const BallPolytope3& k, int samples, std::uint64_t seed) {
  ConvexityReport rep;
  const double R = k.ball_radius();
  const Vec3 o = k.center_meb().center;
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  std::normal_distribution<double> gauss;
  std::vector<Vec3> boundary;
  std::vector<int> support;
  for (int s = 0; s < samples; ++s) {
    Vec3 w(gauss(rng), gauss(rng), gauss(rng));
    w.normalize();
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int b : k.retained()) {
      const Vec3 q = o - k.centers()[b];
      const double bq = w.dot(q);
      const double t = -bq + std::sqrt(bq * bq + R * R - q.squaredNorm());
      if (t < best) {
        best = t;
        arg = b;
      }
    }
    boundary.push_back(o + best * w);
    support.push_back(arg);
  }
  for (std::size_t s = 0; s < boundary.size(); ++s) {
    const Vec3& c = k.centers()[support[s]];
    for (const Vertex& v : k.vertices()) {
      rep.max_violation = std::max(rep.max_violation, (v.position - c).norm() - R);
      ++rep.checks;
    }
    // compare against a spread of other boundary samples to keep the cost linear
    for (std::size_t t = s % 7; t < boundary.size(); t += 7) {
      rep.max_violation = std::max(rep.max_violation, (boundary[t] - c).norm() - R);
      ++rep.checks;
    }
  }
  rep.passed = rep.max_violation <= 1e-9 * std::max(1.0, R);
  return rep;
}

}  // namespace lch
