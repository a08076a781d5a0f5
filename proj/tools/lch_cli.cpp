// Command-line front end. Exit status: 0 pass, 1 inequality violation, 2 invalid input or I/O.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "lch/body_io.hpp"
#include "lch/erosion.hpp"
#include "lch/gauss_bonnet.hpp"
#include "lch/harness.hpp"
#include "lch/inradius.hpp"
#include "lch/projection_ratio.hpp"
#include "lch/reference_bodies.hpp"

using nlohmann::json;
using namespace lch;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;

json vec(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
json vec(const Vec2& v) { return {v.x(), v.y()}; }

json gb_json(const GBReport& g) {
  return {{"facet_total", g.facet_total},
          {"edge_total", g.edge_total},
          {"vertex_total", g.vertex_total},
          {"grand_total", g.grand_total}};
}

json measure3(const BallPolytope3& k) {
  const InscribedBall b = inscribed_ball(k);
  json j;
  j["dim"] = 3;
  j["lambda"] = k.lambda();
  j["balls"] = k.centers().size();
  j["retained"] = k.retained();
  j["facets"] = k.facets().size();
  j["edges"] = k.edges().size();
  j["vertices"] = k.vertices().size();
  j["surface_area"] = k.surface_area();
  j["volume"] = k.volume();
  j["inradius"] = b.radius;
  j["inscribed_center"] = vec(b.center);
  j["gauss_bonnet"] = gb_json(gb_total(k));
  return j;
}

json measure2(const ArcPolygon2& k) {
  json j;
  j["dim"] = 2;
  j["lambda"] = k.lambda();
  j["curvature"] = k.curvature();
  j["disks"] = k.disks().size();
  j["retained"] = k.retained();
  j["arcs"] = k.arcs().size();
  j["vertices"] = k.vertices().size();
  j["perimeter"] = k.perimeter();
  j["area"] = k.area();
  const InscribedDisk d = inradius2(k);
  j["inradius"] = d.radius;
  j["inscribed_center"] = vec(d.center);
  json turning = json::array();
  for (const Vertex2& v : k.vertices()) turning.push_back(v.turning);
  j["turning"] = turning;
  return j;
}

void print_text(const json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << '\n';
}

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int emit(const json& report, bool passed) {
  std::cout << report.dump(2) << '\n';
  return passed ? kPass : kViolation;
}

int verify(const std::string& what, const std::string& path) {
  const BodySpec spec = read_body(path);
  const bool is3 = std::holds_alternative<Body3>(spec);
  // inradius accepts either dimension
  const bool needs3 = what == "rip" || what == "gb" || what == "keyclaim";
  const bool needs2 = what == "rip2d" || what == "goal2d";
  if (needs3 && !is3) throw FormatError(path + ": 'verify " + what + "' needs a 3-D body");
  if (needs2 && is3) throw FormatError(path + ": 'verify " + what + "' needs a 2-D body");
  if (what == "inradius" && !is3) {
    const TheoremB2Report r = theoremB_2d_check(build(std::get<Body2>(spec)));
    return emit({{"perimeter", r.perimeter}, {"inradius", r.inradius}, {"lens_inradius", r.lens_inradius},
                 {"margin", r.margin}, {"is_lens", r.is_lens}, {"passed", r.passed}},
                r.passed);
  }
  if (what == "rip") {
    const RipReport r = rip_check(build(std::get<Body3>(spec)));
    return emit({{"surface_area", r.surface_area}, {"volume", r.volume}, {"lens_volume", r.lens_volume},
                 {"margin", r.margin}, {"has_vertex", r.has_vertex}, {"passed", r.passed}},
                r.passed);
  }
  if (what == "inradius") {
    const ReverseInradiusReport r = verify_reverse_inradius(build(std::get<Body3>(spec)));
    return emit({{"surface_area", r.surface_area}, {"inradius", r.inradius}, {"lens_inradius", r.lens_inradius},
                 {"margin", r.margin}, {"is_lens", r.is_lens}, {"passed", r.passed}},
                r.passed);
  }
  if (what == "gb") {
    const GBReport g = gb_total(build(std::get<Body3>(spec)));
    const bool ok = std::abs(g.grand_total - 4.0 * kPi) < 1e-9;
    json j = gb_json(g);
    j["passed"] = ok;
    return emit(j, ok);
  }
  if (what == "keyclaim") {
    const KeyClaimReport r = key_claim_check(build(std::get<Body3>(spec)));
    json facets = json::array();
    for (const FacetRatio& f : r.facets)
      facets.push_back({{"ball", f.ball}, {"area", f.area}, {"projected", f.projected}, {"ratio", f.ratio},
                        {"radial_extension", f.extension}});
    return emit({{"inradius", r.inradius}, {"F", r.bound}, {"max_ratio", r.max_ratio}, {"facets", facets},
                 {"surface_area", r.surface_area}, {"chain_bound", r.chain_bound}, {"lens_area", r.lens_area},
                 {"strict", r.strict}, {"passed", r.passed}},
                r.passed);
  }
  const ArcPolygon2 k = build(std::get<Body2>(spec));
  if (what == "rip2d") {
    const Rip2dReport r = rip2d_check(k);
    return emit({{"perimeter", r.perimeter}, {"area", r.area}, {"lens_area", r.lens_area}, {"margin", r.margin},
                 {"is_lens", r.is_lens}, {"passed", r.passed}},
                r.passed);
  }
  const GoalReport g = goal_inequality_check(k);
  return emit({{"m", g.m}, {"lhs", g.lhs}, {"rhs", g.rhs}, {"equality", g.equality}, {"passed", g.passed}}, g.passed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reverse isoperimetric toolkit for lambda-convex ball polytopes"};
  app.require_subcommand(1);

  GenSpec gs;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random touching polytope or polygon");
  gen->add_option("--m", gs.m, "Number of balls")->required();
  gen->add_option("--inradius", gs.inradius, "Inscribed radius r0")->required();
  gen->add_option("--lambda", gs.lambda, "Curvature bound");
  gen->add_option("--dim", gs.dim, "2 or 3");
  gen->add_option("--curvature", gs.curvature, "Space curvature (dim 2)");
  gen->add_option("--seed", gs.seed, "RNG seed");
  gen->add_option("-o", gen_out, "Output JSON file")->required();

  std::string file;
  bool as_json = false;
  auto* measure = app.add_subcommand("measure", "Print measures of a body");
  measure->add_option("file", file)->required();
  measure->add_flag("--json", as_json);

  int steps = 64;
  std::string csv;
  auto* erode = app.add_subcommand("erode", "Sample the erosion profile t -> |dK_t|");
  erode->add_option("file", file)->required();
  erode->add_option("--steps", steps)->check(CLI::Range(2, 100000));
  erode->add_option("--csv", csv)->required();

  std::string what;
  auto* ver = app.add_subcommand("verify", "Check one inequality on a body");
  ver->add_option("check", what)->required()->check(CLI::IsMember({"rip", "inradius", "gb", "keyclaim", "rip2d", "goal2d"}));
  ver->add_option("file", file)->required();

  SweepConfig sc;
  std::string report;
  auto* sweep = app.add_subcommand("sweep", "Randomized verification sweep");
  sweep->add_option("--trials", sc.trials)->required();
  sweep->add_option("--m-max", sc.m_max);
  sweep->add_option("--seed", sc.seed);
  sweep->add_option("--lambda", sc.lambda);
  sweep->add_option("--dim", sc.dim)->check(CLI::IsMember({2, 3}));
  sweep->add_option("--curvature", sc.curvature);
  sweep->add_option("--report", report)->required();

  int dim = 3;
  double lam = 1.0, area = 0.0, inr = 0.0;
  auto* lens = app.add_subcommand("lens", "Closed-form lens measures");
  lens->add_option("--dim", dim)->check(CLI::IsMember({2, 3}));
  auto* o_area = lens->add_option("--surface-area", area, "Surface area (perimeter in 2-D)");
  auto* o_inr = lens->add_option("--inradius", inr);
  o_area->excludes(o_inr);
  lens->add_option("--lambda", lam);

  int n = 3;
  double h1 = 0.0;
  auto* spindle = app.add_subcommand("spindle", "Spindle measures in R^n");
  spindle->add_option("--dim", n)->required()->check(CLI::Range(2, 100000));
  spindle->add_option("--h1", h1)->required();
  spindle->add_option("--lambda", lam);

  int n_min = 4, n_max = 60, n_step = 2;
  auto* cmp = app.add_subcommand("compare-asymptotic", "Matched lens vs spindle over dimensions");
  cmp->add_option("--n-min", n_min)->check(CLI::Range(3, 100000));
  cmp->add_option("--n-max", n_max)->check(CLI::Range(3, 100000));
  cmp->add_option("--n-step", n_step)->check(CLI::Range(1, 100000));
  cmp->add_option("--h1", h1)->required();
  cmp->add_option("--csv", csv)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (*gen) {
      if (gs.dim == 3)
        write_body(gen_out, random_polytope_spec(gs));
      else
        write_body(gen_out, random_polygon_spec(gs));
      return kPass;
    }
    if (*measure) {
      const BodySpec spec = read_body(file);
      const json j = std::holds_alternative<Body3>(spec) ? measure3(build(std::get<Body3>(spec)))
                                                          : measure2(build(std::get<Body2>(spec)));
      if (as_json)
        std::cout << j.dump(2) << '\n';
      else
        print_text(j);
      return kPass;
    }
    if (*erode) {
      const BodySpec spec = read_body(file);
      if (!std::holds_alternative<Body3>(spec)) throw FormatError(file + ": erode needs a 3-D body");
      const ErosionProfile p = profile(build(std::get<Body3>(spec)), steps);
      std::ofstream out(csv);
      if (!out) throw FormatError(csv + ": cannot write");
      out << "t,area\n";
      for (std::size_t i = 0; i < p.ts.size(); ++i) out << g17(p.ts[i]) << ',' << g17(p.areas[i]) << '\n';
      std::cout << "inradius: " << g17(p.inradius) << "\nsamples: " << p.ts.size() << "\nevents: " << p.events.size()
                << '\n';
      return kPass;
    }
    if (*ver) return verify(what, file);
    if (*sweep) {
      const SweepReport r = run_sweep(sc);
      write_sweep_csv(r, report);
      std::cout << "trials: " << r.trials << "\nviolations: " << r.violations.size() << '\n';
      for (const auto& [name, m] : r.min_margins) std::cout << "min_margin." << name << ": " << g17(m) << '\n';
      for (const Violation& v : r.violations)
        std::cout << "violation trial=" << v.trial << " check=" << v.check << " seed=" << v.spec.seed
                  << " m=" << v.spec.m << " inradius=" << g17(v.spec.inradius) << " lambda=" << g17(v.spec.lambda)
                  << " dim=" << v.spec.dim << " curvature=" << g17(v.spec.curvature) << " margin=" << g17(v.margin)
                  << " (" << v.detail << ")\n";
      std::cerr << "seconds: " << r.seconds << " per trial: " << r.mean_trial_seconds << '\n';
      return r.violations.empty() ? kPass : kViolation;
    }
    if (*lens) {
      if (o_area->count() == 0 && o_inr->count() == 0) throw InvalidParameter("lens needs --surface-area or --inradius");
      if (dim == 3) {
        const LensParam p = o_area->count() ? lens3_from_surface_area(lam, area) : lens3_from_inradius(lam, inr);
        std::cout << "alpha: " << g17(p.alpha) << "\nsurface_area: " << g17(p.surface_area)
                  << "\nvolume: " << g17(p.volume) << "\ninradius: " << g17(p.inradius) << '\n';
      } else {
        double perim = area;
        if (o_inr->count()) {
          if (!(inr > 0.0) || inr * lam > 1.0) throw InvalidParameter("inradius must lie in (0, 1/lambda]");
          perim = 4.0 * std::acos(1.0 - inr * lam) / lam;
        }
        std::cout << "perimeter: " << g17(perim) << "\narea: " << g17(lens2_area(lam, perim))
                  << "\ninradius: " << g17(lens2_inradius(lam, perim))
                  << "\nvertex_angle: " << g17(lens2_vertex_angle(lam, perim)) << '\n';
      }
      return kPass;
    }
    if (*spindle) {
      const RevolutionMeasures m = spindle_measures(n, lam, h1);
      std::cout << "surface_area: " << g17(m.surface_area) << "\nvolume: " << g17(m.volume)
                << "\nlog_surface_area: " << g17(m.log_surface_area) << "\nlog_volume: " << g17(m.log_volume) << '\n';
      return kPass;
    }
    if (*cmp) {
      if (n_max < n_min) throw InvalidParameter("n-max must be at least n-min");
      std::ofstream out(csv);
      if (!out) throw FormatError(csv + ": cannot write");
      out << "n,h1,h2,area,V_lens,V_spindle,gap\n";
      bool all = true;
      for (int k = n_min; k <= n_max; k += n_step) {
        const MatchReport r = match_and_compare(k, 1.0, h1);
        all = all && r.lens_smaller;
        out << k << ',' << g17(h1) << ',' << g17(r.h2) << ',' << g17(r.surface_area) << ',' << g17(r.volume_lens)
            << ',' << g17(r.volume_spindle) << ',' << g17(r.gap) << '\n';
      }
      return all ? kPass : kViolation;
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
