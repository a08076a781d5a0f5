#pragma once

namespace lch {

struct LensParam {
  double lambda = 1.0;
  double alpha = 0.0;  // half-angle of the 3-D lens, cos(alpha) = 1 - inradius * lambda
  double inradius = 0.0;
  double surface_area = 0.0;
  double volume = 0.0;
};

struct Lens3Measures {
  double surface_area, volume, inradius;
};

// 3-D lens of half-angle alpha in (0, pi/2].
Lens3Measures lens3_measures(double lambda, double alpha);
LensParam lens3_from_surface_area(double lambda, double area);
LensParam lens3_from_inradius(double lambda, double r);

// 2-D lens (two congruent arcs) of perimeter P, 0 < P lambda <= 2 pi.
double lens2_area(double lambda, double perimeter);
double lens2_inradius(double lambda, double perimeter);
double lens2_vertex_angle(double lambda, double perimeter);  // turning angle at each vertex

struct RevolutionMeasures {
  double surface_area = 0.0;
  double volume = 0.0;
  double log_surface_area = 0.0;  // natural logs, finite even when the measures underflow
  double log_volume = 0.0;
};

// Spindle in R^n generated by the arc x_n = sqrt(1 - x_1^2) - h1 (lambda = 1), h1 in [0, 1).
RevolutionMeasures spindle_measures(int n, double lambda, double h1);
// Lens in R^n: two caps of height 1 - sqrt(1 - h2^2) and base radius h2 (lambda = 1), h2 in (0, 1].
RevolutionMeasures lens_nd_measures(int n, double lambda, double h2);

// Revolution integrals without the sphere-area prefactor (lambda = 1): area / sigma_{n-2} and
// volume * (n - 1) / sigma_{n-2}. These are what the Laplace forms approximate.
RevolutionMeasures spindle_normalized(int n, double h1);
RevolutionMeasures lens_nd_normalized(int n, double h2);

// Area of the unit (k)-sphere in R^{k+1}, and its log.
double sphere_area(int k);
double log_sphere_area(int k);

struct LaplaceForms {
  double area = 0.0;
  double volume = 0.0;
};
// Leading terms as printed in the source derivation (normalized, lambda = 1).
LaplaceForms laplace_spindle_printed(int n, double h1);
LaplaceForms laplace_lens_printed(int n, double h2);
// Leading spindle terms with the Jacobian of the Gaussian substitution carried through:
// sqrt(2 pi) (1 - h1)^{n - 3/2} / sqrt(n) and sqrt(2 pi) (1 - h1)^{n - 1/2} / sqrt(n).
LaplaceForms laplace_spindle(int n, double h1);

struct MatchReport {
  int n = 0;
  double lambda = 1.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double surface_area = 0.0;
  double volume_lens = 0.0;
  double volume_spindle = 0.0;
  double gap = 0.0;  // (1 - h1) - h2
  bool lens_smaller = false;
};
// Finds h2 with |dL| = |dSp| (relative 1e-10) and compares the volumes.
MatchReport match_and_compare(int n, double lambda, double h1);

}  // namespace lch
