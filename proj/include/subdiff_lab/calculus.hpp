#pragma once

#include <optional>
#include <vector>

#include "subdiff_lab/minimize.hpp"
#include "subdiff_lab/polytope.hpp"

namespace subdiff {

// Relative activity tolerance: piece i counts as active at x when
// |value_i(x) - f(x)| <= tol * (1 + |f(x)|).
inline constexpr double kActivityTol = 1e-9;

// A subgradient paired with the point it was taken at.
struct SubgradientSample {
  Point x;
  double fx;
  Point xstar;
};

// Directional derivative f'(xbar; d) = lim_{t->0+} (f(xbar+td) - f(xbar))/t,
// an exact limit for piecewise-linear f. Interior points use the active-set
// form min over active components of max over active pieces of <a_i, d>;
// otherwise the initial slope of the exact segment profile is returned
// (+inf when xbar + td leaves the domain for every small t > 0).
ExtReal directional_derivative(const PLFunction& f, const Point& xbar, const Point& d);

// Subdifferential at an interior point.
//   convex (single component): conv{a_i : piece i active}, exact;
//   1D nonconvex: the exact Clarke interval conv{left slope, right slope};
//   2D/3D nonconvex: conv{a_i : i active within active components}, an outer
//   approximation, flagged via Polytope::outer.
// Boundary points are rejected (BoundaryPoint).
Polytope subdifferential(const PLFunction& f, const Point& x);

// Euclidean distance from xstar to subdifferential(f, x).
double subdiff_distance(const PLFunction& f, const Point& x, const Point& xstar);

// Membership test. Convex case: the defining inequality
// <xstar, y-x> + f(x) <= f(y) + tol checked over a grid of y (independent of
// the hull construction); nonconvex case: dist(xstar, subdifferential) <= tol.
// The default grid spans the domain box (or a width-4 box around x).
bool subdiff_contains(const PLFunction& f, const Point& x, const Point& xstar, double tol,
                      const std::optional<GridSpec>& grid = std::nullopt);

// Subgradients taken at grid points x within eps of xbar (Euclidean ball by
// default) whose value differs from f(xbar) by at most eps and which satisfy
// <xstar, x - xbar> <= eps. The subgradients at xbar itself are always
// included. Output is sorted by (x, xstar) and deduplicated.
std::vector<SubgradientSample> eps_enlargement(const PLFunction& f, const Point& xbar,
                                               double eps, const GridSpec& grid,
                                               NormKind ball_norm = NormKind::Euclidean);

double sup_support(const std::vector<SubgradientSample>& samples, const Point& d);

// Per-epsilon record of the link between the directional derivative and the
// enlarged subdifferential.
struct LinkReport {
  struct Entry {
    double eps;
    double sup;
    int count;
  };
  double fprime = 0;
  std::vector<Entry> schedule;
  bool pass = false;
  // Convex instances only: |fprime - sup(eps_min)| and whether it clears
  // tol_equal + 2 h L.
  std::optional<double> convex_gap;
  std::optional<bool> convex_equal;
};

inline const std::vector<double>& default_eps_schedule() {
  static const std::vector<double> s{1, 1.0 / 2, 1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
  return s;
}

// Checks f'(xbar;d) <= sup <enlargement_eps, d> + tol for every eps in the
// schedule (strictly decreasing, positive). Convex instances also record the
// equality gap at the smallest eps.
LinkReport verify_link(const PLFunction& f, const Point& xbar, const Point& d,
                       const std::vector<double>& eps_schedule, const GridSpec& grid,
                       double tol = 1e-7, NormKind ball_norm = NormKind::Euclidean);

}  // namespace subdiff
