#pragma once

#include "subdiff_lab/calculus.hpp"

namespace subdiff {

// A point that minimizes the norm-perturbed function on a ball around the
// anchor: f(y) + (eps/lambda) ||y - x_eps|| >= f(x_eps) - tol for probe y.
// Norms here are sup-norms so the perturbed objective stays piecewise linear.
struct EkelandWitness {
  Point x_eps;
  double lambda;  // ball radius actually used (may carry a retry bump)
  double eps;
  double f_x_eps;
  double perturbed_min_gap;  // max over probes of f(x_eps) - [f(y) + (eps/lambda)||y-x_eps||]
};

// Mean-value-inequality witness on the segment [x, xbar[.
struct MVIWitness {
  double t0;    // in [0, 1)
  Point x0;     // x + t0 (xbar - x)
  ExtReal dd;   // f'(x0; xbar - x) >= lambda
  double f_x0;  // f(x0) <= f(x) + t0 lambda
};

// Minimizes f(y) + (eps/lambda)||y - xbar||_sup over the sup-ball
// B(xbar, lambda) /\ dom f. Requires the almost-minimality precondition
// f(xbar) <= inf f(B(xbar, lambda)) + eps (PreconditionSci otherwise, checked
// with the box-minimization oracle). If the argmin lands on the ball
// boundary, the radius is bumped by 1e-6 and the search reruns once. The
// returned witness is re-verified on a probe lattice of about `probe_points`
// points in B(x_eps, lambda/4) /\ B(xbar, lambda).
EkelandWitness ekeland_point(const PLFunction& f, const Point& xbar, double eps, double lambda,
                             int probe_points = 1000);

// Re-runs the probe-lattice verification of an existing witness.
double ekeland_probe_gap(const PLFunction& f, const Point& xbar, const EkelandWitness& w,
                         int probe_points = 1000);

// Exact minimizer of g(t) = f(x + t(xbar-x)) - t lambda over [0,1] (smallest
// t on ties; t=1 cannot win since g(0) <= g(1)). Requires x in dom f and
// lambda <= f(xbar) - f(x) (PreconditionLambda otherwise; f(xbar) = +inf
// admits every finite lambda).
MVIWitness mean_value_witness(const PLFunction& f, const Point& x, const Point& xbar,
                              double lambda);

// Searches eps_enlargement(f, xbar, eps, grid) for a sample with
// <xstar, d> >= lambda - tol, in (x, xstar) order. Existence is
// theorem-backed when lambda < f'(xbar; d); the search itself accepts any
// lambda and throws NoSampleFound (with a refinement hint) when nothing
// qualifies at this resolution.
SubgradientSample find_enlarged_subgradient(const PLFunction& f, const Point& xbar,
                                            const Point& d, double lambda, double eps,
                                            const GridSpec& grid, double tol = 1e-9);

}  // namespace subdiff
