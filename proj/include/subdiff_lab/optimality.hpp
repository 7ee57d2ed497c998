#pragma once

#include "subdiff_lab/variational.hpp"

namespace subdiff {

// Verdict tolerance separating violations from numerical noise; margins
// within (-9 tol, 11 tol] of the violation threshold return Inconclusive.
inline constexpr double kVerdictTol = 1e-7;

enum class Verdict { OptimalCertified, NotOptimal, Inconclusive };
const char* to_string(Verdict v);

struct Violation {
  Point y;
  double fy;
  double evidence;               // directional derivative or subgradient pairing value
  std::optional<Point> ystar;    // present for subdifferential-based tests
};

struct TestReport {
  Verdict verdict = Verdict::Inconclusive;
  std::int64_t checked_points = 0;
  std::vector<Violation> violations;
  double max_margin = -kPlusInf;  // max over grid of min(evidence, f(xbar)-f(y))
  const char* claim = "";
};

// A certified counterexample to optimality: a subgradient taken at a strictly
// better point that pairs positively with the direction back to xbar.
struct RefutationWitness {
  Point y_eps;
  Point ystar_eps;
  double f_yeps;  // < f(xbar) - tol
  double inner;   // <ystar_eps, xbar - y_eps> > tol
};

// Grid oracle: true iff minimize_on_box over region converges on nothing
// below f(xbar) - tol.
bool brute_force_is_min(const PLFunction& f, const Box& region, const Point& xbar,
                        const GridSpec& grid, double tol = kVerdictTol);

// Sweeps y over the grid of C /\ dom f (boundary included) looking for
// y with f'(y; xbar-y) > tol and f(y) < f(xbar) - tol. No violation and a
// confirming box minimization certify optimality.
TestReport directional_test(const PLFunction& f, const Box& C, const Point& xbar,
                            const GridSpec& grid, double tol = kVerdictTol);

// True iff f'(y; xbar-y) <= tol for every grid y in C /\ dom f: the
// directional-derivative sufficient condition (a Minty-type variational
// inequality) for f(xbar) <= f on C.
bool minty_sufficient(const PLFunction& f, const Box& C, const Point& xbar, const GridSpec& grid,
                      double tol = kVerdictTol);

// Same sweep with sup <subdifferential(f,y), xbar-y> as the evidence;
// U is treated as an open box, so boundary grid points are skipped.
TestReport subdiff_test(const PLFunction& f, const Box& U, const Point& xbar,
                        const GridSpec& grid, double tol = kVerdictTol);

// True iff sup <subdifferential(f,y), xbar-y> <= tol at every interior grid y.
bool subdiff_sufficient(const PLFunction& f, const Box& U, const Point& xbar,
                        const GridSpec& grid, double tol = kVerdictTol);

// Constructive refutation pipeline for a non-minimal xbar:
//   (i)  find x with f(x) < f(xbar) by box minimization (interior of U),
//   (ii) take the mean-value witness x0 on [x, xbar) with
//        lambda = (f(xbar)-f(x))/2, so f(x0) < f(xbar), f'(x0; xbar-x0) > 0,
//   (iii) pick eps = 0.9 min(dist(x0, boundary U), f(xbar)-f(x0),
//        f'(x0; xbar-x0)),
//   (iv) search the eps-enlargement at x0 for a subgradient pairing with
//        xbar - x0 above 0.95 f'(x0; xbar-x0); refine the grid and retry up
//        to 3 times.
// Throws IsActuallyOptimal when the box minimization finds nothing better.
RefutationWitness refute_optimality(const PLFunction& f, const Box& U, const Point& xbar,
                                    const GridSpec& grid, double tol = kVerdictTol);

}  // namespace subdiff
