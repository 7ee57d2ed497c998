#pragma once

#include <utility>

#include "subdiff_lab/calculus.hpp"

namespace subdiff {

// Finite sample of the graph of a set-valued operator T : X => X*.
// Canonical form: sorted by (x, xstar), exact duplicates removed.
struct OperatorGraph {
  std::vector<std::pair<Point, Point>> samples;

  OperatorGraph() = default;
  explicit OperatorGraph(std::vector<std::pair<Point, Point>> s);
  size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

struct AbsorbReport {
  std::int64_t candidates_tested = 0;
  std::int64_t polar_members = 0;
  std::int64_t polar_in_graph = 0;
  double max_violation_distance = 0;  // max over polar members of dist(xstar, subdiff(f,x))
  bool pass = false;
};

// Samples the subdifferential graph of f over the grid: every vertex of
// subdifferential(f, x) at every interior grid x. 1D kink abscissae (pairwise
// piece crossings) are inserted into the grid exactly; in 2D the crossings of
// piece-equality lines with the grid lines are added where both pieces are
// active.
OperatorGraph sample_subdiff_graph(const PLFunction& f, const GridSpec& grid);

// <ystar - xstar, y - x> >= -tol against every sample of T.
bool monotonically_related(const Point& x, const Point& xstar, const OperatorGraph& T,
                           double tol);
// Worst pairing of (x, xstar) against T (>= 0 means monotonically related).
double relatedness_margin(const Point& x, const Point& xstar, const OperatorGraph& T);

// All (x, xstar) on the primal x dual candidate lattice monotonically
// related to every sample of T.
OperatorGraph polar_samples(const OperatorGraph& T, const GridSpec& primal,
                            const GridSpec& dual, double tol);

// T is monotone: every pair of samples satisfies <xstar-ystar, x-y> >= -tol.
bool check_monotone(const OperatorGraph& T, double tol);

// Samples the graph of subdifferential(f, .), computes its polar over the
// candidate lattice (primal candidates inset one cell from the sampling
// window: a finite window cannot constrain its own edge columns), and checks
// that every polar member's xstar lies within `tol` of subdifferential(f, x).
// Pass tol carries the discretization slack, typically 2 h L + base tol.
AbsorbReport check_absorbing(const PLFunction& f, const GridSpec& grid, const GridSpec& dual,
                             double tol);

// Convex f only (ConvexityRequired otherwise): monotone + absorbing on the
// sampled lattices, i.e. T = T0 within tolerance in both inclusions.
bool check_maximal_monotone(const PLFunction& f, const GridSpec& grid, const GridSpec& dual,
                            double tol);

// Dual-space candidate box [min slope - 1, max slope + 1] per coordinate.
Box dual_bounds(const PLFunction& f);

// Exact Euclidean distance from (x, xstar) to the graph of the
// subdifferential of a 1D f restricted to x in [lo, hi]: the graph is a
// union of horizontal runs (constant slope between breakpoints) and vertical
// fibers (the Clarke interval at each breakpoint).
double graph_distance_1d(const PLFunction& f, double lo, double hi, double x, double xstar);

// CSV export: header x1..xn,xstar1..xstarn, one row per sample.
std::string to_csv(const OperatorGraph& g, int dim);

}  // namespace subdiff
