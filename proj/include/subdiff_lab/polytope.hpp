#pragma once

#include <vector>

#include "subdiff_lab/geometry.hpp"

namespace subdiff {

// V-representation polytope in the dual space. Canonical form keeps only the
// extreme points, sorted lexicographically. `outer` marks sets that are outer
// approximations rather than exact (the active-gradient hull of nonconvex
// functions in dimension >= 2).
struct Polytope {
  std::vector<Point> vertices;
  bool outer = false;

  Polytope() = default;
  explicit Polytope(std::vector<Point> v, bool outer_flag = false)
      : vertices(std::move(v)), outer(outer_flag) {
    if (vertices.empty()) throw Error(Errc::EmptySupport, "polytope needs a vertex");
  }
  int dim() const { return vertices.front().dim(); }
};

// Drops duplicate and hull-interior points, sorts lexicographically.
Polytope canonicalize(const Polytope& p, double tol = 1e-9);

// Euclidean distance from x to conv(points). Exact: enumerates simplices of
// up to dim+1 points (Caratheodory) and solves each tiny equality-constrained
// least squares problem.
double dist_to_hull(const Point& x, const std::vector<Point>& points);

// Support function max <v, d> over the vertices. Throws EmptySupport on an
// empty vertex list (a nonempty set is part of every caller's contract, so an
// empty input is surfaced loudly).
double sup_support(const Polytope& p, const Point& d);
double sup_support(const std::vector<Point>& vertices, const Point& d);
// Vertex attaining the support maximum (smallest index on ties).
Point support_argmax(const std::vector<Point>& vertices, const Point& d);

}  // namespace subdiff
