#include "subdiff_lab/polytope.hpp"

#include <algorithm>

namespace subdiff {

namespace {

// Gaussian elimination with partial pivoting for the tiny KKT systems
// (at most 5x5). Returns false when the matrix is singular.
bool solve_small(std::vector<std::vector<double>> A, std::vector<double> b,
                 std::vector<double>* out) {
  const size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-13) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double m = A[r][col] / A[col][col];
      if (m == 0) continue;
      for (size_t c = col; c < n; ++c) A[r][c] -= m * A[col][c];
      b[r] -= m * b[col];
    }
  }
  out->resize(n);
  for (size_t i = 0; i < n; ++i) (*out)[i] = b[i] / A[i][i];
  return true;
}

// Distance from x to the convex hull of a simplex of m points, provided the
// unconstrained barycentric solution is feasible; +inf otherwise (a smaller
// subset then carries the optimum).
double dist_to_simplex(const Point& x, const std::vector<const Point*>& v) {
  const size_t m = v.size();
  if (m == 1) return (x - *v[0]).norm2();
  // minimize ||x - sum l_i v_i||^2  s.t. sum l_i = 1:
  // KKT: [2G 1; 1^T 0] [l; mu] = [2 V^T x; 1]
  std::vector<std::vector<double>> A(m + 1, std::vector<double>(m + 1, 0.0));
  std::vector<double> b(m + 1, 0.0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) A[i][j] = 2 * dot(*v[i], *v[j]);
    A[i][m] = 1;
    A[m][i] = 1;
    b[i] = 2 * dot(*v[i], x);
  }
  b[m] = 1;
  std::vector<double> sol;
  if (!solve_small(std::move(A), std::move(b), &sol)) return kPlusInf;
  Point proj = Point::zeros(x.dim());
  for (size_t i = 0; i < m; ++i) {
    if (sol[i] < -1e-12) return kPlusInf;
    proj = proj + sol[i] * *v[i];
  }
  return (x - proj).norm2();
}

}  // namespace

double dist_to_hull(const Point& x, const std::vector<Point>& points) {
  if (points.empty()) throw Error(Errc::EmptySupport, "dist_to_hull: no points");
  // The projection onto the hull lies in a face spanned by at most dim+1
  // vertices (Caratheodory), so the minimum over all small subsets whose
  // unconstrained solution is feasible is exact.
  const size_t n = points.size();
  const size_t kmax = std::min<size_t>(static_cast<size_t>(x.dim()) + 1, n);
  double best = kPlusInf;
  std::vector<const Point*> subset;

  // Enumerate subsets of size 1..kmax via index recursion.
  std::vector<size_t> idx;
  auto rec = [&](auto&& self, size_t start, size_t want) -> void {
    if (idx.size() == want) {
      subset.clear();
      for (size_t i : idx) subset.push_back(&points[i]);
      best = std::min(best, dist_to_simplex(x, subset));
      return;
    }
    for (size_t i = start; i + (want - idx.size()) <= n; ++i) {
      idx.push_back(i);
      self(self, i + 1, want);
      idx.pop_back();
    }
  };
  for (size_t k = 1; k <= kmax; ++k) rec(rec, 0, k);
  return best;
}

Polytope canonicalize(const Polytope& p, double tol) {
  std::vector<Point> pts = p.vertices;
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const Point& a, const Point& b) { return (a - b).norm2() <= tol; }),
            pts.end());
  if (pts.size() > 2) {
    // Keep extreme points only: v is redundant iff it lies within tol of the
    // hull of the others.
    std::vector<Point> keep;
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<Point> others;
      others.reserve(pts.size() - 1);
      for (size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (dist_to_hull(pts[i], others) > tol) keep.push_back(pts[i]);
    }
    if (!keep.empty()) pts = std::move(keep);
  }
  return Polytope(std::move(pts), p.outer);
}

double sup_support(const std::vector<Point>& vertices, const Point& d) {
  if (vertices.empty()) throw Error(Errc::EmptySupport, "sup_support: empty vertex set");
  double m = dot(vertices.front(), d);
  for (size_t i = 1; i < vertices.size(); ++i) m = std::max(m, dot(vertices[i], d));
  return m;
}

double sup_support(const Polytope& p, const Point& d) { return sup_support(p.vertices, d); }

Point support_argmax(const std::vector<Point>& vertices, const Point& d) {
  if (vertices.empty()) throw Error(Errc::EmptySupport, "support_argmax: empty vertex set");
  size_t best = 0;
  for (size_t i = 1; i < vertices.size(); ++i)
    if (dot(vertices[i], d) > dot(vertices[best], d)) best = i;
  return vertices[best];
}

}  // namespace subdiff
