#include "subdiff_lab/minimize.hpp"

#include <algorithm>

namespace subdiff {

namespace {

constexpr double kLocusTol = 1e-9;

struct Line2 {
  // n . x = c
  double nx, ny, c;
};

// Incumbent tracking with exact-value, lexicographic tie-breaking.
struct Incumbent {
  Point x;
  double value = kPlusInf;
  bool valid = false;

  void offer(const Point& cand, double v) {
    if (!valid || v < value || (v == value && lex_less(cand, x))) {
      x = cand;
      value = v;
      valid = true;
    }
  }
};

// All piece lines of f as 2D loci of equality between piece pairs (same or
// different components: any breakpoint of min-of-max lies on one of them).
std::vector<Line2> equality_loci_2d(const PLFunction& f) {
  std::vector<AffinePiece> all;
  for (const auto& comp : f.components)
    for (const auto& p : comp.pieces) all.push_back(p);
  std::vector<Line2> loci;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      const double nx = all[i].gradient[0] - all[j].gradient[0];
      const double ny = all[i].gradient[1] - all[j].gradient[1];
      if (std::abs(nx) <= kLocusTol && std::abs(ny) <= kLocusTol) continue;
      loci.push_back({nx, ny, all[j].offset - all[i].offset});
    }
  return loci;
}

bool intersect_lines(const Line2& a, const Line2& b, Point* out) {
  const double det = a.nx * b.ny - a.ny * b.nx;
  if (std::abs(det) <= kLocusTol) return false;
  *out = Point((a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det);
  return true;
}

// Exact minimization along the segment clamped to the working box.
void refine_along(const PLFunction& f, const Box& box, const Point& center, const Point& dir,
                  double radius, Incumbent* inc) {
  if (dir.is_zero()) return;
  const Point a = box.clamp(center - radius * dir);
  const Point b = box.clamp(center + radius * dir);
  SegmentProfile prof = restrict_to_segment(f, a, b);
  if (prof.all_infinite) return;
  SegmentMin m = minimize_profile(prof);
  inc->offer(box.clamp(a + m.t * (b - a)), m.value);
}

std::vector<Point> search_directions(int dim) {
  std::vector<Point> dirs;
  if (dim == 2) {
    dirs = {Point(1, 0), Point(0, 1), Point(1, 1), Point(1, -1)};
    // A few fixed off-axis directions help leave grooves not aligned with the
    // coordinate frame.
    dirs.push_back(Point(2, 1));
    dirs.push_back(Point(1, 2));
    dirs.push_back(Point(2, -1));
    dirs.push_back(Point(1, -2));
  } else {
    dirs = {Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), Point(1, 1, 1),
            Point(1, 1, -1), Point(1, -1, 1), Point(1, -1, -1)};
    dirs.push_back(Point(2, 1, 0));
    dirs.push_back(Point(0, 2, 1));
    dirs.push_back(Point(1, 0, 2));
  }
  return dirs;
}

}  // namespace

std::vector<double> breakpoints_1d(const PLFunction& f, double lo, double hi) {
  std::vector<double> slope, icept;
  for (const auto& comp : f.components)
    for (const auto& p : comp.pieces) {
      slope.push_back(p.gradient[0]);
      icept.push_back(p.offset);
    }
  std::vector<double> xs{lo, hi};
  for (size_t i = 0; i < slope.size(); ++i)
    for (size_t j = i + 1; j < slope.size(); ++j) {
      const double ds = slope[i] - slope[j];
      if (std::abs(ds) <= kLocusTol) continue;
      const double x = (icept[j] - icept[i]) / ds;
      if (x > lo && x < hi) xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(), [](double a, double b) { return b - a <= 1e-12; }),
           xs.end());
  return xs;
}

BoxMin minimize_on_box(const PLFunction& f, const Box& region, const GridSpec& grid) {
  if (region.dim() != f.dim())
    throw Error(Errc::DimensionMismatch, "minimize_on_box: dimension mismatch");
  Box work = region;
  if (f.domain && !region.intersect(*f.domain, &work))
    throw Error(Errc::EmptyRegion, "region does not meet the domain");

  Incumbent inc;
  if (f.dim() == 1) {
    // Exact: the minimum of a 1D piecewise-affine function over an interval
    // sits at a piece crossing or an endpoint.
    for (double x : breakpoints_1d(f, work.lower[0], work.upper[0]))
      inc.offer(Point(x), evaluate(f, Point(x)));
    return {inc.x, inc.value};
  }

  // Lattice pass at the requested resolution.
  GridSpec sweep(grid.resolution, work);
  kernels::GridIndexer idx(sweep);
  kernels::ArgminResult g = kernels::grid_argmin(
      idx, [&](std::int64_t, const Point& p) { return evaluate(f, p); });
  if (g.index >= 0) inc.offer(idx.point(g.index), g.value);
  const double grid_value = inc.value;

  // Arrangement vertices: in 2D the global minimum lies where two equality
  // loci (or a locus and a box face, or two faces) meet, so enumerating the
  // pairwise intersections makes the search exact when the line count is
  // manageable.
  if (f.dim() == 2) {
    std::vector<Line2> loci = equality_loci_2d(f);
    for (int axis = 0; axis < 2; ++axis) {
      loci.push_back({axis == 0 ? 1.0 : 0.0, axis == 0 ? 0.0 : 1.0, work.lower[axis]});
      loci.push_back({axis == 0 ? 1.0 : 0.0, axis == 0 ? 0.0 : 1.0, work.upper[axis]});
    }
    if (loci.size() <= 1600) {
      std::vector<Point> pts;
      Point p(0, 0);
      for (size_t i = 0; i < loci.size(); ++i)
        for (size_t j = i + 1; j < loci.size(); ++j)
          if (intersect_lines(loci[i], loci[j], &p) && work.contains(p)) pts.push_back(p);
      const std::vector<double> vals = kernels::map_values(
          static_cast<std::int64_t>(pts.size()),
          [&](std::int64_t i) { return evaluate(f, pts[static_cast<size_t>(i)]); });
      for (size_t i = 0; i < pts.size(); ++i) inc.offer(pts[i], vals[i]);
    }
  }

  // Local exact refinement: segment minimizations through the incumbent
  // along coordinate, diagonal and fixed off-axis directions, repeated while
  // they improve.
  const auto dirs = search_directions(f.dim());
  const double radius = std::max(2 * idx.max_spacing(), 1e-6);
  for (int pass = 0; pass < 24; ++pass) {
    const double before = inc.value;
    const Point center = inc.x;
    for (const auto& d : dirs) refine_along(f, work, center, d, radius, &inc);
    if (!(inc.value < before - 1e-15)) break;
  }

  (void)grid_value;  // reported value <= lattice minimum by construction
  return {inc.x, inc.value};
}

BoxMin minimize_on_box(const PLFunction& f, const GridSpec& grid) {
  return minimize_on_box(f, grid.region, grid);
}

}  // namespace subdiff
