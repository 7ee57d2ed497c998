#include "subdiff_lab/segment.hpp"

#include <algorithm>

namespace subdiff {

namespace {

constexpr double kSlopeEqTol = 1e-9;  // breakpoint-arithmetic tolerance
constexpr double kKnotTol = 1e-12;    // dedup tolerance for knot parameters

// Restriction of the domain box to the segment: the t-interval of
// a + t(b-a) inside the box, intersected with [0,1]. Returns false if empty.
bool clip_to_box(const Box& box, const Point& a, const Point& b, double* t_lo, double* t_hi) {
  double lo = 0, hi = 1;
  for (int i = 0; i < a.dim(); ++i) {
    const double p = a[i], q = b[i] - a[i];
    if (std::abs(q) <= 0) {
      if (p < box.lower[i] || p > box.upper[i]) return false;
      continue;
    }
    double t0 = (box.lower[i] - p) / q;
    double t1 = (box.upper[i] - p) / q;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    if (lo > hi) return false;
  }
  *t_lo = lo;
  *t_hi = hi;
  return true;
}

}  // namespace

ExtReal SegmentProfile::value_at(double t) const {
  if (all_infinite || t < t_lo - kKnotTol || t > t_hi + kKnotTol) return kPlusInf;
  t = std::min(std::max(t, t_lo), t_hi);
  // Locate the stretch containing t and interpolate from its left knot.
  auto it = std::upper_bound(knots.begin(), knots.end(), t);
  size_t i = it == knots.begin() ? 0 : static_cast<size_t>(it - knots.begin()) - 1;
  if (i >= slopes.size()) return values.back();
  return values[i] + slopes[i] * (t - knots[i]);
}

ExtReal SegmentProfile::initial_slope() const {
  if (all_infinite || slopes.empty()) return kPlusInf;
  return slopes.front();
}

SegmentProfile restrict_to_segment(const PLFunction& f, const Point& a, const Point& b) {
  require_same_dim(a, b);
  if (a.dim() != f.dim())
    throw Error(Errc::DimensionMismatch, "restrict_to_segment: dimension mismatch");

  SegmentProfile prof;
  prof.a = a;
  prof.b = b;

  double t_lo = 0, t_hi = 1;
  if (f.domain && !clip_to_box(*f.domain, a, b, &t_lo, &t_hi)) {
    prof.all_infinite = true;
    return prof;
  }
  prof.t_lo = t_lo;
  prof.t_hi = t_hi;

  // Along the segment every piece is a line in t; every breakpoint of
  // min-of-max is a crossing of two such lines, so the pairwise crossings are
  // a sufficient knot set (spurious knots are harmless: the profile stays
  // affine across them).
  std::vector<double> slope, icept;
  const Point dir = b - a;
  for (const auto& comp : f.components)
    for (const auto& p : comp.pieces) {
      slope.push_back(dot(p.gradient, dir));
      icept.push_back(p.value(a));
    }

  std::vector<double> knots;
  knots.push_back(t_lo);
  knots.push_back(t_hi);
  const size_t n = slope.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const double ds = slope[i] - slope[j];
      if (std::abs(ds) <= kSlopeEqTol) continue;
      const double t = (icept[j] - icept[i]) / ds;
      if (t > t_lo + kKnotTol && t < t_hi - kKnotTol) knots.push_back(t);
    }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [](double x, double y) { return y - x <= kKnotTol; }),
              knots.end());
  if (knots.back() < t_hi - kKnotTol) knots.push_back(t_hi);  // unique() may eat t_hi

  prof.knots = std::move(knots);
  prof.values.reserve(prof.knots.size());
  for (double t : prof.knots) {
    // Evaluate directly at the point; the domain was already clipped, so
    // clamp away rounding that would push a knot across a box face.
    Point x = a + t * dir;
    if (f.domain) x = f.domain->clamp(x);
    double m = f.components.front().value(x);
    for (size_t k = 1; k < f.components.size(); ++k) m = std::min(m, f.components[k].value(x));
    prof.values.push_back(m);
  }
  prof.slopes.reserve(prof.knots.size() - 1);
  for (size_t i = 0; i + 1 < prof.knots.size(); ++i) {
    const double dt = prof.knots[i + 1] - prof.knots[i];
    prof.slopes.push_back(dt > 0 ? (prof.values[i + 1] - prof.values[i]) / dt : 0.0);
  }
  return prof;
}

SegmentMin minimize_profile(const SegmentProfile& prof) {
  if (prof.all_infinite)
    throw Error(Errc::EmptyDomainOnSegment, "segment lies entirely outside the domain");
  // Piecewise affine on [t_lo, t_hi]: the minimum sits at a knot. Smallest t
  // wins ties (within the breakpoint value tolerance).
  size_t best = 0;
  for (size_t i = 1; i < prof.values.size(); ++i)
    if (prof.values[i] < prof.values[best] - 1e-12 * (1 + std::abs(prof.values[best])))
      best = i;
  return {prof.knots[best], prof.values[best]};
}

SegmentMin minimize_on_segment(const PLFunction& f, const Point& a, const Point& b) {
  return minimize_profile(restrict_to_segment(f, a, b));
}

}  // namespace subdiff
