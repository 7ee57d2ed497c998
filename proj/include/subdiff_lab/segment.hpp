#pragma once

#include <vector>

#include "subdiff_lab/pl_function.hpp"

namespace subdiff {

// Exact 1D profile of t |-> f(a + t(b-a)) on [0,1].
//
// The finite part lives on the closed subinterval [t_lo, t_hi] where the
// segment meets the domain box; knots include every candidate breakpoint
// (pairwise piece crossings and box faces), so the profile is affine between
// adjacent knots and values[i] = f(a + knots[i] (b-a)) exactly.
struct SegmentProfile {
  Point a, b;
  bool all_infinite = false;
  double t_lo = 0, t_hi = 1;
  std::vector<double> knots;   // sorted, knots.front()==t_lo, knots.back()==t_hi
  std::vector<double> values;  // finite values at knots
  std::vector<double> slopes;  // slope on (knots[i], knots[i+1]); size knots.size()-1

  ExtReal value_at(double t) const;
  // Slope of the first affine stretch (+inf when the finite part is a single
  // point or empty).
  ExtReal initial_slope() const;
};

SegmentProfile restrict_to_segment(const PLFunction& f, const Point& a, const Point& b);

struct SegmentMin {
  double t;
  double value;
};

// Exact global minimum over [0,1]; smallest minimizing t on ties.
// Throws EmptyDomainOnSegment when the profile is identically +inf.
SegmentMin minimize_profile(const SegmentProfile& profile);
SegmentMin minimize_on_segment(const PLFunction& f, const Point& a, const Point& b);

}  // namespace subdiff
