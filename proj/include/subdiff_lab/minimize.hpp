#pragma once

#include "subdiff_lab/kernels.hpp"
#include "subdiff_lab/segment.hpp"

namespace subdiff {

struct BoxMin {
  Point x;
  double value;
};

// Global minimum of f over region (intersected with dom f).
//
// 1D is exact: every pairwise piece crossing plus the interval endpoints is
// evaluated. 2D/3D take the lattice minimum at the grid resolution, add the
// vertices of the piece-crossing arrangement when that enumeration is small
// enough (2D), and finish with exact segment minimizations along coordinate,
// diagonal and pseudo-random directions from the incumbent. The reported
// value never exceeds the lattice minimum. Ties resolve to the
// lexicographically smallest candidate.
BoxMin minimize_on_box(const PLFunction& f, const Box& region, const GridSpec& grid);
BoxMin minimize_on_box(const PLFunction& f, const GridSpec& grid);

// All 1D breakpoint abscissae of f inside [lo, hi]: pairwise crossings of
// piece lines plus the endpoints, sorted and deduplicated.
std::vector<double> breakpoints_1d(const PLFunction& f, double lo, double hi);

}  // namespace subdiff
