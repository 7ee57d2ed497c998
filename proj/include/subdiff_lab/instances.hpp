#pragma once

#include <cstdint>

#include "subdiff_lab/pl_function.hpp"

namespace subdiff {

// SplitMix64: the fixed, portable generator behind every seeded suite.
// Substreams are derived by hashing (seed, stream) so instance k of a run is
// reproducible in isolation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double next_double();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool next_bool() { return (next_u64() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

// Deterministic pseudo-random instance: a max-affine (convex) or a min of
// 2-3 max-affines (nonconvex), `pieces` pieces in total (2..16), coefficients
// on the 1/16 lattice in [-4, 4] with zero gradients redrawn, domain box
// [-2, 2]^dim.
PLFunction generate_instance(std::uint64_t seed, int dim, bool convex, int pieces);

// Uniform point in the box shrunk by `margin_frac` of each width.
Point random_interior_point(SplitMix64& rng, const Box& box, double margin_frac = 0.1);

// Nonzero direction with coordinates on the 1/16 lattice in [-2, 2].
Point random_direction(SplitMix64& rng, int dim);

// A point of the box interior separated from every piece-crossing locus it
// does not lie on: each pairwise equality locus is either further than
// `separation` away or passes through the point (within 1e-9). When
// `prefer_kink` is set the search first tries to land exactly on a crossing
// locus. Falls back to the best random candidate after `tries` draws.
Point pick_separated_point(const PLFunction& f, SplitMix64& rng, double separation,
                           bool prefer_kink, int tries = 64);

}  // namespace subdiff
