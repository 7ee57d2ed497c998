#include "subdiff_lab/variational.hpp"

#include <algorithm>
#include <cmath>

namespace subdiff {

namespace {

// (eps/lambda) * ||y - center||_sup as a max-affine function (2n pieces).
MaxAffine sup_norm_penalty(const Point& center, double weight, int dim) {
  std::vector<AffinePiece> pieces;
  for (int i = 0; i < dim; ++i) {
    Point g = Point::zeros(dim);
    g[i] = weight;
    pieces.emplace_back(g, -weight * center[i]);
    g[i] = -weight;
    pieces.emplace_back(g, weight * center[i]);
  }
  return MaxAffine(std::move(pieces));
}

// Probe lattice over B_sup(x_eps, lambda/4) /\ B_sup(xbar, lambda) with about
// `budget` points in total.
kernels::GridIndexer probe_lattice(const Point& xbar, const Point& x_eps, double lambda,
                                   int budget) {
  Box probe(Box::ball_sup(x_eps, lambda / 4));
  Box clipped = probe;
  (void)probe.intersect(Box::ball_sup(xbar, lambda), &clipped);  // nonempty: x_eps is in both
  const int dim = xbar.dim();
  const int per_axis =
      std::max(2, static_cast<int>(std::round(std::pow(static_cast<double>(budget), 1.0 / dim))));
  std::array<int, 3> steps{};
  for (int i = 0; i < dim; ++i) steps[static_cast<size_t>(i)] = per_axis - 1;
  return kernels::GridIndexer(clipped, steps);
}

double probe_gap(const PLFunction& f, const Point& xbar, const Point& x_eps, double eps,
                 double lambda, int budget, Point* best_probe) {
  const double fxe = evaluate(f, x_eps);
  const double weight = eps / lambda;
  kernels::GridIndexer idx = probe_lattice(xbar, x_eps, lambda, budget);
  // gap = max over probes of fxe - [f(y) + w ||y - x_eps||]; > 0 means some
  // probe beats the witness.
  const double worst = kernels::index_min(idx.size(), [&](std::int64_t i) {
    const Point y = idx.point(i);
    const ExtReal fy = evaluate(f, y);
    if (!is_finite(fy)) return kPlusInf;
    return fy + weight * (y - x_eps).norm_sup() - fxe;
  });
  if (best_probe) {
    // Deterministic recovery of the argmin probe for the improvement loop.
    kernels::ArgminResult a = kernels::argmin_n(idx.size(), [&](std::int64_t i) {
      const Point y = idx.point(i);
      const ExtReal fy = evaluate(f, y);
      if (!is_finite(fy)) return kPlusInf;
      return fy + weight * (y - x_eps).norm_sup() - fxe;
    });
    if (a.index >= 0) *best_probe = idx.point(a.index);
  }
  return is_finite(worst) ? -worst : 0.0;
}

}  // namespace

EkelandWitness ekeland_point(const PLFunction& f, const Point& xbar, double eps, double lambda,
                             int probe_points) {
  if (!(eps > 0) || !(lambda > 0))
    throw Error(Errc::BadArgument, "ekeland_point: eps and lambda must be > 0");
  const ExtReal fxbar = evaluate(f, xbar);
  if (!is_finite(fxbar)) throw Error(Errc::OutsideDomain, "ekeland_point: xbar outside dom f");

  double radius = lambda;
  Point x_eps = xbar;
  for (int attempt = 0;; ++attempt) {
    const Box ball = Box::ball_sup(xbar, radius);
    const GridSpec sweep = GridSpec::over(ball);
    const BoxMin inf_ball = minimize_on_box(f, ball, sweep);  // throws if ball misses dom
    if (!(fxbar <= inf_ball.value + eps + 1e-12))
      throw Error(Errc::PreconditionSci,
                  "ekeland_point: f(xbar) exceeds inf over the ball by more than eps");

    const PLFunction perturbed = add_maxaffine(f, sup_norm_penalty(xbar, eps / radius, f.dim()));
    const BoxMin best = minimize_on_box(perturbed, ball, sweep);
    x_eps = best.x;
    // The strict inequality ||x_eps - xbar|| < lambda comes from picking the
    // radius inside the lsc neighbourhood; mirror it by retrying once with a
    // nudged radius when the argmin lands exactly on the sphere.
    if ((x_eps - xbar).norm_sup() >= radius - 1e-9 && attempt == 0) {
      radius *= 1 + 1e-6;
      continue;
    }
    break;
  }

  // The argmin is a global minimizer on the ball of the recentred objective
  // (triangle inequality), so no probe can beat it; iterate to absorb any
  // slack the lattice search left in dimension >= 2.
  EkelandWitness w{x_eps, radius, eps, evaluate(f, x_eps), 0.0};
  for (int round = 0; round < 32; ++round) {
    Point better = w.x_eps;
    const double gap = probe_gap(f, xbar, w.x_eps, eps, radius, probe_points, &better);
    w.perturbed_min_gap = gap;
    if (gap <= 1e-12) break;
    w.x_eps = better;
    w.f_x_eps = evaluate(f, w.x_eps);
  }
  return w;
}

double ekeland_probe_gap(const PLFunction& f, const Point& xbar, const EkelandWitness& w,
                         int probe_points) {
  return probe_gap(f, xbar, w.x_eps, w.eps, w.lambda, probe_points, nullptr);
}

MVIWitness mean_value_witness(const PLFunction& f, const Point& x, const Point& xbar,
                              double lambda) {
  require_same_dim(x, xbar);
  const ExtReal fx = evaluate(f, x);
  if (!is_finite(fx)) throw Error(Errc::OutsideDomain, "mean_value_witness: x outside dom f");
  const ExtReal fxbar = evaluate(f, xbar);
  if (is_finite(fxbar) && !(lambda <= fxbar - fx + 1e-12))
    throw Error(Errc::PreconditionLambda,
                "mean_value_witness: lambda must not exceed f(xbar) - f(x)");

  // Minimize g(t) = f(x + t(xbar-x)) - t lambda exactly over the profile
  // knots; g(0) <= g(1) makes t = 1 unreachable up to rounding.
  const SegmentProfile prof = restrict_to_segment(f, x, xbar);
  size_t best = 0;
  for (size_t i = 1; i < prof.knots.size(); ++i) {
    const double gi = prof.values[i] - prof.knots[i] * lambda;
    const double gb = prof.values[best] - prof.knots[best] * lambda;
    if (gi < gb - 1e-12 * (1 + std::abs(gb))) best = i;
  }
  if (prof.knots[best] >= 1.0 && best > 0) --best;  // rounding guard

  MVIWitness w;
  w.t0 = prof.knots[best];
  w.x0 = x + w.t0 * (xbar - x);
  if (f.domain) w.x0 = f.domain->clamp(w.x0);
  w.f_x0 = prof.values[best];
  w.dd = directional_derivative(f, w.x0, xbar - x);
  return w;
}

SubgradientSample find_enlarged_subgradient(const PLFunction& f, const Point& xbar,
                                            const Point& d, double lambda, double eps,
                                            const GridSpec& grid, double tol) {
  const auto samples = eps_enlargement(f, xbar, eps, grid);
  for (const auto& s : samples)
    if (dot(s.xstar, d) >= lambda - tol) return s;
  throw Error(Errc::NoSampleFound,
              "find_enlarged_subgradient: no sample pairs above lambda at this resolution; "
              "refine the grid");
}

}  // namespace subdiff
