#include "subdiff_lab/calculus.hpp"

#include <algorithm>
#include <cmath>

namespace subdiff {

namespace {

double activity_threshold(double fx) { return kActivityTol * (1 + std::abs(fx)); }

bool sample_less(const SubgradientSample& a, const SubgradientSample& b) {
  if (lex_less(a.x, b.x)) return true;
  if (lex_less(b.x, a.x)) return false;
  return lex_less(a.xstar, b.xstar);
}

bool sample_eq(const SubgradientSample& a, const SubgradientSample& b) {
  return a.x == b.x && a.xstar == b.xstar;
}

// One enlargement candidate with its three filter statistics, so a single
// grid sweep serves a whole epsilon schedule.
struct RawSample {
  SubgradientSample s;
  double ball_dist;
  double value_dist;
  double pairing;  // <xstar, x - xbar>
};

std::vector<RawSample> enlargement_candidates(const PLFunction& f, const Point& xbar,
                                              double eps_max, const GridSpec& grid,
                                              NormKind ball_norm) {
  const ExtReal fxbar = evaluate(f, xbar);
  if (!is_finite(fxbar))
    throw Error(Errc::OutsideDomain, "eps_enlargement: xbar outside dom f");

  kernels::GridIndexer idx(grid);
  auto raw = kernels::grid_collect<std::vector<RawSample>>(
      idx,
      [&](std::int64_t, const Point& p) -> std::optional<std::vector<RawSample>> {
        const double dist = (p - xbar).norm(ball_norm);
        if (dist > eps_max + 1e-12) return std::nullopt;
        if (!f.in_interior(p)) return std::nullopt;
        const double fp = evaluate(f, p);
        const double vdist = std::abs(fp - fxbar);
        if (vdist > eps_max + 1e-12) return std::nullopt;
        std::vector<RawSample> out;
        for (const auto& v : subdifferential(f, p).vertices)
          out.push_back({{p, fp, v}, dist, vdist, dot(v, p - xbar)});
        return out.empty() ? std::nullopt : std::make_optional(std::move(out));
      });

  std::vector<RawSample> flat;
  for (auto& chunk : raw)
    for (auto& r : chunk) flat.push_back(std::move(r));

  // xbar's own subgradients pass every filter (the pairing is 0).
  if (f.in_interior(xbar)) {
    for (const auto& v : subdifferential(f, xbar).vertices)
      flat.push_back({{xbar, fxbar, v}, 0.0, 0.0, 0.0});
  }
  std::sort(flat.begin(), flat.end(),
            [](const RawSample& a, const RawSample& b) { return sample_less(a.s, b.s); });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const RawSample& a, const RawSample& b) { return sample_eq(a.s, b.s); }),
             flat.end());
  return flat;
}

std::vector<SubgradientSample> filter_candidates(const std::vector<RawSample>& raw, double eps) {
  std::vector<SubgradientSample> out;
  const double slack = eps + 1e-12;
  for (const auto& r : raw)
    if (r.ball_dist <= slack && r.value_dist <= slack && r.pairing <= slack) out.push_back(r.s);
  return out;
}

}  // namespace

ExtReal directional_derivative(const PLFunction& f, const Point& xbar, const Point& d) {
  require_same_dim(xbar, d);
  const ExtReal fx = evaluate(f, xbar);
  if (!is_finite(fx))
    throw Error(Errc::OutsideDomain, "directional_derivative: xbar outside dom f");
  if (d.is_zero()) return 0;

  if (f.in_interior(xbar)) {
    // Active-set form: for small t only the active components and their
    // active pieces matter, and each contributes exactly <a_i, d> per unit t.
    const double tol = activity_threshold(fx);
    double mn = kPlusInf;
    for (const auto& comp : f.components) {
      const double cv = comp.value(xbar);
      if (std::abs(cv - fx) > tol) continue;
      double mx = -kPlusInf;
      for (const auto& p : comp.pieces)
        if (std::abs(p.value(xbar) - cv) <= tol) mx = std::max(mx, dot(p.gradient, d));
      mn = std::min(mn, mx);
    }
    return mn;
  }

  // Domain-boundary point: read the slope off the exact segment profile;
  // +inf when every small step leaves the domain.
  SegmentProfile prof = restrict_to_segment(f, xbar, xbar + d);
  if (prof.all_infinite || prof.t_lo > 1e-12) return kPlusInf;
  return prof.initial_slope();
}

Polytope subdifferential(const PLFunction& f, const Point& x) {
  const ExtReal fx = evaluate(f, x);
  if (!is_finite(fx)) throw Error(Errc::OutsideDomain, "subdifferential: x outside dom f");
  if (f.on_boundary(x))
    throw Error(Errc::BoundaryPoint,
                "subdifferential: x on the domain boundary (normal cones unsupported)");
  const double tol = activity_threshold(fx);

  if (f.convex()) {
    std::vector<Point> verts;
    for (const auto& p : f.components.front().pieces)
      if (std::abs(p.value(x) - fx) <= tol) verts.push_back(p.gradient);
    return canonicalize(Polytope(std::move(verts)));
  }

  if (f.dim() == 1) {
    // Exact Clarke interval between the one-sided slopes.
    const double right = directional_derivative(f, x, Point(1.0));
    const double left = -directional_derivative(f, x, Point(-1.0));
    std::vector<Point> verts{Point(std::min(left, right)), Point(std::max(left, right))};
    return canonicalize(Polytope(std::move(verts)));
  }

  // Active-gradient hull: an outer approximation of the Clarke set.
  std::vector<Point> verts;
  for (const auto& comp : f.components) {
    if (std::abs(comp.value(x) - fx) > tol) continue;
    for (const auto& p : comp.pieces)
      if (std::abs(p.value(x) - comp.value(x)) <= tol) verts.push_back(p.gradient);
  }
  return canonicalize(Polytope(std::move(verts), /*outer=*/true));
}

double subdiff_distance(const PLFunction& f, const Point& x, const Point& xstar) {
  return dist_to_hull(xstar, subdifferential(f, x).vertices);
}

bool subdiff_contains(const PLFunction& f, const Point& x, const Point& xstar, double tol,
                      const std::optional<GridSpec>& grid) {
  const ExtReal fx = evaluate(f, x);
  if (!is_finite(fx)) throw Error(Errc::OutsideDomain, "subdiff_contains: x outside dom f");
  if (f.on_boundary(x))
    throw Error(Errc::BoundaryPoint, "subdiff_contains: x on the domain boundary");

  if (!f.convex()) return subdiff_distance(f, x, xstar) <= tol;

  // Convex case: test the defining inequality on a grid of y, independently
  // of the hull construction.
  GridSpec g = grid ? *grid : GridSpec::over(f.domain ? *f.domain : Box::ball_sup(x, 2.0));
  kernels::GridIndexer idx(g);
  const double worst = kernels::index_min(idx.size(), [&](std::int64_t i) {
    const Point y = idx.point(i);
    const ExtReal fy = evaluate(f, y);
    if (!is_finite(fy)) return kPlusInf;
    return fy - dot(xstar, y - x) - fx;
  });
  return worst >= -tol;
}

std::vector<SubgradientSample> eps_enlargement(const PLFunction& f, const Point& xbar, double eps,
                                               const GridSpec& grid, NormKind ball_norm) {
  if (!(eps > 0)) throw Error(Errc::BadArgument, "eps_enlargement: eps must be > 0");
  return filter_candidates(enlargement_candidates(f, xbar, eps, grid, ball_norm), eps);
}

double sup_support(const std::vector<SubgradientSample>& samples, const Point& d) {
  if (samples.empty())
    throw Error(Errc::EmptySupport, "sup_support: empty enlargement (nonemptiness violated)");
  double m = dot(samples.front().xstar, d);
  for (size_t i = 1; i < samples.size(); ++i) m = std::max(m, dot(samples[i].xstar, d));
  return m;
}

LinkReport verify_link(const PLFunction& f, const Point& xbar, const Point& d,
                       const std::vector<double>& eps_schedule, const GridSpec& grid, double tol,
                       NormKind ball_norm) {
  if (eps_schedule.empty()) throw Error(Errc::BadArgument, "verify_link: empty schedule");
  for (size_t i = 0; i < eps_schedule.size(); ++i) {
    if (!(eps_schedule[i] > 0) || (i > 0 && !(eps_schedule[i] < eps_schedule[i - 1])))
      throw Error(Errc::BadArgument, "verify_link: schedule must be strictly decreasing, positive");
  }
  if (d.is_zero()) throw Error(Errc::BadArgument, "verify_link: direction must be nonzero");
  if (!f.in_interior(xbar))
    throw Error(Errc::BoundaryPoint, "verify_link: xbar must be interior to dom f");

  LinkReport report;
  report.fprime = directional_derivative(f, xbar, d);
  report.pass = true;

  const auto raw = enlargement_candidates(f, xbar, eps_schedule.front(), grid, ball_norm);
  for (double eps : eps_schedule) {
    const auto samples = filter_candidates(raw, eps);
    LinkReport::Entry entry{eps, std::nan(""), static_cast<int>(samples.size())};
    if (samples.empty()) {
      report.pass = false;  // nonemptiness violated: loud, diagnosable failure
    } else {
      entry.sup = sup_support(samples, d);
      if (!(report.fprime <= entry.sup + tol)) report.pass = false;
    }
    report.schedule.push_back(entry);
  }

  if (f.convex() && !report.schedule.empty() && std::isfinite(report.schedule.back().sup)) {
    const double gap = std::abs(report.fprime - report.schedule.back().sup);
    const double h = kernels::GridIndexer(grid).max_spacing();
    report.convex_gap = gap;
    report.convex_equal = gap <= 1e-6 + 2 * h * f.lipschitz();
  }
  return report;
}

}  // namespace subdiff
