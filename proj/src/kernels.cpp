#include "subdiff_lab/kernels.hpp"

#include <cmath>
#include <cstdlib>

namespace subdiff::kernels {

namespace {

int env_threads() {
  const char* s = std::getenv("SUBDIFF_LAB_THREADS");
  if (!s) return 0;
  int n = std::atoi(s);
  return n > 0 ? n : 0;
}

int g_max_threads = 0;  // 0 = unset
Exec g_exec = Exec::Parallel;

ArgminResult combine(ArgminResult a, ArgminResult b) {
  if (b.index < 0) return a;
  if (a.index < 0) return b;
  if (b.value < a.value) return b;
  if (a.value < b.value) return a;
  return b.index < a.index ? b : a;
}

}  // namespace

int max_threads() {
  if (g_max_threads > 0) return g_max_threads;
  if (int n = env_threads(); n > 0) return n;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_max_threads(int n) { g_max_threads = n > 0 ? n : 0; }

Exec default_exec() { return g_exec; }
void set_default_exec(Exec e) { g_exec = e; }

GridIndexer::GridIndexer(const GridSpec& spec) : region_(spec.region) {
  total_ = 1;
  for (int i = 0; i < region_.dim(); ++i) {
    const double w = region_.width(i);
    int s = w > 0 ? static_cast<int>(std::ceil(w / spec.resolution - 1e-12)) : 0;
    steps_[static_cast<size_t>(i)] = std::max(s, 0);
    spacing_[static_cast<size_t>(i)] = s > 0 ? w / s : 0.0;
    total_ *= s + 1;
  }
}

GridIndexer::GridIndexer(const Box& region, const std::array<int, 3>& steps) : region_(region) {
  total_ = 1;
  for (int i = 0; i < region_.dim(); ++i) {
    int s = std::max(steps[static_cast<size_t>(i)], 0);
    steps_[static_cast<size_t>(i)] = s;
    spacing_[static_cast<size_t>(i)] = s > 0 ? region_.width(i) / s : 0.0;
    total_ *= s + 1;
  }
}

double GridIndexer::max_spacing() const {
  double h = 0;
  for (int i = 0; i < dim(); ++i) h = std::max(h, spacing_[static_cast<size_t>(i)]);
  return h;
}

Point GridIndexer::point(std::int64_t index) const {
  Point p = Point::zeros(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    const int s = steps_[static_cast<size_t>(i)];
    const std::int64_t k = index % (s + 1);
    index /= s + 1;
    // Hit the endpoints exactly.
    p[i] = k == s ? region_.upper[i] : region_.lower[i] + static_cast<double>(k) * spacing_[static_cast<size_t>(i)];
  }
  return p;
}

ArgminResult argmin_n_serial(std::int64_t n, const ValueFn& fn) {
  ArgminResult best;
  for (std::int64_t i = 0; i < n; ++i) best = combine(best, {i, fn(i)});
  return best;
}

ArgminResult argmin_n_parallel(std::int64_t n, const ValueFn& fn) {
#ifdef _OPENMP
  if (!omp_in_parallel()) {
    ArgminResult best;
#pragma omp parallel num_threads(max_threads())
    {
      ArgminResult mine;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) mine = combine(mine, {i, fn(i)});
#pragma omp critical(subdiff_argmin)
      best = combine(best, mine);
    }
    return best;
  }
#endif
  return argmin_n_serial(n, fn);
}

ArgminResult argmin_n(std::int64_t n, const ValueFn& fn) {
  return g_exec == Exec::Parallel ? argmin_n_parallel(n, fn) : argmin_n_serial(n, fn);
}

ArgminResult grid_argmin_serial(const GridIndexer& grid, const GridFn& fn) {
  return argmin_n_serial(grid.size(), [&](std::int64_t i) { return fn(i, grid.point(i)); });
}

ArgminResult grid_argmin_parallel(const GridIndexer& grid, const GridFn& fn) {
  return argmin_n_parallel(grid.size(), [&](std::int64_t i) { return fn(i, grid.point(i)); });
}

ArgminResult grid_argmin(const GridIndexer& grid, const GridFn& fn) {
  return g_exec == Exec::Parallel ? grid_argmin_parallel(grid, fn) : grid_argmin_serial(grid, fn);
}

double pairwise_min_serial(std::int64_t n, const PairFn& fn) {
  double m = kPlusInf;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j) m = std::min(m, fn(i, j));
  return m;
}

double pairwise_min_parallel(std::int64_t n, const PairFn& fn) {
#ifdef _OPENMP
  if (!omp_in_parallel()) {
    double m = kPlusInf;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : m) num_threads(max_threads())
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = i + 1; j < n; ++j) m = std::min(m, fn(i, j));
    return m;
  }
#endif
  return pairwise_min_serial(n, fn);
}

double pairwise_min(std::int64_t n, const PairFn& fn) {
  return g_exec == Exec::Parallel ? pairwise_min_parallel(n, fn) : pairwise_min_serial(n, fn);
}

double index_min_serial(std::int64_t n, const IndexFn& fn) {
  double m = kPlusInf;
  for (std::int64_t i = 0; i < n; ++i) m = std::min(m, fn(i));
  return m;
}

double index_min_parallel(std::int64_t n, const IndexFn& fn) {
#ifdef _OPENMP
  if (!omp_in_parallel()) {
    double m = kPlusInf;
#pragma omp parallel for schedule(static) reduction(min : m) num_threads(max_threads())
    for (std::int64_t i = 0; i < n; ++i) m = std::min(m, fn(i));
    return m;
  }
#endif
  return index_min_serial(n, fn);
}

double index_min(std::int64_t n, const IndexFn& fn) {
  return g_exec == Exec::Parallel ? index_min_parallel(n, fn) : index_min_serial(n, fn);
}

std::vector<double> map_values_serial(std::int64_t n, const ValueFn& fn) {
  std::vector<double> out(static_cast<size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<size_t>(i)] = fn(i);
  return out;
}

std::vector<double> map_values_parallel(std::int64_t n, const ValueFn& fn) {
#ifdef _OPENMP
  if (!omp_in_parallel()) {
    std::vector<double> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<size_t>(i)] = fn(i);
    return out;
  }
#endif
  return map_values_serial(n, fn);
}

std::vector<double> map_values(std::int64_t n, const ValueFn& fn) {
  return g_exec == Exec::Parallel ? map_values_parallel(n, fn) : map_values_serial(n, fn);
}

}  // namespace subdiff::kernels
