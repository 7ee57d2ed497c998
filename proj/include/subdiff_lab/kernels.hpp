#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "subdiff_lab/geometry.hpp"

namespace subdiff::kernels {

// Thread cap for the parallel kernels. Resolution order: explicit
// set_max_threads() > SUBDIFF_LAB_THREADS env var > OpenMP default.
int max_threads();
void set_max_threads(int n);  // n <= 0 restores the default

enum class Exec { Serial, Parallel };

// Serial kernels are the reference implementations; the parallel kernels must
// produce bit-identical results (all reductions use associative, commutative
// combines with index tie-breaks).
Exec default_exec();
void set_default_exec(Exec e);

// Row-major lattice over a box: axis 0 is the outermost index, so ascending
// linear index enumerates points in ascending lexicographic order.
class GridIndexer {
 public:
  explicit GridIndexer(const GridSpec& spec);
  GridIndexer(const Box& region, const std::array<int, 3>& steps);

  int dim() const { return region_.dim(); }
  const Box& region() const { return region_; }
  std::int64_t size() const { return total_; }
  int steps(int axis) const { return steps_[static_cast<size_t>(axis)]; }
  double spacing(int axis) const { return spacing_[static_cast<size_t>(axis)]; }
  double max_spacing() const;
  Point point(std::int64_t index) const;

 private:
  Box region_;
  std::array<int, 3> steps_{};    // cells per axis (points per axis = steps+1)
  std::array<double, 3> spacing_{};
  std::int64_t total_ = 0;
};

struct ArgminResult {
  std::int64_t index = -1;
  double value = kPlusInf;
};

using GridFn = std::function<double(std::int64_t, const Point&)>;
using ValueFn = std::function<double(std::int64_t)>;

// Smallest value over [0, n); smallest index on exact ties.
ArgminResult argmin_n_serial(std::int64_t n, const ValueFn& fn);
ArgminResult argmin_n_parallel(std::int64_t n, const ValueFn& fn);
ArgminResult argmin_n(std::int64_t n, const ValueFn& fn);

// Smallest value over the grid; smallest index on exact ties.
ArgminResult grid_argmin_serial(const GridIndexer& grid, const GridFn& fn);
ArgminResult grid_argmin_parallel(const GridIndexer& grid, const GridFn& fn);
ArgminResult grid_argmin(const GridIndexer& grid, const GridFn& fn);

// Collects fn(i, point) over the grid, dropping empty results; output is in
// ascending index order regardless of execution mode.
template <typename T>
using GridCollectFn = std::function<std::optional<T>(std::int64_t, const Point&)>;

template <typename T>
std::vector<T> grid_collect_serial(const GridIndexer& grid, const GridCollectFn<T>& fn) {
  std::vector<T> out;
  for (std::int64_t i = 0; i < grid.size(); ++i) {
    if (auto r = fn(i, grid.point(i))) out.push_back(std::move(*r));
  }
  return out;
}

template <typename T>
std::vector<T> grid_collect_parallel(const GridIndexer& grid, const GridCollectFn<T>& fn) {
#ifdef _OPENMP
  if (!omp_in_parallel()) {
    const std::int64_t n = grid.size();
    std::vector<std::vector<std::pair<std::int64_t, T>>> parts;
    int used = 1;
#pragma omp parallel num_threads(max_threads())
    {
#pragma omp single
      {
        used = omp_get_num_threads();
        parts.resize(static_cast<size_t>(used));
      }
      auto& mine = parts[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) {
        if (auto r = fn(i, grid.point(i))) mine.emplace_back(i, std::move(*r));
      }
    }
    std::vector<std::pair<std::int64_t, T>> merged;
    for (auto& p : parts)
      for (auto& item : p) merged.push_back(std::move(item));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<T> out;
    out.reserve(merged.size());
    for (auto& item : merged) out.push_back(std::move(item.second));
    return out;
  }
#endif
  return grid_collect_serial<T>(grid, fn);
}

template <typename T>
std::vector<T> grid_collect(const GridIndexer& grid, const GridCollectFn<T>& fn) {
  return default_exec() == Exec::Parallel ? grid_collect_parallel<T>(grid, fn)
                                          : grid_collect_serial<T>(grid, fn);
}

// Minimum of fn(i, j) over all ordered pairs i < j (n >= 2; +inf for n < 2).
using PairFn = std::function<double(std::int64_t, std::int64_t)>;
double pairwise_min_serial(std::int64_t n, const PairFn& fn);
double pairwise_min_parallel(std::int64_t n, const PairFn& fn);
double pairwise_min(std::int64_t n, const PairFn& fn);

// Minimum of fn(i) for i in [0, n).
using IndexFn = std::function<double(std::int64_t)>;
double index_min_serial(std::int64_t n, const IndexFn& fn);
double index_min_parallel(std::int64_t n, const IndexFn& fn);
double index_min(std::int64_t n, const IndexFn& fn);

// fn(i) for i in [0, n) as a vector.
std::vector<double> map_values_serial(std::int64_t n, const ValueFn& fn);
std::vector<double> map_values_parallel(std::int64_t n, const ValueFn& fn);
std::vector<double> map_values(std::int64_t n, const ValueFn& fn);

}  // namespace subdiff::kernels
