#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace subdiff {

// Extended reals ]-inf, +inf]. +infinity is the IEEE infinity, used as the
// value of a function outside its domain; -infinity never appears.
using ExtReal = double;
inline constexpr ExtReal kPlusInf = std::numeric_limits<double>::infinity();
inline bool is_finite(ExtReal v) { return std::isfinite(v); }

enum class Errc {
  DimensionMismatch,
  OutsideDomain,
  BoundaryPoint,
  EmptyDomainOnSegment,
  EmptyRegion,
  EmptySupport,
  PreconditionSci,
  PreconditionLambda,
  PreconditionViolated,
  IsActuallyOptimal,
  NoSampleFound,
  ConvexityRequired,
  PieceCapExceeded,
  ParseError,
  BadArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

enum class NormKind { Euclidean, Sup };

// A point of R^n (or a direction, or a dual vector), n <= 3.
class Point {
 public:
  Point() : dim_(0) {}
  explicit Point(double x) : dim_(1) { c_[0] = x; }
  Point(double x, double y) : dim_(2) { c_[0] = x; c_[1] = y; }
  Point(double x, double y, double z) : dim_(3) { c_[0] = x; c_[1] = y; c_[2] = z; }
  static Point zeros(int dim) {
    Point p;
    p.dim_ = check_dim(dim);
    return p;
  }
  static Point from(const std::vector<double>& coords) {
    Point p;
    p.dim_ = check_dim(static_cast<int>(coords.size()));
    for (int i = 0; i < p.dim_; ++i) p.c_[i] = coords[static_cast<size_t>(i)];
    return p;
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  friend Point operator+(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[static_cast<size_t>(i)] += b[i];
    return r;
  }
  friend Point operator-(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[static_cast<size_t>(i)] -= b[i];
    return r;
  }
  friend Point operator*(double t, const Point& a) {
    Point r = a;
    for (int i = 0; i < a.dim_; ++i) r.c_[static_cast<size_t>(i)] *= t;
    return r;
  }

  friend double dot(const Point& a, const Point& b) {
    double s = 0;
    for (int i = 0; i < a.dim_; ++i) s += a[i] * b[i];
    return s;
  }

  double norm2() const { return std::sqrt(dot(*this, *this)); }
  double norm_sup() const {
    double m = 0;
    for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(c_[static_cast<size_t>(i)]));
    return m;
  }
  double norm(NormKind k) const { return k == NormKind::Euclidean ? norm2() : norm_sup(); }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (c_[static_cast<size_t>(i)] != 0.0) return false;
    return true;
  }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  // Lexicographic order; the tie-break order used throughout.
  friend bool lex_less(const Point& a, const Point& b) {
    for (int i = 0; i < a.dim_; ++i) {
      if (a[i] < b[i]) return true;
      if (a[i] > b[i]) return false;
    }
    return false;
  }

  std::vector<double> to_vector() const {
    return std::vector<double>(c_.begin(), c_.begin() + dim_);
  }

 private:
  static int check_dim(int d) {
    if (d < 1 || d > 3) throw Error(Errc::DimensionMismatch, "point dimension must be 1..3");
    return d;
  }
  std::array<double, 3> c_{};
  int dim_;
};

inline void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "dimension mismatch");
}

// Closed axis-aligned box [lower, upper], lower <= upper coordinatewise.
struct Box {
  Point lower;
  Point upper;

  Box() = default;
  Box(Point lo, Point hi) : lower(lo), upper(hi) {
    require_same_dim(lo, hi);
    for (int i = 0; i < lo.dim(); ++i)
      if (!(lo[i] <= hi[i])) throw Error(Errc::EmptyRegion, "box has lower > upper");
  }
  static Box cube(int dim, double lo, double hi) {
    Point l = Point::zeros(dim), u = Point::zeros(dim);
    for (int i = 0; i < dim; ++i) {
      l[i] = lo;
      u[i] = hi;
    }
    return Box(l, u);
  }
  static Box ball_sup(const Point& center, double radius) {
    Point l = center, u = center;
    for (int i = 0; i < center.dim(); ++i) {
      l[i] -= radius;
      u[i] += radius;
    }
    return Box(l, u);
  }

  int dim() const { return lower.dim(); }

  bool contains(const Point& x) const {
    require_same_dim(x, lower);
    for (int i = 0; i < x.dim(); ++i)
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
  }
  bool strictly_contains(const Point& x, double margin) const {
    require_same_dim(x, lower);
    for (int i = 0; i < x.dim(); ++i)
      if (x[i] < lower[i] + margin || x[i] > upper[i] - margin) return false;
    return true;
  }
  // Sup-norm distance from an interior point to the boundary.
  double interior_margin(const Point& x) const {
    double m = kPlusInf;
    for (int i = 0; i < x.dim(); ++i) m = std::min({m, x[i] - lower[i], upper[i] - x[i]});
    return m;
  }
  double width(int axis) const { return upper[axis] - lower[axis]; }
  double max_width() const {
    double w = 0;
    for (int i = 0; i < dim(); ++i) w = std::max(w, width(i));
    return w;
  }
  Point clamp(const Point& x) const {
    Point r = x;
    for (int i = 0; i < x.dim(); ++i) r[i] = std::min(std::max(r[i], lower[i]), upper[i]);
    return r;
  }
  // Box shrunk by `margin` on every face (empty -> throws).
  Box inset(double margin) const {
    Point l = lower, u = upper;
    for (int i = 0; i < dim(); ++i) {
      l[i] += margin;
      u[i] -= margin;
    }
    return Box(l, u);
  }
  // Intersection; nullopt-like signalled by throw on emptiness is awkward, so
  // return a flag.
  bool intersect(const Box& other, Box* out) const {
    Point l = lower, u = upper;
    for (int i = 0; i < dim(); ++i) {
      l[i] = std::max(l[i], other.lower[i]);
      u[i] = std::min(u[i], other.upper[i]);
      if (l[i] > u[i]) return false;
    }
    *out = Box(l, u);
    return true;
  }
};

// Uniform candidate grid over a box region with target resolution h
// (per-axis spacing is the largest value <= h that divides the width evenly;
// endpoints are always included).
struct GridSpec {
  double resolution = 0;
  Box region;

  GridSpec() = default;
  GridSpec(double h, Box r) : resolution(h), region(r) {
    if (!(h > 0)) throw Error(Errc::BadArgument, "grid resolution must be > 0");
  }
  static GridSpec over(const Box& r, double frac = 1.0 / 64) {
    double w = r.max_width();
    return GridSpec(w > 0 ? w * frac : 1.0, r);
  }
  GridSpec refined(double factor = 2.0) const { return GridSpec(resolution / factor, region); }
};

}  // namespace subdiff
