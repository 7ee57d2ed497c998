#pragma once

#include <optional>
#include <vector>

#include "subdiff_lab/geometry.hpp"

namespace subdiff {

// One affine piece <gradient, x> + offset.
struct AffinePiece {
  Point gradient;
  double offset = 0;

  AffinePiece() = default;
  AffinePiece(Point g, double b) : gradient(g), offset(b) {}
  double value(const Point& x) const { return dot(gradient, x) + offset; }
};

// Pointwise maximum of finitely many affine pieces: the canonical convex
// piecewise-linear class. Globally Lipschitz with constant max ||a_i||.
struct MaxAffine {
  std::vector<AffinePiece> pieces;

  MaxAffine() = default;
  explicit MaxAffine(std::vector<AffinePiece> p) : pieces(std::move(p)) {
    if (pieces.empty()) throw Error(Errc::BadArgument, "MaxAffine needs at least one piece");
  }
  int dim() const { return pieces.front().gradient.dim(); }
  double value(const Point& x) const {
    double m = pieces.front().value(x);
    for (size_t i = 1; i < pieces.size(); ++i) m = std::max(m, pieces[i].value(x));
    return m;
  }
};

// Proper lower semicontinuous piecewise-linear function: pointwise minimum of
// max-affine components on a closed box domain (+infinity outside). With no
// box the function is finite on all of R^n. Immutable after construction.
struct PLFunction {
  std::vector<MaxAffine> components;
  std::optional<Box> domain;

  PLFunction() = default;
  PLFunction(std::vector<MaxAffine> comps, std::optional<Box> dom = std::nullopt)
      : components(std::move(comps)), domain(std::move(dom)) {
    if (components.empty()) throw Error(Errc::BadArgument, "PLFunction needs a component");
    for (const auto& c : components)
      if (c.dim() != dim()) throw Error(Errc::DimensionMismatch, "component dimension mismatch");
    if (domain && domain->dim() != dim())
      throw Error(Errc::DimensionMismatch, "domain dimension mismatch");
  }

  int dim() const { return components.front().dim(); }
  bool convex() const { return components.size() == 1; }
  size_t piece_count() const {
    size_t n = 0;
    for (const auto& c : components) n += c.pieces.size();
    return n;
  }
  // Euclidean Lipschitz bound max ||a_i||_2 over all pieces.
  double lipschitz() const {
    double L = 0;
    for (const auto& c : components)
      for (const auto& p : c.pieces) L = std::max(L, p.gradient.norm2());
    return L;
  }
  bool in_domain(const Point& x) const { return !domain || domain->contains(x); }
  bool in_interior(const Point& x, double margin = 1e-9) const {
    return !domain || domain->strictly_contains(x, margin);
  }
  // True on the closed domain but within `margin` of a face.
  bool on_boundary(const Point& x, double margin = 1e-9) const {
    return domain && domain->contains(x) && !domain->strictly_contains(x, margin);
  }
};

// min over components of max over pieces, +infinity outside the domain box.
ExtReal evaluate(const PLFunction& f, const Point& x);

// f with every piece offset shifted by `c`.
PLFunction shift(const PLFunction& f, double c);
// f - <xstar, .> : subtracts a linear functional from every piece.
PLFunction minus_linear(const PLFunction& f, const Point& xstar);
// c * f for c > 0 (scales every piece).
PLFunction scale(const PLFunction& f, double c);
// f + g for max-affine g: distributes the sum over min/max.
PLFunction add_maxaffine(const PLFunction& f, const MaxAffine& g);

}  // namespace subdiff
