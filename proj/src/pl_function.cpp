#include "subdiff_lab/pl_function.hpp"

namespace subdiff {

ExtReal evaluate(const PLFunction& f, const Point& x) {
  if (x.dim() != f.dim()) throw Error(Errc::DimensionMismatch, "evaluate: dimension mismatch");
  if (!f.in_domain(x)) return kPlusInf;
  double m = f.components.front().value(x);
  for (size_t k = 1; k < f.components.size(); ++k) m = std::min(m, f.components[k].value(x));
  return m;
}

PLFunction shift(const PLFunction& f, double c) {
  PLFunction g = f;
  for (auto& comp : g.components)
    for (auto& p : comp.pieces) p.offset += c;
  return g;
}

PLFunction minus_linear(const PLFunction& f, const Point& xstar) {
  require_same_dim(f.components.front().pieces.front().gradient, xstar);
  PLFunction g = f;
  for (auto& comp : g.components)
    for (auto& p : comp.pieces) p.gradient = p.gradient - xstar;
  return g;
}

PLFunction scale(const PLFunction& f, double c) {
  if (!(c > 0)) throw Error(Errc::BadArgument, "scale: factor must be positive");
  PLFunction g = f;
  for (auto& comp : g.components)
    for (auto& p : comp.pieces) {
      p.gradient = c * p.gradient;
      p.offset *= c;
    }
  return g;
}

PLFunction add_maxaffine(const PLFunction& f, const MaxAffine& g) {
  if (g.dim() != f.dim()) throw Error(Errc::DimensionMismatch, "add_maxaffine: dimension mismatch");
  std::vector<MaxAffine> comps;
  comps.reserve(f.components.size());
  for (const auto& comp : f.components) {
    std::vector<AffinePiece> pieces;
    pieces.reserve(comp.pieces.size() * g.pieces.size());
    for (const auto& p : comp.pieces)
      for (const auto& q : g.pieces)
        pieces.emplace_back(p.gradient + q.gradient, p.offset + q.offset);
    comps.emplace_back(std::move(pieces));
  }
  return PLFunction(std::move(comps), f.domain);
}

}  // namespace subdiff
