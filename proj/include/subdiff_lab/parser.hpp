#pragma once

#include <memory>
#include <string>

#include "subdiff_lab/pl_function.hpp"

namespace subdiff {

// Expression AST for the .plf text format. Every leaf path is affine in the
// variables; abs and negative scales apply to affine subtrees only.
//
// Grammar (whitespace-insensitive):
//   input   := expr [ "on" box ]
//   expr    := term (('+'|'-') term)*
//   term    := const '*' factor | const | factor
//   factor  := var | "max(" list ")" | "min(" list ")" | "abs(" expr ")"
//            | '(' expr ')' | '-' factor
//   list    := expr (',' expr)*
//   box     := "box(" lo ',' hi (';' lo ',' hi)* ")"
//   var     := "x" | "y" | "z" | "x1" | "x2" | "x3"
struct ExprNode {
  enum class Kind { Var, Const, Sum, Scale, Max, Min, Abs };
  Kind kind;
  int var_index = 0;   // Var
  double value = 0;    // Const / Scale factor
  std::vector<std::shared_ptr<const ExprNode>> kids;
};
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprAST {
  ExprPtr root;
  std::optional<Box> domain;
  int dim = 1;  // highest variable index used (1 for constant expressions)
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(Errc::ParseError, "parse error at " + std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

ExprAST parse(const std::string& text);

// Direct recursive evaluation of the AST (the reference semantics the
// normalizer must preserve).
double eval_ast(const ExprPtr& node, const Point& x);

bool is_affine(const ExprPtr& node);

// Piece-count cap for normalization blowup.
inline constexpr size_t kMaxPieces = 4096;

// Rewrites the AST into min-of-max-of-affine form: abs(e) -> max(e,-e), sums
// and positive scales distribute over min/max. Throws PieceCapExceeded past
// kMaxPieces pieces.
PLFunction normalize(const ExprAST& ast);

// Canonical text form; parse(format(f)) evaluates identically to f.
std::string format(const PLFunction& f);

// Canonical shortest round-trip decimal for a double.
std::string format_number(double v);

// Region syntax shared with the CLI: "box(lo,hi)" / "box(l1,u1; l2,u2; ...)".
Box parse_box(const std::string& text);

}  // namespace subdiff
