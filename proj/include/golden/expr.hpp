#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "golden/types.hpp"

namespace golden {

/// Raised on malformed source text. `offset` is the byte position of the
/// token that triggered the failure.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t offset_)
      : std::runtime_error(what + " (at byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
};

/// Raised on evaluation-domain failures (division by zero, log of a
/// non-positive value, ...). Carries the offending subexpression in
/// printed form.
struct EvalError : std::runtime_error {
  std::string subexpression;
  EvalError(const std::string& what, std::string subexpression_)
      : std::runtime_error(what + " in '" + subexpression_ + "'"),
        subexpression(std::move(subexpression_)) {}
};

enum class UnaryOp : std::uint8_t { Neg, Sin, Cos, Exp, Log, Sqrt };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Pow };

/// Value, gradient and symmetric Hessian of a scalar at a point.
/// Closed under the arithmetic below (second-order truncated Taylor algebra).
struct Jet2 {
  double value = 0.0;
  Vec grad;
  Mat hess;

  static Jet2 constant(double c, int dim);
  static Jet2 variable(double x, int index, int dim);
  int dim() const { return static_cast<int>(grad.size()); }
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 jet_apply(UnaryOp op, const Jet2& a);
Jet2 jet_pow(const Jet2& base, double exponent);

/// Immutable expression tree over named coordinates. Nodes live in an arena
/// with children strictly before parents, so evaluation is a single forward
/// pass. Trees are built either by `parse_expression` or by the combinators,
/// which clone their operands (specs stay value types).
class ExpressionAst {
 public:
  struct Node {
    enum class Kind : std::uint8_t { Number, Variable, Unary, Binary };
    Kind kind = Kind::Number;
    double number = 0.0;
    int var_index = -1;
    UnaryOp unary = UnaryOp::Neg;
    BinaryOp binary = BinaryOp::Add;
    int lhs = -1;
    int rhs = -1;
  };

  ExpressionAst() = default;

  static ExpressionAst number(double value);
  static ExpressionAst variable(int index);
  static ExpressionAst unary(UnaryOp op, const ExpressionAst& inner);
  static ExpressionAst binary(BinaryOp op, const ExpressionAst& lhs,
                              const ExpressionAst& rhs);
  /// Pow node; the exponent is always a numeric literal.
  static ExpressionAst power(const ExpressionAst& base, double exponent);

  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  const std::vector<std::string>& coordinate_names() const { return coords_; }
  void set_coordinate_names(std::vector<std::string> names);

  /// Largest variable index referenced, or -1 for constant trees.
  int max_variable_index() const;

  bool structurally_equal(const ExpressionAst& other) const;

  std::string pretty() const;

  double evaluate(const Vec& point) const;
  Jet2 jet(const Vec& point) const;

 private:
  std::vector<Node> nodes_;
  std::vector<int> order_;  // reachable nodes, children first
  int root_ = -1;
  std::vector<std::string> coords_;

  int clone_into(std::vector<Node>& out, int node) const;
  void finalize();
  std::string print_node(int node) const;

  friend class Parser;
};

/// Parses the expression grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" factor)?            (right associative)
///   base   := number | ident | ident "(" expr ")" | "(" expr ")" | "-" factor
/// Functions: sin cos exp log sqrt. Builtins: sigma, sigbar (numeric
/// constants). Every other identifier must be a coordinate name. Pow
/// exponents must be constant subexpressions; they are folded to literals.
ExpressionAst parse_expression(std::string_view source,
                               const std::vector<std::string>& coordinate_names);

Jet2 jet_evaluate(const ExpressionAst& expr, const Vec& point);

/// shift + scale * e, with constant folding when `e` is a literal.
ExpressionAst scale_shift(const ExpressionAst& e, double scale, double shift);

}  // namespace golden
