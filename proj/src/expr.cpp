#include "golden/expr.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace golden {

namespace {

bool is_integer_exponent(double c) {
  return c == std::rint(c) && std::abs(c) < 2147483648.0;
}

double eval_pow(double v, double c, const char** err) {
  if (is_integer_exponent(c)) {
    if (v == 0.0 && c < 0.0) {
      *err = "zero base with negative exponent";
      return 0.0;
    }
    return std::pow(v, c);
  }
  if (v <= 0.0) {
    *err = "non-integer exponent requires a positive base";
    return 0.0;
  }
  return std::pow(v, c);
}

}  // namespace

Jet2 Jet2::constant(double c, int dim) {
  Jet2 j;
  j.value = c;
  j.grad = Vec::Zero(dim);
  j.hess = Mat::Zero(dim, dim);
  return j;
}

Jet2 Jet2::variable(double x, int index, int dim) {
  Jet2 j = constant(x, dim);
  j.grad(index) = 1.0;
  return j;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.value + b.value, a.grad + b.grad, a.hess + b.hess};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.value - b.value, a.grad - b.grad, a.hess - b.hess};
}

// Second-order Leibniz rule: (ab)'' = a''b + 2a'b' + ab''.
Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 j;
  j.value = a.value * b.value;
  j.grad = a.value * b.grad + b.value * a.grad;
  j.hess = a.value * b.hess + b.value * a.hess + a.grad * b.grad.transpose() +
           b.grad * a.grad.transpose();
  return j;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.value == 0.0) throw std::domain_error("division by zero");
  const double iv = 1.0 / b.value;
  Jet2 inv;
  inv.value = iv;
  inv.grad = -iv * iv * b.grad;
  inv.hess = -iv * iv * b.hess + 2.0 * iv * iv * iv * b.grad * b.grad.transpose();
  return a * inv;
}

namespace {

// f(a) via the chain rule: grad = f' a', hess = f' a'' + f'' a' a'^T.
Jet2 chain(const Jet2& a, double f0, double f1, double f2) {
  Jet2 j;
  j.value = f0;
  j.grad = f1 * a.grad;
  j.hess = f1 * a.hess + f2 * a.grad * a.grad.transpose();
  return j;
}

bool is_constant_jet(const Jet2& a) {
  return a.grad.isZero(0.0) && a.hess.isZero(0.0);
}

}  // namespace

Jet2 jet_apply(UnaryOp op, const Jet2& a) {
  const double v = a.value;
  switch (op) {
    case UnaryOp::Neg:
      return {-a.value, -a.grad, -a.hess};
    case UnaryOp::Sin:
      return chain(a, std::sin(v), std::cos(v), -std::sin(v));
    case UnaryOp::Cos:
      return chain(a, std::cos(v), -std::sin(v), -std::cos(v));
    case UnaryOp::Exp: {
      const double e = std::exp(v);
      return chain(a, e, e, e);
    }
    case UnaryOp::Log:
      if (v <= 0.0) throw std::domain_error("log of a non-positive value");
      return chain(a, std::log(v), 1.0 / v, -1.0 / (v * v));
    case UnaryOp::Sqrt: {
      if (v < 0.0) throw std::domain_error("sqrt of a negative value");
      const double s = std::sqrt(v);
      if (is_constant_jet(a)) return Jet2::constant(s, a.dim());
      if (v == 0.0) throw std::domain_error("sqrt derivative undefined at zero");
      return chain(a, s, 0.5 / s, -0.25 / (s * v));
    }
  }
  throw std::logic_error("unhandled unary op");
}

Jet2 jet_pow(const Jet2& base, double c) {
  const double v = base.value;
  const char* err = nullptr;
  const double f0 = eval_pow(v, c, &err);
  if (err) throw std::domain_error(err);
  if (c == 0.0) return Jet2::constant(1.0, base.dim());
  if (is_constant_jet(base)) return Jet2::constant(f0, base.dim());
  const double f1 = c * std::pow(v, c - 1.0);
  const double f2 = (c == 1.0) ? 0.0 : c * (c - 1.0) * std::pow(v, c - 2.0);
  return chain(base, f0, f1, f2);
}

ExpressionAst ExpressionAst::number(double value) {
  assert(std::isfinite(value));
  ExpressionAst e;
  Node n;
  n.kind = Node::Kind::Number;
  n.number = value;
  e.nodes_.push_back(n);
  e.root_ = 0;
  e.finalize();
  return e;
}

ExpressionAst ExpressionAst::variable(int index) {
  ExpressionAst e;
  Node n;
  n.kind = Node::Kind::Variable;
  n.var_index = index;
  e.nodes_.push_back(n);
  e.root_ = 0;
  e.finalize();
  return e;
}

ExpressionAst ExpressionAst::unary(UnaryOp op, const ExpressionAst& inner) {
  const auto& in = inner.nodes_[inner.root_];
  if (op == UnaryOp::Neg && in.kind == Node::Kind::Number) {
    ExpressionAst e = number(-in.number);
    e.coords_ = inner.coords_;
    return e;
  }
  ExpressionAst e;
  const int child = inner.clone_into(e.nodes_, inner.root_);
  Node n;
  n.kind = Node::Kind::Unary;
  n.unary = op;
  n.lhs = child;
  e.nodes_.push_back(n);
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.coords_ = inner.coords_;
  e.finalize();
  return e;
}

ExpressionAst ExpressionAst::binary(BinaryOp op, const ExpressionAst& lhs,
                                    const ExpressionAst& rhs) {
  if (op == BinaryOp::Pow) {
    if (rhs.max_variable_index() >= 0)
      throw std::invalid_argument("pow exponent must be a constant expression");
    return power(lhs, rhs.evaluate(Vec()));
  }
  ExpressionAst e;
  const int l = lhs.clone_into(e.nodes_, lhs.root_);
  const int r = rhs.clone_into(e.nodes_, rhs.root_);
  Node n;
  n.kind = Node::Kind::Binary;
  n.binary = op;
  n.lhs = l;
  n.rhs = r;
  e.nodes_.push_back(n);
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.coords_ = lhs.coords_.empty() ? rhs.coords_ : lhs.coords_;
  e.finalize();
  return e;
}

ExpressionAst ExpressionAst::power(const ExpressionAst& base, double exponent) {
  ExpressionAst e;
  const int b = base.clone_into(e.nodes_, base.root_);
  Node num;
  num.kind = Node::Kind::Number;
  num.number = exponent;
  e.nodes_.push_back(num);
  const int x = static_cast<int>(e.nodes_.size()) - 1;
  Node n;
  n.kind = Node::Kind::Binary;
  n.binary = BinaryOp::Pow;
  n.lhs = b;
  n.rhs = x;
  e.nodes_.push_back(n);
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.coords_ = base.coords_;
  e.finalize();
  return e;
}

void ExpressionAst::set_coordinate_names(std::vector<std::string> names) {
  coords_ = std::move(names);
}

int ExpressionAst::max_variable_index() const {
  int m = -1;
  for (const Node& n : nodes_)
    if (n.kind == Node::Kind::Variable && n.var_index > m) m = n.var_index;
  return m;
}

int ExpressionAst::clone_into(std::vector<Node>& out, int node) const {
  const Node& n = nodes_[node];
  Node copy = n;
  if (n.kind == Node::Kind::Unary) {
    copy.lhs = clone_into(out, n.lhs);
  } else if (n.kind == Node::Kind::Binary) {
    copy.lhs = clone_into(out, n.lhs);
    copy.rhs = clone_into(out, n.rhs);
  }
  out.push_back(copy);
  return static_cast<int>(out.size()) - 1;
}

void ExpressionAst::finalize() {
  order_.clear();
  if (root_ < 0) return;
  std::vector<char> reach(nodes_.size(), 0);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    if (reach[i]) continue;
    reach[i] = 1;
    const Node& n = nodes_[i];
    if (n.kind == Node::Kind::Unary) stack.push_back(n.lhs);
    if (n.kind == Node::Kind::Binary) {
      stack.push_back(n.lhs);
      stack.push_back(n.rhs);
    }
  }
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (reach[i]) order_.push_back(i);
}

bool ExpressionAst::structurally_equal(const ExpressionAst& other) const {
  if ((root_ < 0) != (other.root_ < 0)) return false;
  if (root_ < 0) return true;
  struct Cmp {
    const ExpressionAst& a;
    const ExpressionAst& b;
    bool eq(int i, int j) const {
      const Node& x = a.nodes_[i];
      const Node& y = b.nodes_[j];
      if (x.kind != y.kind) return false;
      switch (x.kind) {
        case Node::Kind::Number:
          return x.number == y.number;
        case Node::Kind::Variable:
          return x.var_index == y.var_index;
        case Node::Kind::Unary:
          return x.unary == y.unary && eq(x.lhs, y.lhs);
        case Node::Kind::Binary:
          return x.binary == y.binary && eq(x.lhs, y.lhs) && eq(x.rhs, y.rhs);
      }
      return false;
    }
  };
  return Cmp{*this, other}.eq(root_, other.root_);
}

namespace {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Precedence levels for printing: 1 add/sub, 2 mul/div, 3 unary minus
// (and negative literals), 4 pow, 6 atoms.
int print_level(const ExpressionAst::Node& n) {
  using Kind = ExpressionAst::Node::Kind;
  switch (n.kind) {
    case Kind::Number:
      return n.number < 0.0 ? 3 : 6;
    case Kind::Variable:
      return 6;
    case Kind::Unary:
      return n.unary == UnaryOp::Neg ? 3 : 6;
    case Kind::Binary:
      switch (n.binary) {
        case BinaryOp::Add:
        case BinaryOp::Sub:
          return 1;
        case BinaryOp::Mul:
        case BinaryOp::Div:
          return 2;
        case BinaryOp::Pow:
          return 4;
      }
  }
  return 6;
}

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg:
      return "-";
    case UnaryOp::Sin:
      return "sin";
    case UnaryOp::Cos:
      return "cos";
    case UnaryOp::Exp:
      return "exp";
    case UnaryOp::Log:
      return "log";
    case UnaryOp::Sqrt:
      return "sqrt";
  }
  return "?";
}

}  // namespace

std::string ExpressionAst::print_node(int node) const {
  const Node& n = nodes_[node];
  auto wrapped = [&](int child, int min_level) {
    const std::string s = print_node(child);
    if (print_level(nodes_[child]) < min_level) return "(" + s + ")";
    return s;
  };
  switch (n.kind) {
    case Node::Kind::Number:
      return format_number(n.number);
    case Node::Kind::Variable:
      if (n.var_index < static_cast<int>(coords_.size()))
        return coords_[n.var_index];
      return "x" + std::to_string(n.var_index + 1);
    case Node::Kind::Unary:
      if (n.unary == UnaryOp::Neg) return "-" + wrapped(n.lhs, 3);
      return std::string(unary_name(n.unary)) + "(" + print_node(n.lhs) + ")";
    case Node::Kind::Binary:
      switch (n.binary) {
        case BinaryOp::Add:
          return wrapped(n.lhs, 1) + "+" + wrapped(n.rhs, 2);
        case BinaryOp::Sub:
          return wrapped(n.lhs, 1) + "-" + wrapped(n.rhs, 2);
        case BinaryOp::Mul:
          return wrapped(n.lhs, 2) + "*" + wrapped(n.rhs, 3);
        case BinaryOp::Div:
          return wrapped(n.lhs, 2) + "/" + wrapped(n.rhs, 3);
        case BinaryOp::Pow:
          return wrapped(n.lhs, 6) + "^" + wrapped(n.rhs, 4);
      }
  }
  return "?";
}

std::string ExpressionAst::pretty() const {
  if (root_ < 0) return "";
  return print_node(root_);
}

double ExpressionAst::evaluate(const Vec& point) const {
  std::vector<double> v(nodes_.size(), 0.0);
  for (const int i : order_) {
    const Node& n = nodes_[i];
    try {
      switch (n.kind) {
        case Node::Kind::Number:
          v[i] = n.number;
          break;
        case Node::Kind::Variable:
          if (n.var_index >= point.size())
            throw std::domain_error("variable index exceeds chart dimension");
          v[i] = point(n.var_index);
          break;
        case Node::Kind::Unary:
          switch (n.unary) {
            case UnaryOp::Neg:
              v[i] = -v[n.lhs];
              break;
            case UnaryOp::Sin:
              v[i] = std::sin(v[n.lhs]);
              break;
            case UnaryOp::Cos:
              v[i] = std::cos(v[n.lhs]);
              break;
            case UnaryOp::Exp:
              v[i] = std::exp(v[n.lhs]);
              break;
            case UnaryOp::Log:
              if (v[n.lhs] <= 0.0)
                throw std::domain_error("log of a non-positive value");
              v[i] = std::log(v[n.lhs]);
              break;
            case UnaryOp::Sqrt:
              if (v[n.lhs] < 0.0)
                throw std::domain_error("sqrt of a negative value");
              v[i] = std::sqrt(v[n.lhs]);
              break;
          }
          break;
        case Node::Kind::Binary:
          switch (n.binary) {
            case BinaryOp::Add:
              v[i] = v[n.lhs] + v[n.rhs];
              break;
            case BinaryOp::Sub:
              v[i] = v[n.lhs] - v[n.rhs];
              break;
            case BinaryOp::Mul:
              v[i] = v[n.lhs] * v[n.rhs];
              break;
            case BinaryOp::Div:
              if (v[n.rhs] == 0.0) throw std::domain_error("division by zero");
              v[i] = v[n.lhs] / v[n.rhs];
              break;
            case BinaryOp::Pow: {
              const char* err = nullptr;
              v[i] = eval_pow(v[n.lhs], nodes_[n.rhs].number, &err);
              if (err) throw std::domain_error(err);
              break;
            }
          }
          break;
      }
    } catch (const std::domain_error& e) {
      throw EvalError(e.what(), print_node(i));
    }
  }
  return v[root_];
}

Jet2 ExpressionAst::jet(const Vec& point) const {
  const int dim = static_cast<int>(point.size());
  std::vector<Jet2> v(nodes_.size());
  for (const int i : order_) {
    const Node& n = nodes_[i];
    try {
      switch (n.kind) {
        case Node::Kind::Number:
          v[i] = Jet2::constant(n.number, dim);
          break;
        case Node::Kind::Variable:
          if (n.var_index >= dim)
            throw std::domain_error("variable index exceeds chart dimension");
          v[i] = Jet2::variable(point(n.var_index), n.var_index, dim);
          break;
        case Node::Kind::Unary:
          v[i] = jet_apply(n.unary, v[n.lhs]);
          break;
        case Node::Kind::Binary:
          switch (n.binary) {
            case BinaryOp::Add:
              v[i] = v[n.lhs] + v[n.rhs];
              break;
            case BinaryOp::Sub:
              v[i] = v[n.lhs] - v[n.rhs];
              break;
            case BinaryOp::Mul:
              v[i] = v[n.lhs] * v[n.rhs];
              break;
            case BinaryOp::Div:
              v[i] = v[n.lhs] / v[n.rhs];
              break;
            case BinaryOp::Pow:
              v[i] = jet_pow(v[n.lhs], nodes_[n.rhs].number);
              break;
          }
          break;
      }
    } catch (const std::domain_error& e) {
      throw EvalError(e.what(), print_node(i));
    }
  }
  return v[root_];
}

Jet2 jet_evaluate(const ExpressionAst& expr, const Vec& point) {
  return expr.jet(point);
}

ExpressionAst scale_shift(const ExpressionAst& e, double scale, double shift) {
  const auto& root = e.nodes()[e.root()];
  if (root.kind == ExpressionAst::Node::Kind::Number) {
    ExpressionAst out = ExpressionAst::number(shift + scale * root.number);
    out.set_coordinate_names(e.coordinate_names());
    return out;
  }
  ExpressionAst scaled;
  if (scale == 1.0) {
    scaled = e;
  } else if (scale == -1.0) {
    scaled = ExpressionAst::unary(UnaryOp::Neg, e);
  } else {
    scaled = ExpressionAst::binary(BinaryOp::Mul, ExpressionAst::number(scale), e);
    scaled.set_coordinate_names(e.coordinate_names());
  }
  if (shift == 0.0) return scaled;
  ExpressionAst out = ExpressionAst::binary(BinaryOp::Add,
                                            ExpressionAst::number(shift), scaled);
  out.set_coordinate_names(e.coordinate_names());
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& coords)
      : src_(src), coords_(coords) {}

  ExpressionAst run() {
    const int root = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    ExpressionAst ast;
    ast.nodes_ = std::move(nodes_);
    ast.root_ = root;
    ast.coords_ = coords_;
    ast.finalize();
    return ast;
  }

 private:
  using Node = ExpressionAst::Node;

  std::string_view src_;
  const std::vector<std::string>& coords_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;

  void skip_ws() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r'))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  int push_number(double v) {
    Node n;
    n.kind = Node::Kind::Number;
    n.number = v;
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int push_variable(int index) {
    Node n;
    n.kind = Node::Kind::Variable;
    n.var_index = index;
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int push_unary(UnaryOp op, int child) {
    if (op == UnaryOp::Neg && nodes_[child].kind == Node::Kind::Number)
      return push_number(-nodes_[child].number);
    Node n;
    n.kind = Node::Kind::Unary;
    n.unary = op;
    n.lhs = child;
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int push_binary(BinaryOp op, int lhs, int rhs) {
    Node n;
    n.kind = Node::Kind::Binary;
    n.binary = op;
    n.lhs = lhs;
    n.rhs = rhs;
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (consume('+'))
        lhs = push_binary(BinaryOp::Add, lhs, parse_term());
      else if (consume('-'))
        lhs = push_binary(BinaryOp::Sub, lhs, parse_term());
      else
        return lhs;
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (consume('*'))
        lhs = push_binary(BinaryOp::Mul, lhs, parse_factor());
      else if (consume('/'))
        lhs = push_binary(BinaryOp::Div, lhs, parse_factor());
      else
        return lhs;
    }
  }

  int parse_factor() {
    const int base = parse_base();
    skip_ws();
    if (!peek_is('^')) return base;
    const std::size_t caret = pos_;
    ++pos_;
    const int exp = parse_factor();  // right associative
    if (subtree_has_variable(exp))
      throw ParseError("pow exponent must be a constant expression", caret);
    double value = 0.0;
    try {
      value = const_eval(exp);
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("invalid constant exponent: ") + e.what(),
                       caret);
    }
    return push_binary(BinaryOp::Pow, base, push_number(value));
  }

  int parse_base() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      const int inner = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", open);
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return push_unary(UnaryOp::Neg, parse_factor());
    }
    if (c >= '0' && c <= '9') return parse_number();
    if (is_ident_start(c)) return parse_ident();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }

  static bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
  }

  int parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      if (pos_ >= src_.size() || src_[pos_] < '0' || src_[pos_] > '9')
        throw ParseError("expected digits after decimal point", pos_);
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
        ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ >= src_.size() || src_[pos_] < '0' || src_[pos_] > '9') {
        pos_ = mark;  // not an exponent, e.g. "2*exp(t)" after "2"
      } else {
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
          ++pos_;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_,
                                     value);
    if (res.ec != std::errc() || res.ptr != src_.data() + pos_)
      throw ParseError("malformed number literal", start);
    return push_number(value);
  }

  int parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    static const std::pair<const char*, UnaryOp> functions[] = {
        {"sin", UnaryOp::Sin},   {"cos", UnaryOp::Cos}, {"exp", UnaryOp::Exp},
        {"log", UnaryOp::Log},   {"sqrt", UnaryOp::Sqrt}};
    for (const auto& [fname, op] : functions) {
      if (name == fname) {
        if (!consume('('))
          throw ParseError("function '" + name +
                               "' requires a parenthesized argument",
                           start);
        const int arg = parse_expr();
        if (!consume(')')) throw ParseError("expected ')'", start);
        return push_unary(op, arg);
      }
    }
    if (name == "sigma" || name == "sigbar") {
      if (peek_is('('))
        throw ParseError("'" + name + "' is not a function", start);
      return push_number(name == "sigma" ? kGoldenRatio : kGoldenRatioConj);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == name) {
        if (peek_is('('))
          throw ParseError("'" + name + "' is not a function", start);
        return push_variable(static_cast<int>(i));
      }
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  bool subtree_has_variable(int node) const {
    const Node& n = nodes_[node];
    switch (n.kind) {
      case Node::Kind::Number:
        return false;
      case Node::Kind::Variable:
        return true;
      case Node::Kind::Unary:
        return subtree_has_variable(n.lhs);
      case Node::Kind::Binary:
        return subtree_has_variable(n.lhs) || subtree_has_variable(n.rhs);
    }
    return false;
  }

  double const_eval(int node) const {
    const Node& n = nodes_[node];
    switch (n.kind) {
      case Node::Kind::Number:
        return n.number;
      case Node::Kind::Variable:
        throw std::domain_error("not constant");
      case Node::Kind::Unary: {
        const double a = const_eval(n.lhs);
        switch (n.unary) {
          case UnaryOp::Neg:
            return -a;
          case UnaryOp::Sin:
            return std::sin(a);
          case UnaryOp::Cos:
            return std::cos(a);
          case UnaryOp::Exp:
            return std::exp(a);
          case UnaryOp::Log:
            if (a <= 0.0) throw std::domain_error("log of a non-positive value");
            return std::log(a);
          case UnaryOp::Sqrt:
            if (a < 0.0) throw std::domain_error("sqrt of a negative value");
            return std::sqrt(a);
        }
        break;
      }
      case Node::Kind::Binary: {
        const double a = const_eval(n.lhs);
        const double b = const_eval(n.rhs);
        switch (n.binary) {
          case BinaryOp::Add:
            return a + b;
          case BinaryOp::Sub:
            return a - b;
          case BinaryOp::Mul:
            return a * b;
          case BinaryOp::Div:
            if (b == 0.0) throw std::domain_error("division by zero");
            return a / b;
          case BinaryOp::Pow: {
            const char* err = nullptr;
            const double r = eval_pow(a, b, &err);
            if (err) throw std::domain_error(err);
            return r;
          }
        }
        break;
      }
    }
    throw std::logic_error("unhandled node");
  }
};

ExpressionAst parse_expression(std::string_view source,
                               const std::vector<std::string>& coordinate_names) {
  return Parser(source, coordinate_names).run();
}

}  // namespace golden
