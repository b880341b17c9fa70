#include <doctest.h>

#include <cmath>
#include <vector>

#include "golden/expr.hpp"
#include "golden/sampling.hpp"

using namespace golden;

namespace {

const std::vector<std::string> xy = {"x1", "x2"};

Vec pt(double a, double b) {
  Vec p(2);
  p << a, b;
  return p;
}

}  // namespace

TEST_CASE("jet of a product of coordinates") {
  ExpressionAst e = parse_expression("x1*x2", xy);
  Jet2 j = e.jet(pt(2.0, 3.0));
  CHECK(j.value == doctest::Approx(6.0));
  CHECK(j.grad(0) == doctest::Approx(3.0));
  CHECK(j.grad(1) == doctest::Approx(2.0));
  CHECK(j.hess(0, 0) == doctest::Approx(0.0));
  CHECK(j.hess(0, 1) == doctest::Approx(1.0));
  CHECK(j.hess(1, 0) == doctest::Approx(1.0));
  CHECK(j.hess(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("jet of exp in one slot") {
  ExpressionAst e = parse_expression("exp(x2)", xy);
  Jet2 j = e.jet(pt(0.0, 0.0));
  CHECK(j.value == doctest::Approx(1.0));
  CHECK(j.grad(0) == doctest::Approx(0.0));
  CHECK(j.grad(1) == doctest::Approx(1.0));
  CHECK(j.hess(1, 1) == doctest::Approx(1.0));
  CHECK(j.hess(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("jet of exp of a scaled coordinate") {
  ExpressionAst e = parse_expression("exp(2*x1)", xy);
  const double v = std::exp(1.0);
  Jet2 j = e.jet(pt(0.5, 0.0));
  CHECK(j.value == doctest::Approx(v));
  CHECK(j.grad(0) == doctest::Approx(2.0 * v));
  CHECK(j.grad(1) == doctest::Approx(0.0));
  CHECK(j.hess(0, 0) == doctest::Approx(4.0 * v));
  CHECK(j.hess(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("builtin golden constants") {
  ExpressionAst s = parse_expression("sigma", xy);
  ExpressionAst sb = parse_expression("sigbar", xy);
  CHECK(s.evaluate(pt(0, 0)) == kGoldenRatio);
  CHECK(sb.evaluate(pt(0, 0)) == kGoldenRatioConj);
  ExpressionAst rel = parse_expression("sigma^2 - sigma - 1", xy);
  CHECK(std::abs(rel.evaluate(pt(0, 0))) < 1e-15);
}

TEST_CASE("pretty printing round trips") {
  const char* sources[] = {"x1*x2 + 3",       "exp(2*x1) - sin(x2)",
                           "(x1 + x2)^2",     "1/(x1^2 + 2)",
                           "-x1 + sqrt(x2 + 2)", "cos(x1*x2)/3"};
  for (const char* src : sources) {
    ExpressionAst e = parse_expression(src, xy);
    ExpressionAst back = parse_expression(e.pretty(), xy);
    CHECK(e.structurally_equal(back));
  }
}

TEST_CASE("scale_shift folds literals and wraps the rest") {
  ExpressionAst c = scale_shift(ExpressionAst::number(2.0), 0.5 * kSqrt5, 0.5);
  REQUIRE(c.nodes().size() == 1);
  CHECK(c.nodes()[0].kind == ExpressionAst::Node::Kind::Number);
  CHECK(c.evaluate(Vec())== 0.5 * kSqrt5 * 2.0 + 0.5);

  ExpressionAst e = parse_expression("x1", xy);
  ExpressionAst w = scale_shift(e, 2.0, -1.0);
  CHECK(w.evaluate(pt(0.25, 0.0)) == doctest::Approx(-0.5));
}

TEST_CASE("parse errors carry a byte offset") {
  CHECK_THROWS_AS(parse_expression("x1 +", xy), ParseError);
  CHECK_THROWS_AS(parse_expression("x3", xy), ParseError);
  CHECK_THROWS_AS(parse_expression("foo(x1)", xy), ParseError);
  CHECK_THROWS_AS(parse_expression("(x1", xy), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 ^ x2", xy), ParseError);
  try {
    parse_expression("x1 + $", xy);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
    CHECK(std::string(e.what()).find("at byte 5") != std::string::npos);
  }
}

TEST_CASE("evaluation domain errors name the subexpression") {
  ExpressionAst e = parse_expression("log(x1)", xy);
  CHECK_THROWS_AS(e.evaluate(pt(-1.0, 0.0)), EvalError);
  try {
    ExpressionAst q = parse_expression("1/(x1 - 1)", xy);
    q.jet(pt(1.0, 0.0));
    FAIL("expected an evaluation error");
  } catch (const EvalError& err) {
    CHECK(!err.subexpression.empty());
  }
}

namespace {

// Random expression trees for the finite difference cross-check. Division
// is kept away from zero by construction and exponents stay integral.
ExpressionAst random_tree(Rng& rng, int depth) {
  if (depth == 0) {
    switch (rng.uniform_int(0, 2)) {
      case 0: return ExpressionAst::number(rng.uniform(-2.0, 2.0));
      case 1: return ExpressionAst::variable(0);
      default: return ExpressionAst::variable(1);
    }
  }
  switch (rng.uniform_int(0, 6)) {
    case 0:
      return ExpressionAst::binary(BinaryOp::Add, random_tree(rng, depth - 1),
                                   random_tree(rng, depth - 1));
    case 1:
      return ExpressionAst::binary(BinaryOp::Sub, random_tree(rng, depth - 1),
                                   random_tree(rng, depth - 1));
    case 2:
      return ExpressionAst::binary(BinaryOp::Mul, random_tree(rng, depth - 1),
                                   random_tree(rng, depth - 1));
    case 3: {
      ExpressionAst inner = random_tree(rng, depth - 1);
      ExpressionAst denom = ExpressionAst::binary(
          BinaryOp::Add, ExpressionAst::power(inner, 2.0),
          ExpressionAst::number(2.0));
      return ExpressionAst::binary(BinaryOp::Div,
                                   random_tree(rng, depth - 1), denom);
    }
    case 4:
      return ExpressionAst::unary(UnaryOp::Sin, random_tree(rng, depth - 1));
    case 5:
      return ExpressionAst::unary(UnaryOp::Cos, random_tree(rng, depth - 1));
    default:
      return ExpressionAst::power(random_tree(rng, depth - 1),
                                  rng.uniform_int(0, 1) ? 2.0 : 3.0);
  }
}

}  // namespace

TEST_CASE("jets agree with central differences on random trees") {
  Rng rng(mix_seed(kDefaultSeed, "expr-fd"));
  const double step = 1e-5;
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ExpressionAst e = random_tree(rng, 3);
    e.set_coordinate_names(xy);
    Vec p = pt(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8));
    Jet2 j = e.jet(p);
    double scale = std::max(1.0, std::abs(j.value));
    for (int i = 0; i < 2; ++i) {
      Vec a = p, b = p;
      a(i) -= step;
      b(i) += step;
      double fd = (e.evaluate(b) - e.evaluate(a)) / (2 * step);
      scale = std::max(scale, std::abs(j.grad(i)));
      CHECK(std::abs(j.grad(i) - fd) < 1e-5 * scale);
    }
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        Vec pp = p, pm = p, mp = p, mm = p;
        pp(i) += step; pp(k) += step;
        pm(i) += step; pm(k) -= step;
        mp(i) -= step; mp(k) += step;
        mm(i) -= step; mm(k) -= step;
        double fd = (e.evaluate(pp) - e.evaluate(pm) - e.evaluate(mp) +
                     e.evaluate(mm)) /
                    (4 * step * step);
        CHECK(std::abs(j.hess(i, k) - fd) < 2e-3 * std::max(scale, std::abs(j.hess(i, k))));
      }
    ++checked;
  }
  CHECK(checked == 200);
}
