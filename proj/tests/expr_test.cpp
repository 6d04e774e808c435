#include <doctest.h>

#include <cmath>

#include "devsurf/expr.hpp"

using namespace devsurf;
using expr::AstPtr;

namespace {
double ev(const char* text, const std::map<std::string, double>& env = {}) {
  return expr::eval(expr::parse(text), env);
}
}  // namespace

TEST_CASE("constant expressions") {
  CHECK(ev("2*pi") == doctest::Approx(6.283185307179586).epsilon(1e-15));
  CHECK(ev("sin(pi/2)") == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ev("tan(0)") == 0.0);
}

TEST_CASE("variable bindings") {
  CHECK(ev("3*phi^2", {{"phi", 2.0}}) == 12.0);
  CHECK(ev("t^2", {{"t", 3.0}}) == 9.0);
  CHECK_THROWS_AS(ev("x"), DomainError);
}

TEST_CASE("precedence and associativity") {
  CHECK(ev("2+3*4") == 14.0);
  CHECK(ev("2^3^2") == 512.0);
  CHECK(ev("-2^2") == -4.0);
  CHECK(ev("(2+3)*4") == 20.0);
  CHECK(ev("2-3-4") == -5.0);
  CHECK(ev("8/4/2") == 1.0);
}

TEST_CASE("domain errors are loud") {
  CHECK_THROWS_AS(ev("sqrt(-1)"), DomainError);
  CHECK_THROWS_AS(ev("log(0)"), DomainError);
  CHECK_THROWS_AS(ev("1/0"), DomainError);
}

TEST_CASE("syntax errors carry a byte offset") {
  try {
    expr::parse("2+*3");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(expr::parse("(1+2"), ParseError);
  CHECK_THROWS_AS(expr::parse("foo(1)"), ParseError);
  CHECK_THROWS_AS(expr::parse(""), ParseError);
}

TEST_CASE("declared-variable list rejects strangers at parse time") {
  CHECK_NOTHROW(expr::parse("x*sin(x)", {"x"}));
  CHECK_THROWS_AS(expr::parse("x+y", std::vector<std::string>{"x"}), ParseError);
}

TEST_CASE("serialize round trip is structural and bitwise") {
  const char* samples[] = {
      "2*pi",          "sin(pi/2)",         "3*phi^2",
      "-x^2 + 4*x/7",  "atan(t)*exp(-t)",   "sqrt(u + 2)^(1/3)",
      "cos(a)*cos(b)", "1.25e-3 * tan(q)/(q + 0.5)",
  };
  const std::map<std::string, double> env = {{"phi", 1.5}, {"x", 0.25},  {"t", 2.0},
                                             {"u", 3.0},   {"a", 0.1},   {"b", 0.2},
                                             {"q", 0.75}};
  for (const char* s : samples) {
    const AstPtr ast = expr::parse(s);
    const AstPtr again = expr::parse(expr::serialize(ast));
    CHECK(expr::structurally_equal(*ast, *again));
    CHECK(expr::eval(ast, env) == expr::eval(again, env));
  }
}
