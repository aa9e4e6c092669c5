#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "nullpar/errors.hpp"
#include "nullpar/expr.hpp"
#include "support.hpp"

using namespace nullpar;
using namespace nullpar::expr;

namespace {

double eval(const std::string& text, std::vector<double> x) {
  return parse(text, static_cast<int>(x.size())).evaluate(x);
}

NodePtr random_tree(std::mt19937_64& e, int depth, int nvars) {
  const int pick = depth <= 0 ? static_cast<int>(e() % 2) : static_cast<int>(e() % 11);
  switch (pick) {
    case 0: return make_constant(static_cast<double>(e() % 64) / 8.0);
    case 1: return make_variable(1 + static_cast<int>(e() % static_cast<std::uint64_t>(nvars)));
    case 2: return make_binary(Op::add, random_tree(e, depth - 1, nvars), random_tree(e, depth - 1, nvars));
    case 3: return make_binary(Op::sub, random_tree(e, depth - 1, nvars), random_tree(e, depth - 1, nvars));
    case 4: return make_binary(Op::mul, random_tree(e, depth - 1, nvars), random_tree(e, depth - 1, nvars));
    case 5: return make_binary(Op::div, random_tree(e, depth - 1, nvars), random_tree(e, depth - 1, nvars));
    case 6: return make_pow(random_tree(e, depth - 1, nvars), static_cast<int>(e() % 7) - 2);
    case 7: return make_unary(Op::neg, random_tree(e, depth - 1, nvars));
    case 8: return make_unary(Op::sin, random_tree(e, depth - 1, nvars));
    case 9: return make_unary(Op::cos, random_tree(e, depth - 1, nvars));
    default: return make_unary(Op::exp, random_tree(e, depth - 2, nvars));
  }
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(eval("1 + 2*3", {0}) == 7);
  CHECK(eval("2*3^2", {0}) == 18);
  CHECK(eval("-x1^2", {3}) == -9);
  CHECK(eval("(-x1)^2", {3}) == 9);
  CHECK(eval("8 - 3 - 2", {0}) == 3);
  CHECK(eval("8/4/2", {0}) == 1);
  CHECK(eval("x1^-2", {2}) == doctest::Approx(0.25));
  CHECK(eval("1.5e2 + .5", {0}) == 150.5);
  CHECK(eval("sin(x1)^2 + cos(x1)^2", {0.7}) == doctest::Approx(1.0));
  CHECK(eval("exp(x2) * x1", {2, 0}) == 2);
}

TEST_CASE("printing is canonical") {
  CHECK(parse("x1*x2 + 3", 2).to_string() == "x1*x2 + 3");
  CHECK(parse("x1 - (x2 - x3)", 3).to_string() == "x1 - (x2 - x3)");
  CHECK(parse("(x1 - x2) - x3", 3).to_string() == "x1 - x2 - x3");
  CHECK(parse("x1 / (x2 * x3)", 3).to_string() == "x1/(x2*x3)");
  CHECK(parse("( ( x1 ) )", 1).to_string() == "x1");
  CHECK(parse("0.1", 1).to_string() == "0.1");
  CHECK(parse("-(x1 + 1)", 1).to_string() == "-(x1 + 1)");
  CHECK(make_constant(-2.5)->op == Op::neg);
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const std::string& text, int n) -> long {
    try {
      parse(text, n);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("x1 + * 2", 1) == 5);
  CHECK(offset_of("(x1 + 2", 1) == 7);
  CHECK(offset_of("x1 2", 1) == 3);
  CHECK(offset_of("", 1) == 0);
  CHECK(offset_of("x1^y", 1) == 3);
  CHECK(offset_of("sin x1", 1) == 4);
  CHECK(offset_of("foo(1)", 1) == 0);

  try {
    parse("x1 + x7", 3);
    FAIL("expected index error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::index_range);
    CHECK(std::string(e.what()).find("x7") != std::string::npos);
    CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("x0", 3), Error);
}

TEST_CASE("evaluation errors name the subexpression") {
  const ScalarField f = parse("1/(x1 - x2)", 2);
  const std::vector<double> x = {1.0, 1.0};
  try {
    eval_jet2(f, x);
    FAIL("expected evaluation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::evaluation);
    CHECK(std::string(e.what()).find("x1 - x2") != std::string::npos);
  }
  CHECK_THROWS_AS(f.evaluate(x), Error);
  CHECK_THROWS_AS(parse("x1^-1", 1).evaluate(std::vector<double>{0.0}), Error);
}

TEST_CASE("random trees round-trip through the printer") {
  std::mt19937_64 e(42);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(e() % 4);
    const ScalarField f(random_tree(e, 4, n), n);
    const std::string text = f.to_string();
    const ScalarField g = parse(text, n);
    INFO(text);
    CHECK(g == f);
    CHECK(g.to_string() == text);
  }
}

TEST_CASE("jets agree with central differences of values") {
  std::mt19937_64 e(7);
  int compared = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(e() % 3);
    const ScalarField f(random_tree(e, 3, n), n);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = oracle::uniform(e);
    Jet2 j;
    try {
      j = eval_jet2(f, x);
    } catch (const Error&) {
      continue;  // pole at x
    }
    if (std::abs(j.value()) > 1e6) continue;
    auto at = [&](std::vector<double> y) { return f.evaluate(y); };
    bool ok = true;
    std::vector<double> grad_fd(n), hess_fd(n * n);
    try {
      const double h1 = 1e-5, h2 = 1e-4;
      for (int i = 0; i < n; ++i) {
        auto xp = x, xm = x;
        xp[i] += h1;
        xm[i] -= h1;
        grad_fd[i] = (at(xp) - at(xm)) / (2 * h1);
        for (int k = 0; k < n; ++k) {
          auto pp = x, pm = x, mp = x, mm = x;
          pp[i] += h2; pp[k] += h2;
          pm[i] += h2; pm[k] -= h2;
          mp[i] -= h2; mp[k] += h2;
          mm[i] -= h2; mm[k] -= h2;
          hess_fd[i * n + k] = (at(pp) - at(pm) - at(mp) + at(mm)) / (4 * h2 * h2);
        }
      }
    } catch (const Error&) {
      ok = false;  // stencil crosses a pole
    }
    if (!ok) continue;
    double gscale = 1.0, hscale = 1.0;
    for (int i = 0; i < n; ++i) gscale = std::max(gscale, std::abs(grad_fd[i]));
    for (double v : hess_fd) hscale = std::max(hscale, std::abs(v));
    if (gscale > 1e4 || hscale > 1e4) continue;  // too close to a pole for FD
    INFO(f.to_string());
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(j.grad(i) - grad_fd[i]) <= 1e-6 * gscale);
      for (int k = 0; k < n; ++k) CHECK(std::abs(j.hess(i, k) - hess_fd[i * n + k]) <= 1e-4 * hscale);
    }
    ++compared;
  }
  CHECK(compared > 150);
}

TEST_CASE("jet value matches value-only evaluation") {
  const ScalarField f = parse("x1^3*x2 - exp(x2)/(2 + sin(x1))", 2);
  const std::vector<double> x = {0.3, -0.8};
  CHECK(eval_jet2(f, x).value() == doctest::Approx(f.evaluate(x)).epsilon(1e-15));
}

TEST_CASE("variable bookkeeping") {
  const ScalarField f = parse("x2*x3 + x5", 5);
  CHECK(max_index(f.root()) == 5);
  CHECK(mentions_any(f.root(), 1, 1) == false);
  CHECK(mentions_any(f.root(), 1, 2) == true);
  CHECK(parse("0", 3).is_constant(0.0));
  CHECK_FALSE(parse("x1 - x1", 3).is_constant(0.0));
}
