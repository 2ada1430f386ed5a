#include <doctest.h>

#include <random>

#include "occ/error.hpp"
#include "occ/series.hpp"

using namespace occ;

namespace {

ContextPtr ctx_xy(int n) {
  return Context::make({{"x"}, {"y"}}, n);
}

Series var(const ContextPtr &c, const char *name) { return Series::variable(c, name); }
Series cst(const ContextPtr &c, Rational v) { return Series::constant(c, v); }

Series random_series(const ContextPtr &c, std::mt19937_64 &rng, int terms) {
  std::vector<Term> list;
  for (int i = 0; i < terms; ++i) {
    Exponents e(c->size());
    for (auto &v : e) v = static_cast<std::uint8_t>(rng() % 3);
    Rational q(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(rng() % 3 + 1));
    q.canonicalize();
    list.push_back(Term{e, q, 0});
  }
  return Series::from_terms(c, std::move(list));
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(binomial(Rational(4), 2) == 6);
  CHECK(binomial(Rational(-2), 1) == -2);
}

TEST_CASE("multiplication examples") {
  auto c = ctx_xy(4);
  auto x = var(c, "x"), y = var(c, "y");
  CHECK(((cst(c, 1) + x) * (cst(c, 1) - x)).to_string() == "1 - x^2");
  CHECK((x.pow(4) * x).is_zero());
  CHECK(((x + y) * (x + y)).to_string() == "x^2 + 2*x*y + y^2");
  auto other = Context::make({{"x"}, {"z"}}, 4);
  CHECK_THROWS_WITH_AS(mul(x, var(other, "z")), doctest::Contains("incompatible contexts"), Error);
}

TEST_CASE("text form") {
  auto c = ctx_xy(3);
  auto x = var(c, "x"), y = var(c, "y");
  CHECK(Series(c).to_string() == "0");
  CHECK(x.scaled(Rational(1, 2)).pow(2).to_string() == "1/4*x^2");
  CHECK((cst(c, -3) + x - y.scaled(2)).to_string() == "-3 + x - 2*y");
}

TEST_CASE("substitution") {
  auto c = ctx_xy(4);
  auto x = var(c, "x"), y = var(c, "y");
  Series f = x + y - x * y;
  CHECK(substitute(f, {{"x", Series(c)}}).to_string() == "y");
  auto uv = Context::make({{"x"}, {"u"}, {"v"}}, 4);
  Series x2 = var(uv, "x").pow(2);
  CHECK(substitute(x2, {{"x", var(uv, "u") + var(uv, "v")}}).to_string() == "u^2 + 2*u*v + v^2");
  CHECK_THROWS_WITH_AS(substitute(f, {{"x", cst(c, 1) + y}}),
                       doctest::Contains("non-nilpotent substitution"), Error);
  // multiplicative inverse: -x - x^2 - ... - x^N
  Series iota(c);
  for (unsigned k = 1; k <= 4; ++k) iota -= x.pow(k);
  CHECK(substitute(f, {{"y", iota}}).is_zero());
}

TEST_CASE("invert_unit") {
  auto c = ctx_xy(5);
  auto x = var(c, "x"), y = var(c, "y");
  Series geo = invert_unit(cst(c, 1) - x);
  Series expect = cst(c, 1);
  for (unsigned k = 1; k <= 5; ++k) expect += x.pow(k);
  CHECK(geo == expect);
  CHECK(invert_unit(cst(c, 1)) == cst(c, 1));
  Series u = cst(c, 1) + x + y;
  Series inv = invert_unit(u);
  CHECK(inv * u == cst(c, 1));
  CHECK(inv.truncated(2).to_string() == "1 - x - y + x^2 + 2*x*y + y^2");
  CHECK_THROWS_WITH_AS(invert_unit(x), doctest::Contains("not a unit"), Error);
  auto ci = Context::make({{"x"}}, 3, CoefficientMode::integers);
  CHECK_THROWS_WITH_AS(invert_unit(cst(ci, 2)), doctest::Contains("not a unit"), Error);
  CHECK(invert_unit(cst(ci, -1)) == cst(ci, -1));
}

TEST_CASE("exact_divide") {
  auto c = ctx_xy(5);
  auto x = var(c, "x"), y = var(c, "y");
  CHECK(exact_divide(x * x - y * y, x - y).to_string() == "x + y");
  CHECK(exact_divide(x, x) == cst(c, 1));
  // multiplicative: (u + iota(u)) / (u * iota(u)) = 1
  Series iota(c);
  for (unsigned k = 1; k <= 5; ++k) iota -= x.pow(k);
  CHECK(exact_divide(x + iota, x * iota).truncated(3) == cst(c, 1));
  CHECK_THROWS_WITH_AS(exact_divide(x + y * y, y), doctest::Contains("not divisible"), Error);
}

TEST_CASE("symmetric_reduce") {
  auto c = Context::make({{"x1"}, {"x2"}, {"x3"}, {"c1", 1, false}, {"c2", 2, false}, {"c3", 3, false}}, 6);
  auto x1 = var(c, "x1"), x2 = var(c, "x2"), x3 = var(c, "x3");
  CHECK(symmetric_reduce(x1 * x1 + x2 * x2, {"x1", "x2"}, {"c1", "c2"}).to_string() == "c1^2 - 2*c2");
  CHECK(symmetric_reduce(x1 * x2, {"x1", "x2"}, {"c1", "c2"}).to_string() == "c2");
  CHECK(symmetric_reduce((x1 + x2 + x3) * x1 * x2 * x3, {"x1", "x2", "x3"}, {"c1", "c2", "c3"})
            .to_string() == "c1*c3");
  CHECK_THROWS_WITH_AS(symmetric_reduce(x1, {"x1", "x2"}, {"c1", "c2"}),
                       doctest::Contains("not symmetric"), Error);
}

TEST_CASE("randomized ring properties") {
  auto c = Context::make({{"x"}, {"y"}, {"m1", -1, false}}, 5);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    Series a = random_series(c, rng, 6), b = random_series(c, rng, 6), d = random_series(c, rng, 6);
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    Series unit = cst(c, 1) + (b - cst(c, b.constant_term())).truncated(5);
    // only units whose weight-0 part is constant
    std::vector<Term> keep;
    for (const auto &t : unit.terms())
      if (t.weight > 0 || t.exponents == Exponents(c->size(), 0)) keep.push_back(t);
    unit = Series::from_terms(c, keep);
    CHECK(invert_unit(unit) * unit == cst(c, 1));
    CHECK(exact_divide(a * unit, unit) == a);
    CHECK(a.truncated(3).truncated(3) == a.truncated(3));
    for (const auto &t : (a * b).terms()) CHECK(t.weight <= 5);
  }
}

TEST_CASE("symmetric round trip") {
  auto c = Context::make({{"x1"}, {"x2"}, {"x3"}, {"e1", 1, false}, {"e2", 2, false}, {"e3", 3, false}}, 5);
  std::vector<Series> roots{var(c, "x1"), var(c, "x2"), var(c, "x3")};
  std::mt19937_64 rng(11);
  for (int round = 0; round < 10; ++round) {
    // random polynomial in elementary symmetric functions of the roots
    Series p(c);
    for (int k = 0; k < 4; ++k) {
      Series mono = cst(c, Rational(static_cast<long>(rng() % 5) - 2));
      for (int j = 1; j <= 3; ++j) mono *= elementary_symmetric(c, roots, j).pow(rng() % 2);
      p += mono;
    }
    Series r = symmetric_reduce(p, {"x1", "x2", "x3"}, {"e1", "e2", "e3"});
    Assignment back;
    for (int j = 1; j <= 3; ++j) back.emplace("e" + std::to_string(j), elementary_symmetric(c, roots, j));
    CHECK(substitute(r, back) == p);
  }
}

TEST_CASE("grading") {
  auto c = Context::make({{"x"}, {"y"}, {"m1", -1, false}}, 6);
  auto x = var(c, "x"), y = var(c, "y"), m = var(c, "m1");
  Series a = x + m * x * x, b = y + m * y * y;
  CHECK((a * b).homogeneous_degree() == 2);
  CHECK(substitute(a, {{"x", b}}).homogeneous_degree() == 1);
}
