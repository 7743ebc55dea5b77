#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dopoly/polynomial.hpp"

using namespace dopoly;

namespace {

SparsePoly monomial(const Field& F, long long e, long long c = 1) {
  SparsePoly f(F);
  f.add_term(e, F.from_integer(c));
  return f;
}

SparsePoly random_poly(const Field& F, std::mt19937_64& rng, long long max_exp,
                       int max_terms) {
  std::uniform_int_distribution<long long> exp_pick(0, max_exp);
  std::uniform_int_distribution<std::uint64_t> coeff_pick(0, F.size() - 1);
  std::uniform_int_distribution<int> n_pick(1, max_terms);
  SparsePoly f(F);
  for (int t = n_pick(rng); t > 0; --t)
    f.add_term(exp_pick(rng), F.element_at(coeff_pick(rng)));
  return f;
}

}  // namespace

TEST_CASE("eval basics") {
  Field F3 = make_field(3, 1);
  CHECK(eval(monomial(F3, 2), F3.from_integer(2)) == F3.one());  // 4 = 1

  // x^4 + x^2 at 1: 1 + 1 = 2
  SparsePoly f(F3);
  f.add_term(4, F3.one());
  f.add_term(2, F3.one());
  CHECK(eval(f, F3.one()) == F3.from_integer(2));

  CHECK(eval(SparsePoly(F3), F3.from_integer(2)) == F3.zero());
  // 0^0 = 1: the constant term survives at x = 0.
  SparsePoly c(F3);
  c.add_term(0, F3.from_integer(2));
  c.add_term(1, F3.one());
  CHECK(eval(c, F3.zero()) == F3.from_integer(2));
}

TEST_CASE("ring operations") {
  Field F3 = make_field(3, 1);
  // (x+1)(x-1) = x^2 - 1 = x^2 + 2
  SparsePoly a(F3), b(F3);
  a.add_term(1, F3.one());
  a.add_term(0, F3.one());
  b.add_term(1, F3.one());
  b.add_term(0, F3.from_integer(-1));
  SparsePoly prod = mul(a, b);
  CHECK(prod.coeff(2) == F3.one());
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(0) == F3.from_integer(2));

  CHECK(sub(a, a).is_zero());
  CHECK(add(a, b).coeff(0).is_zero());
}

TEST_CASE("compose_monomial multiplies exponents") {
  Field F5 = make_field(5, 1);
  // x^3 - a x with a = 1: x^3 + 4x -> x^6 + 4x^2 under d = 2
  SparsePoly f(F5);
  f.add_term(3, F5.one());
  f.add_term(1, F5.from_integer(-1));
  SparsePoly g = compose_monomial(f, 2);
  CHECK(g.coeff(6) == F5.one());
  CHECK(g.coeff(2) == F5.from_integer(4));
  CHECK(compose_monomial(f, 1) == f);
  CHECK_THROWS_AS(compose_monomial(f, 0), Error);
}

TEST_CASE("compose_monomial agrees with evaluation at x^d") {
  std::mt19937_64 rng(7);
  Field F9 = make_field(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    SparsePoly f = random_poly(F9, rng, 12, 4);
    for (long long d : {1, 2, 3, 5})
      for (const auto& x : F9.elements())
        CHECK(eval(compose_monomial(f, d), x) ==
              eval(f, F9.pow(x, static_cast<unsigned long long>(d))));
  }
}

TEST_CASE("reduce_mod_field matches the worked examples") {
  Field F3 = make_field(3, 1);
  for (long long a : {1LL, 2LL}) {
    SparsePoly f(F3);
    f.add_term(4, F3.one());
    f.add_term(2, F3.from_integer(a));
    SparsePoly r = reduce_mod_field(f);
    if (a == 2) {
      CHECK(r.is_zero());  // 1 + 2 = 0
    } else {
      CHECK(r.terms().size() == 1);
      CHECK(r.coeff(2) == F3.from_integer(2));  // (1+a) x^2
    }
  }
  Field F9 = make_field(3, 2);
  CHECK(reduce_mod_field(monomial(F9, 9)) == monomial(F9, 1));  // x^9 = x
}

TEST_CASE("reduce_mod_field preserves the induced function") {
  std::mt19937_64 rng(11);
  for (auto [p, e] : std::vector<std::pair<long long, int>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 3}}) {
    Field F = make_field(p, e);
    for (int trial = 0; trial < 25; ++trial) {
      SparsePoly f = random_poly(F, rng, 3 * static_cast<long long>(F.size()), 5);
      SparsePoly r = reduce_mod_field(f);
      if (auto d = r.degree()) CHECK(*d < static_cast<long long>(F.size()));
      for (const auto& x : F.elements()) CHECK(eval(f, x) == eval(r, x));
    }
  }
}

TEST_CASE("delta_bivariate worked examples") {
  Field F3 = make_field(3, 1);
  // f = x^2: delta = 2xy
  BivariatePoly d1 = delta_bivariate(monomial(F3, 2));
  CHECK(d1.terms().size() == 1);
  CHECK(d1.terms().at({1, 1}) == F3.from_integer(2));

  // f = x^4 + a x^2 with a = 1: x^3 y + x y^3 + 2a x y
  SparsePoly f(F3);
  f.add_term(4, F3.one());
  f.add_term(2, F3.one());
  BivariatePoly d2 = delta_bivariate(f);
  CHECK(d2.terms().size() == 3);
  CHECK(d2.terms().at({3, 1}) == F3.one());
  CHECK(d2.terms().at({1, 3}) == F3.one());
  CHECK(d2.terms().at({1, 1}) == F3.from_integer(2));

  // f = x^p: Frobenius is additive, so the difference vanishes.
  Field F9 = make_field(3, 2);
  CHECK(delta_bivariate(monomial(F9, 3)).is_zero());
}

TEST_CASE("delta_bivariate agrees with pointwise differences") {
  std::mt19937_64 rng(13);
  for (auto [p, e] : std::vector<std::pair<long long, int>>{{3, 2}, {5, 1}, {7, 1}, {3, 4}}) {
    Field F = make_field(p, e);
    for (int trial = 0; trial < 8; ++trial) {
      SparsePoly f = random_poly(F, rng, 20, 4);
      BivariatePoly d = delta_bivariate(f);
      for (const auto& x : F.elements())
        for (const auto& y : F.elements())
          CHECK(eval(d, x, y) ==
                eval(f, x + y) - eval(f, x) - eval(f, y));
    }
  }
}

TEST_CASE("parse with parameter") {
  Field F5 = make_field(5, 1);
  SparsePoly f = parse_poly("x^10 + 2*a*x^6 + a^2*x^2", F5, F5.one());
  CHECK(f.terms().size() == 3);
  CHECK(f.coeff(10) == F5.one());
  CHECK(f.coeff(6) == F5.from_integer(2));
  CHECK(f.coeff(2) == F5.one());

  SparsePoly g = parse_poly("x^10 + 2*a*x^6 + a^2*x^2", F5, F5.from_integer(2));
  CHECK(g.coeff(6) == F5.from_integer(4));
  CHECK(g.coeff(2) == F5.from_integer(4));

  CHECK_THROWS_AS(parse_poly("a*x", F5), UnboundParameterError);
  CHECK_THROWS_AS(parse_poly("x^-2", F5), SyntaxError);
  CHECK_THROWS_AS(parse_poly("q + 1", F5), SyntaxError);
}

TEST_CASE("parse corner cases") {
  Field F5 = make_field(5, 1);
  CHECK(parse_poly("0", F5).is_zero());
  CHECK(format_poly(parse_poly("x^2", F5)) == "x^2");
  CHECK(parse_poly("-x^2 + x", F5).coeff(2) == F5.from_integer(4));
  CHECK(parse_poly("3x", F5).coeff(1) == F5.from_integer(3));  // implicit '*'
  CHECK(parse_poly("x*x", F5).coeff(2) == F5.one());
  CHECK(parse_poly("X^2 + A", F5, F5.from_integer(3)).coeff(0) ==
        F5.from_integer(3));

  Field F9 = make_field(3, 2);
  SparsePoly tup = parse_poly("(1,2)*x^3 + 2", F9);
  CHECK(tup.coeff(3) == F9.from_coords(std::vector<long long>{1, 2}));
  CHECK(tup.coeff(0) == F9.from_integer(2));
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(17);
  for (auto [p, e] : std::vector<std::pair<long long, int>>{{3, 1}, {3, 2}, {5, 2}}) {
    Field F = make_field(p, e);
    for (int trial = 0; trial < 40; ++trial) {
      SparsePoly f = random_poly(F, rng, 30, 5);
      CHECK(parse_poly(format_poly(f), F) == f);
    }
  }
}

TEST_CASE("bivariate parse and eval") {
  Field F9 = make_field(3, 2);
  BivariatePoly h = parse_bivariate("x^2+y^2-(1)", F9);
  CHECK(h.total_degree() == 2);
  CHECK(eval(h, F9.one(), F9.zero()).is_zero());
  CHECK(parse_bivariate(format_poly(h), F9) == h);

  BivariatePoly ha = parse_bivariate("x^8+y^8-a^2", F9, F9.from_integer(2));
  CHECK(ha.terms().at({0, 0}) == F9.from_integer(-4));
  CHECK_THROWS_AS(parse_bivariate("x*y + a", F9), UnboundParameterError);
  // y is not a valid name in univariate parses
  CHECK_THROWS_AS(parse_poly("x + y", F9), SyntaxError);
}

TEST_CASE("mixed-field operations are rejected") {
  Field F9 = make_field(3, 2);
  Field F25 = make_field(5, 2);
  SparsePoly a = monomial(F9, 2);
  SparsePoly b = monomial(F25, 2);
  CHECK_THROWS_AS(add(a, b), FieldMismatchError);
  CHECK_THROWS_AS(eval(a, F25.one()), FieldMismatchError);
}
