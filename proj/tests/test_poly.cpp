#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bos/poly.hpp"

using namespace bos::poly;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  Polynomial p(nvars);
  for (int k = 0; k < nterms; ++k) {
    Monomial m = Monomial::unit(nvars);
    int budget = deg(rng);
    for (int v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<int> e(0, budget);
      m.exponents[v] = e(rng);
      budget -= m.exponents[v];
    }
    p.add_term(m, coeff(rng));
  }
  return p;
}

std::vector<double> random_point(std::mt19937_64& rng, int nvars) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> z(nvars);
  for (auto& zi : z) zi = u(rng);
  return z;
}

}  // namespace

TEST_CASE("add: cancellation, identity, merge") {
  const int nv = 2;  // (t, x)
  Polynomial x = Polynomial::variable(nv, 1);
  Polynomial one = Polynomial::constant(nv, 1.0);

  Polynomial sum = (x + one) + (x - one);  // 2x
  CHECK(sum.terms().size() == 1);
  CHECK(sum.coefficient(Monomial({0, 1})) == doctest::Approx(2.0));

  Polynomial p = random_poly([] { std::mt19937_64 r(7); return r; }() = std::mt19937_64(7), nv, 4, 6);
  CHECK((p + Polynomial(nv)) == p);

  Polynomial t = Polynomial::variable(nv, 0);
  Polynomial a = t * t + x;  // t^2 + x  (reusing names: treat t as "x", x as "y")
  Polynomial b = x;
  Polynomial c = a + b;
  CHECK(c.coefficient(Monomial({0, 1})) == doctest::Approx(2.0));
  CHECK(c.coefficient(Monomial({2, 0})) == doctest::Approx(1.0));
}

TEST_CASE("mul: difference of squares, identity, binomial") {
  const int nv = 2;
  Polynomial t = Polynomial::variable(nv, 0);
  Polynomial x = Polynomial::variable(nv, 1);
  Polynomial one = Polynomial::constant(nv, 1.0);

  Polynomial d = (x + one) * (x - one);
  CHECK(d.coefficient(Monomial({0, 2})) == doctest::Approx(1.0));
  CHECK(d.coefficient(Monomial({0, 0})) == doctest::Approx(-1.0));
  CHECK(d.terms().size() == 2);

  std::mt19937_64 rng(11);
  Polynomial p = random_poly(rng, nv, 5, 8);
  CHECK((p * one) == p);

  Polynomial sq = (t + x) * (t + x);
  CHECK(sq.coefficient(Monomial({2, 0})) == doctest::Approx(1.0));
  CHECK(sq.coefficient(Monomial({1, 1})) == doctest::Approx(2.0));
  CHECK(sq.coefficient(Monomial({0, 2})) == doctest::Approx(1.0));
}

TEST_CASE("mul: degree adds for nonzero operands") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    Polynomial p = random_poly(rng, 3, 4, 5);
    Polynomial q = random_poly(rng, 3, 3, 4);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("variable-count mismatch is an error") {
  Polynomial p(2), q(3);
  CHECK_THROWS_AS(p + q, std::invalid_argument);
  CHECK_THROWS_AS(p * q, std::invalid_argument);
  CHECK_THROWS_AS(p.evaluate(std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("differentiate: power rule, independent variable, partial") {
  const int nv = 2;
  Polynomial t = Polynomial::variable(nv, 0);
  Polynomial x = Polynomial::variable(nv, 1);

  Polynomial x3 = x * x * x;
  Polynomial dx3 = x3.differentiate(1);
  CHECK(dx3.coefficient(Monomial({0, 2})) == doctest::Approx(3.0));
  CHECK(dx3.terms().size() == 1);

  CHECK((x * x).differentiate(0).is_zero());

  Polynomial tx2 = t * x * x;
  Polynomial d = tx2.differentiate(1);
  CHECK(d.coefficient(Monomial({1, 1})) == doctest::Approx(2.0));
}

TEST_CASE("differentiate: linearity and product rule at random points") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 5; ++rep) {
    Polynomial p = random_poly(rng, 3, 5, 6);
    Polynomial q = random_poly(rng, 3, 5, 6);
    for (int var = 0; var < 3; ++var) {
      Polynomial lhs = (p * q).differentiate(var);
      Polynomial rhs = p.differentiate(var) * q + p * q.differentiate(var);
      for (int k = 0; k < 5; ++k) {
        auto z = random_point(rng, 3);
        CHECK(lhs.evaluate(z) == doctest::Approx(rhs.evaluate(z)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("evaluate examples") {
  const int nv = 1;
  Polynomial x = Polynomial::variable(nv, 0);
  Polynomial p = x * x + Polynomial::constant(nv, 1.0);
  CHECK(p.evaluate(std::vector<double>{2.0}) == doctest::Approx(5.0));

  std::mt19937_64 rng(19);
  Polynomial q = random_poly(rng, 3, 4, 7);
  std::vector<double> zeros(3, 0.0);
  CHECK(q.evaluate(zeros) == doctest::Approx(q.coefficient(Monomial::unit(3))));

  Polynomial tx = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  CHECK(tx.evaluate(std::vector<double>{3.0, 4.0}) == doctest::Approx(12.0));
}

TEST_CASE("substitute examples and eval consistency") {
  const int nv = 2;
  Polynomial t = Polynomial::variable(nv, 0);
  Polynomial x = Polynomial::variable(nv, 1);
  Polynomial one = Polynomial::constant(nv, 1.0);

  Polynomial x2 = x * x;
  Polynomial r = t + one;
  Polynomial s = x2.substitute(1, r);  // (t+1)^2
  CHECK(s.coefficient(Monomial({2, 0})) == doctest::Approx(1.0));
  CHECK(s.coefficient(Monomial({1, 0})) == doctest::Approx(2.0));
  CHECK(s.coefficient(Monomial({0, 0})) == doctest::Approx(1.0));

  std::mt19937_64 rng(23);
  Polynomial p = random_poly(rng, nv, 4, 6);
  CHECK(p.substitute(1, x) == p);

  Polynomial xp = x + t;
  CHECK(xp.substitute(1, Polynomial(nv)) == t);

  // eval(substitute(p, var, r), z) == eval(p, z with z[var] := eval(r, z))
  for (int rep = 0; rep < 5; ++rep) {
    Polynomial pp = random_poly(rng, 3, 4, 6);
    Polynomial rr = random_poly(rng, 3, 2, 4);
    Polynomial sub = pp.substitute(2, rr);
    for (int k = 0; k < 5; ++k) {
      auto z = random_point(rng, 3);
      auto z2 = z;
      z2[2] = rr.evaluate(z);
      CHECK(sub.evaluate(z) == doctest::Approx(pp.evaluate(z2)).epsilon(1e-10));
    }
  }
}

TEST_CASE("monomial_basis: counts and order") {
  auto b1 = monomial_basis(1, 2);
  REQUIRE(b1.size() == 3);
  CHECK(b1[0] == Monomial({0}));
  CHECK(b1[1] == Monomial({1}));
  CHECK(b1[2] == Monomial({2}));

  auto b2 = monomial_basis(2, 1);
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == Monomial({0, 0}));
  CHECK(b2[1] == Monomial({1, 0}));  // t before x
  CHECK(b2[2] == Monomial({0, 1}));

  CHECK(monomial_basis(3, 14).size() == 680);  // C(17,14)
}

TEST_CASE("monomial_basis: total order, prefix nesting") {
  auto b = monomial_basis(3, 5);
  auto sorted = b;
  std::sort(sorted.begin(), sorted.end(), GrlexLess{});
  CHECK(b.size() == sorted.size());
  for (size_t i = 0; i < b.size(); ++i) CHECK(b[i] == sorted[i]);

  auto b4 = monomial_basis(3, 4);
  REQUIRE(b4.size() <= b.size());
  for (size_t i = 0; i < b4.size(); ++i) CHECK(b4[i] == b[i]);
}

TEST_CASE("lebesgue_box_moment") {
  std::array<double, 2> t01{0.0, 1.0}, xm11{-1.0, 1.0}, x02{0.0, 2.0};

  std::vector<std::array<double, 2>> box1{t01, xm11};
  CHECK(lebesgue_box_moment(Monomial({0, 0}), box1) == doctest::Approx(2.0));

  std::vector<std::array<double, 2>> box2{xm11};
  CHECK(lebesgue_box_moment(Monomial({1}), box2) == doctest::Approx(0.0));

  std::vector<std::array<double, 2>> box3{x02};
  CHECK(lebesgue_box_moment(Monomial({2}), box3) == doctest::Approx(8.0 / 3.0));

  std::vector<std::array<double, 2>> bad{{1.0, 1.0}};
  CHECK_THROWS_AS(lebesgue_box_moment(Monomial({1}), bad), std::invalid_argument);
}

TEST_CASE("ring axioms at random points") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 8; ++rep) {
    const int nv = 1 + static_cast<int>(rng() % 4);
    Polynomial p = random_poly(rng, nv, 6, 8);
    Polynomial q = random_poly(rng, nv, 6, 8);
    Polynomial r = random_poly(rng, nv, 6, 8);

    Polynomial assoc_l = (p * q) * r, assoc_r = p * (q * r);
    Polynomial comm_l = p * q, comm_r = q * p;
    Polynomial dist_l = p * (q + r), dist_r = p * q + p * r;

    for (int k = 0; k < 20; ++k) {
      auto z = random_point(rng, nv);
      const double scale = 1.0 + std::abs(assoc_l.evaluate(z));
      CHECK(std::abs(assoc_l.evaluate(z) - assoc_r.evaluate(z)) / scale < 1e-10);
      CHECK(std::abs(comm_l.evaluate(z) - comm_r.evaluate(z)) / scale < 1e-10);
      CHECK(std::abs(dist_l.evaluate(z) - dist_r.evaluate(z)) / scale < 1e-10);
      // eval distributes over ring ops
      CHECK(std::abs(comm_l.evaluate(z) - p.evaluate(z) * q.evaluate(z)) / scale < 1e-10);
    }
  }
}

TEST_CASE("derivative/integral boundary identity on univariate slices") {
  // integral over [lo,hi] of dp/dx equals p(hi) - p(lo)
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 6; ++rep) {
    Polynomial p = random_poly(rng, 1, 6, 5);
    Polynomial dp = p.differentiate(0);
    const double lo = -0.7, hi = 1.3;
    double integral = 0.0;
    std::vector<std::array<double, 2>> box{{lo, hi}};
    for (const auto& [m, c] : dp.terms()) integral += c * lebesgue_box_moment(m, box);
    const double expected = p.evaluate(std::vector<double>{hi}) - p.evaluate(std::vector<double>{lo});
    CHECK(integral == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("canonical form: no stored zeros, equality via term maps") {
  Polynomial p(2);
  p.add_term(Monomial({1, 0}), 1.0);
  p.add_term(Monomial({1, 0}), -1.0);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());

  Polynomial a(2), b(2);
  a.add_term(Monomial({0, 1}), 2.0);
  a.add_term(Monomial({2, 0}), 1.0);
  b.add_term(Monomial({2, 0}), 1.0);
  b.add_term(Monomial({0, 1}), 2.0);
  CHECK(a == b);
}

TEST_CASE("serialization round-trip and format") {
  std::mt19937_64 rng(37);
  Polynomial p = random_poly(rng, 3, 5, 9);
  std::string text = to_lines(p);
  Polynomial q = from_lines(text, 3);
  CHECK(p == q);

  CHECK_THROWS(from_lines("1.0 0 0", 3));      // too few exponents
  CHECK_THROWS(from_lines("1.0 0 0 0 0", 3));  // trailing fields
}

TEST_CASE("Evaluator matches evaluate") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 5; ++rep) {
    Polynomial p = random_poly(rng, 4, 8, 12);
    Evaluator fast(p);
    for (int k = 0; k < 10; ++k) {
      auto z = random_point(rng, 4);
      CHECK(fast(z) == doctest::Approx(p.evaluate(z)).epsilon(1e-12));
    }
  }
}
