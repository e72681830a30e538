#include <doctest.h>

#include <random>

#include "autoseq/cyclotomic.hpp"
#include "autoseq/polynomial.hpp"
#include "autoseq/rational.hpp"
#include "autoseq/series.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Rational> coeffs(const Polynomial& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

std::vector<Rational> coeffs(const TruncatedSeries& s) {
  return {s.coefficients().begin(), s.coefficients().end()};
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("rational normal form") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(2, 3).to_string() == "2/3");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("parse examples") {
  CHECK(coeffs(P("1+x-x^3-x^4")) == ints({1, 1, 0, -1, -1}));
  CHECK(P("0").is_zero());
  CHECK(P("0").degree() == kZeroDegree);
  CHECK(coeffs(P("(x^2+x+1)*(x^6-1)*(x^4-1)")) ==
        ints({1, 1, 1, 0, -1, -1, -2, -1, -1, 0, 1, 1, 1}));
  CHECK(P("1/2*x^2 - 3x") == Polynomial{Rational(0), Rational(-3), Rational(1, 2)});
  CHECK(P(" 2 x + x + 1 ") == Polynomial{Rational(1), Rational(3)});
  CHECK(P("x^2-x^2") .is_zero());
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("1+"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("1/0*x"), ParseError);
  CHECK_THROWS_AS(P("(1+x"), ParseError);
  CHECK_THROWS_AS(P("1+y"), ParseError);
  try {
    P("1+x+?");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print and parse round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> v(std::uniform_int_distribution<int>(0, 6)(rng));
    for (auto& x : v) x = Rational(c(rng), den(rng));
    const Polynomial p(v);
    CHECK(P(to_string(p).c_str()) == p);
    CHECK(P(to_string(p, TermOrder::Descending).c_str()) == p);
  }
  CHECK(to_string(P("1+x-x^3-x^4")) == "1+x-x^3-x^4");
  CHECK(to_string(P("1+x-x^3-x^4"), TermOrder::Descending) == "-x^4-x^3+x+1");
  CHECK(to_string(Polynomial{}) == "0");
}

TEST_CASE("arithmetic examples") {
  CHECK(P("1+x") * P("1-x") == P("1-x^2"));
  const auto [q, r] = divrem(P("x^2-1"), P("x-1"));
  CHECK(q == P("x+1"));
  CHECK(r.is_zero());
  CHECK(gcd(P("x^4-1"), P("x^6-1")) == P("x^2-1"));
  CHECK(gcd(P("2x+2"), P("3x+3")) == P("x+1"));
  CHECK_THROWS_AS(divrem(P("x"), Polynomial{}), std::domain_error);
  CHECK_THROWS_AS(exact_quotient(P("x^2+1"), P("x-1")), std::domain_error);
}

TEST_CASE("divrem identity on random polynomials") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Polynomial a = oracle::random_poly(rng, 1 + rng() % 8, 4);
    const Polynomial b = oracle::random_poly(rng, 1 + rng() % 4, 4) * Rational(1 + rng() % 3, 2);
    const auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("compose_power examples") {
  CHECK(coeffs(compose_power(P("1+x"), 2)) == ints({1, 0, 1}));
  CHECK(coeffs(compose_power(P("1+x+x^2+x^3+x^4"), 2)) == ints({1, 0, 1, 0, 1, 0, 1, 0, 1}));
  CHECK(coeffs(compose_power(P("1-x"), 4)) == ints({1, 0, 0, 0, -1}));
  CHECK_THROWS_AS(compose_power(P("1-x"), 0), std::invalid_argument);
}

TEST_CASE("series decimation") {
  const TruncatedSeries tm(ints({1, -1, -1, 1, -1, 1, 1, -1}));
  CHECK(coeffs(decimate(tm, 2, 1, 0)) == ints({1, -1, -1, 1}));
  CHECK(coeffs(decimate(tm, 2, 0, 0)) == coeffs(tm));
  const TruncatedSeries c(ints({10, 11, 12, 13, 14, 15, 16, 17}));
  CHECK(coeffs(decimate(c, 2, 2, 3)) == ints({13, 17}));
  CHECK(decimate(c, 2, 2, 3).order() == 1);
  CHECK_THROWS_AS(decimate(c, 2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(decimate(c, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("decimation composes") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t q = 2 + rng() % 3;
    TruncatedSeries f(300);
    for (std::size_t i = 0; i <= 300; ++i) f[i] = Rational(static_cast<long>(rng() % 19) - 9);
    const std::size_t l1 = rng() % 3;
    const std::size_t l2 = rng() % 3;
    const std::size_t b1 = rng() % checked_power(q, l1);
    const std::size_t b2 = rng() % checked_power(q, l2);
    const auto lhs = decimate(decimate(f, q, l1, b1), q, l2, b2);
    const auto rhs = decimate(f, q, l1 + l2, b1 + checked_power(q, l1) * b2);
    CHECK(coeffs(lhs) == coeffs(rhs));
  }
}

TEST_CASE("series arithmetic uses the smaller order") {
  const TruncatedSeries a(ints({1, 2, 3}));
  const TruncatedSeries b(ints({1, 1}));
  CHECK((a + b).order() == 1);
  CHECK(coeffs(a * b) == ints({1, 3}));
}

TEST_CASE("series inverse examples") {
  CHECK(coeffs(series_inverse(P("1-x"), 5)) == ints({1, 1, 1, 1, 1, 1}));
  CHECK(coeffs(series_inverse(P("1+x"), 5)) == ints({1, -1, 1, -1, 1, -1}));
  CHECK(coeffs(series_inverse(P("1+x+x^2"), 6)) == ints({1, -1, 0, 1, -1, 0, 1}));
  CHECK_THROWS_AS(series_inverse(P("2+x"), 5), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = oracle::random_poly(rng, 1 + rng() % 5, 3);
    const auto inv = series_inverse(p, 64);
    const auto prod = inv * p;
    CHECK(prod[0] == Rational(1));
    for (std::size_t i = 1; i <= 64; ++i) CHECK(prod[i].is_zero());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P("x-1"));
  CHECK(cyclotomic(2) == P("x+1"));
  CHECK(cyclotomic(6) == P("x^2-x+1"));
  CHECK(cyclotomic(12) == P("x^4-x^2+1"));
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));
    CHECK(has_integer_coefficients(cyclotomic(n)));
  }
  CHECK(power_order(6, 2) == 3);
  CHECK(power_order(4, 2) == 2);
  CHECK(power_order(5, 2) == 5);
}

TEST_CASE("cyclotomic factorization examples") {
  const auto f1 = cyclotomic_factorize(P("1-x"));
  CHECK(f1.unit == Rational(-1));
  CHECK(f1.factors == std::map<std::size_t, unsigned>{{1, 1}});
  CHECK(f1.fully_cyclotomic());

  const auto f2 = cyclotomic_factorize(P("(x^2+x+1)*(x^6-1)*(x^4-1)"));
  CHECK(f2.factors == std::map<std::size_t, unsigned>{{1, 2}, {2, 2}, {3, 2}, {4, 1}, {6, 1}});
  CHECK(f2.fully_cyclotomic());

  const auto f3 = cyclotomic_factorize(P("1+x+x^2+x^3+x^4"));
  CHECK(f3.factors == std::map<std::size_t, unsigned>{{5, 1}});

  const auto f4 = cyclotomic_factorize(P("1-2x"));
  CHECK(f4.factors.empty());
  CHECK_FALSE(f4.fully_cyclotomic());
  CHECK(f4.reconstruct() == P("1-2x"));
}

TEST_CASE("cyclotomic reconstruction on random products") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    Polynomial p = Polynomial::constant(Rational(static_cast<long>(1 + rng() % 5), 1 + rng() % 3));
    std::map<std::size_t, unsigned> expect;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      const std::size_t n = 1 + rng() % 15;
      p = p * cyclotomic(n);
      ++expect[n];
    }
    const bool extra = rng() % 2 == 0;
    if (extra) p = p * P("x^2+3");
    const auto f = cyclotomic_factorize(p);
    CHECK(f.factors == expect);
    CHECK(f.reconstruct() == p);
    CHECK(f.fully_cyclotomic() == !extra);
  }
}

}  // TEST_SUITE
