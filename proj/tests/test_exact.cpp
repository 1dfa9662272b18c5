#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace test;

TEST_SUITE("exact") {

TEST_CASE("rational values are canonical") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == frac(5, 2));
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(frac(7, 2).floor() == 3);
  CHECK(frac(-7, 2).floor() == -4);
  CHECK(frac(-7, 2).ceil() == -3);
  CHECK(frac(1, 3) < frac(1, 2));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(11);
  auto pick = [&] { return frac(draw(rng, -20, 20), draw(rng, 1, 9)); };
  for (int t = 0; t < 300; ++t) {
    const Rational a = pick(), b = pick(), c = pick();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("gen_binomial examples") {
  CHECK(gen_binomial(4, 2) == 6);
  CHECK(gen_binomial(-1, 2) == 1);
  for (long k : {-3L, 0L, 7L}) CHECK(gen_binomial(k, 0) == 1);
  CHECK(gen_binomial(1, 3) == 0);
  CHECK(gen_binomial(-2, 3) == -4);
}

TEST_CASE("gen_binomial satisfies Pascal and the falling-factorial definition") {
  for (long k = -12; k <= 12; ++k) {
    for (unsigned i = 1; i <= 8; ++i) {
      CHECK(gen_binomial(k, i) == gen_binomial(k - 1, i) + gen_binomial(k - 1, i - 1));
      Rational direct(1);
      for (unsigned j = 0; j < i; ++j) direct = direct * Rational(k - static_cast<long>(j)) / Rational(j + 1);
      CHECK(Rational(gen_binomial(k, i)) == direct);
    }
  }
}

TEST_CASE("solve_exact examples") {
  const RatMatrix id = RatMatrix::identity(2);
  CHECK(*solve_exact(id, q({3, 5})) == q({3, 5}));

  const RatMatrix m = RatMatrix::from_columns({q({0, 2}), q({1, 2})});
  const auto x = solve_exact(m, q({1, 3}));
  REQUIRE(x);
  CHECK(*x == RatVector{frac(1, 2), Rational(1)});

  const RatMatrix tall = RatMatrix::from_rows({q({1, 0}), q({0, 1}), q({0, 0})});
  CHECK_FALSE(solve_exact(tall, q({1, 1, 1})));
  CHECK(*solve_exact(tall, q({1, 1, 0})) == q({1, 1}));

  const RatMatrix dependent = RatMatrix::from_columns({q({1, 2}), q({2, 4})});
  CHECK_THROWS_AS(solve_exact(dependent, q({1, 2})), InputError);
}

TEST_CASE("solve_exact round trip on random systems") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(draw(rng, 1, 5));
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = frac(draw(rng, -5, 5), draw(rng, 1, 3));
    RatVector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(frac(draw(rng, -9, 9), draw(rng, 1, 4)));
    if (m.determinant().is_zero()) {
      CHECK_THROWS_AS(solve_exact(m, m * x), InputError);
      continue;
    }
    const auto solved = solve_exact(m, m * x);
    REQUIRE(solved);
    CHECK(*solved == x);
    CHECK(m.inverse() * (m * x) == x);
  }
}

TEST_CASE("matrix rank, determinant and independent rows") {
  const RatMatrix m = RatMatrix::from_rows({q({1, 2}), q({2, 4}), q({0, 1})});
  CHECK(m.rank() == 2);
  CHECK(m.independent_rows() == std::vector<std::size_t>{0, 2});
  CHECK(RatMatrix::from_rows({q({1, 1}), q({-1, 1})}).determinant() == 2);
  CHECK_THROWS_AS(RatMatrix::from_rows({q({1, 2}), q({1})}), InputError);
  CHECK_THROWS_AS(m.determinant(), InputError);
}

TEST_CASE("polynomial evaluation") {
  const Polynomial p(q({1, 0, 1}));
  CHECK(p(2) == 5);
  CHECK(Polynomial()(Rational(17)) == 0);
  const Polynomial r(RatVector{Rational(1), frac(3, 2), frac(1, 2)});
  CHECK(r(3) == 10);
  CHECK(r(3) == Rational(gen_binomial(5, 2)));
  CHECK(Polynomial(q({0, 0, 0})).degree() == -1);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial one_minus_z(q({1, -1}));
  CHECK((one_minus_z * one_minus_z).coefficients() == q({1, -2, 1}));
  CHECK((one_minus_z * one_minus_z * one_minus_z * Rational(2)).coefficients() == q({2, -6, 6, -2}));
  const Polynomial zpoly = Polynomial::monomial(1);
  CHECK((zpoly * one_minus_z + one_minus_z * one_minus_z).coefficients() == q({1, -1}));
  CHECK((one_minus_z - one_minus_z).is_zero());
  CHECK(Polynomial::linear_power(1, -1, 3) == one_minus_z * one_minus_z * one_minus_z);
  for (long k = -4; k <= 6; ++k) CHECK(Polynomial::binomial(-1, 3)(k) == Rational(gen_binomial(k - 1, 3)));
}

TEST_CASE("polynomial ring axioms on random samples") {
  std::mt19937_64 rng(13);
  auto pick = [&] {
    RatVector c;
    for (long i = draw(rng, 0, 4); i >= 0; --i) c.push_back(frac(draw(rng, -5, 5), draw(rng, 1, 3)));
    return Polynomial(c);
  };
  for (int t = 0; t < 100; ++t) {
    const Polynomial a = pick(), b = pick(), c = pick();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    const Rational k = frac(draw(rng, -6, 6), draw(rng, 1, 3));
    CHECK((a * b)(k) == a(k) * b(k));
    CHECK((a - b)(k) == a(k) - b(k));
  }
}

}  // TEST_SUITE
