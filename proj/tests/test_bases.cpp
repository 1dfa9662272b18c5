#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace test;

namespace {

// Independent evaluation of the two bases, straight from their definitions.
Rational eval_fstar(const FStarVector& f, long k) {
  Rational sum;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * Rational(gen_binomial(k - 1, static_cast<unsigned>(i)));
  return sum;
}

Rational eval_hstar(const HStarVector& h, long k) {
  const long d = h.ambient_degree();
  Rational sum;
  for (std::size_t i = 0; i < h.size(); ++i)
    sum += h[i] * Rational(gen_binomial(k + d - static_cast<long>(i), static_cast<unsigned>(d)));
  return sum;
}

Polynomial random_poly(std::mt19937_64& rng, long max_degree) {
  RatVector c;
  for (long i = draw(rng, -1, max_degree); i >= 0; --i) c.push_back(frac(draw(rng, -9, 9), draw(rng, 1, 5)));
  return Polynomial(c);
}

}  // namespace

TEST_SUITE("bases") {

TEST_CASE("fstar_from_poly examples") {
  CHECK(fstar_from_poly(Polynomial::binomial(-1, 2), 2).entries() == q({0, 0, 1}));
  CHECK(fstar_from_poly(Polynomial::binomial(2, 2), 2).entries() == q({3, 3, 1}));
  CHECK(fstar_from_poly(Polynomial(q({-1, 2})), 1).entries() == q({1, 2}));
  CHECK(fstar_from_poly(Polynomial::constant(2), 3).entries() == q({2, 0, 0, 0}));
  CHECK_THROWS_AS(fstar_from_poly(Polynomial(q({0, 0, 1})), 1), InputError);
  CHECK_THROWS_AS(fstar_from_poly(Polynomial(), -1), InputError);
}

TEST_CASE("poly_from_fstar examples") {
  CHECK(poly_from_fstar(FStarVector(q({0, 0, 1}))) == Polynomial(RatVector{Rational(1), frac(-3, 2), frac(1, 2)}));
  CHECK(poly_from_fstar(FStarVector(q({1, 0}))) == Polynomial::constant(1));
  CHECK(poly_from_fstar(FStarVector(q({1, 2}))) == Polynomial(q({-1, 2})));
}

TEST_CASE("hstar conversion examples") {
  CHECK(hstar_from_poly(Polynomial::binomial(2, 2), 2).entries() == q({1, 0, 0}));
  CHECK(hstar_from_poly(Polynomial::constant(2), 3).entries() == q({2, -6, 6, -2}));
  CHECK(hstar_from_poly(Polynomial(q({-1, 2})), 1).entries() == q({-1, 3}));
  CHECK(poly_from_hstar(HStarVector(q({-1, 3}))) == Polynomial(q({-1, 2})));
}

TEST_CASE("fstar_pad examples") {
  CHECK(fstar_pad(FStarVector(q({0, 0, 1})), 5).entries() == q({0, 0, 1, 0, 0, 0}));
  CHECK(fstar_pad(FStarVector(q({2, 0})), 2).entries() == q({2, 0, 0}));
  const FStarVector padded = fstar_pad(FStarVector(q({1, 2})), 3);
  CHECK(padded.entries() == q({1, 2, 0, 0}));
  CHECK(padded == fstar_from_poly(Polynomial(q({-1, 2})), 3));
  CHECK_THROWS_AS(fstar_pad(FStarVector(q({0, 0, 1})), 1), InputError);
}

TEST_CASE("identity check examples") {
  CHECK(hstar_fstar_identity_check(FStarVector(q({3, 3, 1})), 2));
  CHECK(hstar_series_from_fstar(FStarVector(q({3, 3, 1})), 2).coefficients() == q({1}));
  CHECK(hstar_fstar_identity_check(FStarVector(q({1, 2})), 1));
  CHECK(hstar_series_from_fstar(FStarVector(q({1, 2})), 1).coefficients() == q({-1, 3}));
  for (int d = 0; d <= 5; ++d) CHECK(hstar_fstar_identity_check(FStarVector::zero(d), d));
}

TEST_CASE("conversions agree with direct evaluation of the bases") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const Polynomial p = random_poly(rng, 6);
    const int d = static_cast<int>(draw(rng, std::max(0, p.degree()), 7));
    const FStarVector f = fstar_from_poly(p, d);
    const HStarVector h = hstar_from_poly(p, d);
    CHECK(f.ambient_degree() == d);
    CHECK(h.ambient_degree() == d);
    for (long k = -3; k <= 10; ++k) {
      CHECK(eval_fstar(f, k) == p(k));
      CHECK(eval_hstar(h, k) == p(k));
    }
    CHECK(poly_from_fstar(f) == p);
    CHECK(poly_from_hstar(h) == p);
    CHECK(hstar_series_from_fstar(f, d) == Polynomial(h.entries()));
  }
}

TEST_CASE("f* is stable under padding while h* is not") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = random_poly(rng, 5);
    const int d = static_cast<int>(draw(rng, std::max(0, p.degree()), 5));
    const int e = static_cast<int>(draw(rng, d, 8));
    CHECK(fstar_pad(fstar_from_poly(p, d), e) == fstar_from_poly(p, e));
  }
  const HStarVector low = hstar_from_poly(Polynomial::constant(2), 1);
  const HStarVector high = hstar_from_poly(Polynomial::constant(2), 3);
  CHECK(low.entries() == q({2, -2}));
  CHECK(high.entries() == q({2, -6, 6, -2}));
}

TEST_CASE("basis vectors reject empty input") {
  CHECK_THROWS_AS(FStarVector(std::vector<Rational>{}), InputError);
  CHECK_THROWS_AS(HStarVector(std::vector<Rational>{}), InputError);
  CHECK(FStarVector(q({1, 2})) + FStarVector(q({0, 1})) == FStarVector(q({1, 3})));
  CHECK_THROWS_AS(FStarVector(q({1, 2})) + FStarVector(q({0, 1, 3})), InputError);
}

}  // TEST_SUITE
