#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace test;

namespace {

std::vector<IntVector> points_of(const std::vector<AtomicPoint>& atomic) {
  std::vector<IntVector> out;
  for (const AtomicPoint& a : atomic) out.push_back(a.point);
  return out;
}

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("skew parts examples") {
  CHECK(skew_parts(frac(5, 2)) == std::pair<Integer, Rational>{2, frac(1, 2)});
  CHECK(skew_parts(Rational(3)) == std::pair<Integer, Rational>{2, 1});
  CHECK(skew_parts(Rational(0)) == std::pair<Integer, Rational>{-1, 1});
  CHECK(skew_parts(frac(-1, 2)) == std::pair<Integer, Rational>{-1, frac(1, 2)});
}

TEST_CASE("skew parts recombine with fractional part in (0, 1]") {
  for (long p = -30; p <= 30; ++p) {
    for (long d = 1; d <= 6; ++d) {
      const Rational x = frac(p, d);
      const auto [i, f] = skew_parts(x);
      CHECK(Rational(i) + f == x);
      CHECK(f > Rational(0));
      CHECK(f <= Rational(1));
    }
  }
  const auto [iv, fv] = skew_parts(RatVector{frac(5, 2), Rational(0)});
  CHECK(iv == z({2, -1}));
  CHECK(fv == RatVector{frac(1, 2), Rational(1)});
}

TEST_CASE("coefficients_of examples") {
  const ConeBasis b({z({0, 2}), z({1, 2})});
  const auto c = coefficients_of(b, z({1, 3}));
  REQUIRE(c);
  CHECK(c->lambda == RatVector{frac(1, 2), Rational(1)});
  CHECK(c->level == 2);
  CHECK(c->degree == 3);

  const ConeBasis id({z({1, 0}), z({0, 1})});
  const auto c2 = coefficients_of(id, z({1, 1}));
  REQUIRE(c2);
  CHECK(c2->level == 2);
  CHECK(c2->degree == 3);
  CHECK_FALSE(coefficients_of(id, z({1, 0})));
  CHECK_FALSE(coefficients_of(ConeBasis({z({1, 0, 0}), z({0, 1, 0})}), z({1, 1, 1})));
  CHECK_THROWS_AS(coefficients_of(id, z({1, 1, 1})), InputError);
}

TEST_CASE("cone basis validation") {
  CHECK_THROWS_AS(ConeBasis(std::vector<IntVector>{}), InputError);
  CHECK_THROWS_AS(ConeBasis({z({1, 2}), z({2, 4})}), InputError);
  CHECK_THROWS_AS(ConeBasis({z({1, 2}), z({1})}), InputError);
  CHECK_THROWS_AS(ConeBasis({z({1}), z({2}), z({3})}), InputError);
  const ConeBasis b({z({1, 1}), z({-1, 1})});
  CHECK(b.scale() == 2);
}

TEST_CASE("is_atomic examples") {
  CHECK(is_atomic(CoefficientVector::from_lambda({frac(1, 2), frac(1, 2)})));
  const auto c = CoefficientVector::from_lambda({frac(3, 2), frac(1, 4)});
  CHECK(c.level == 2);
  CHECK(c.degree == 1);
  CHECK_FALSE(is_atomic(c));
  CHECK(is_atomic(CoefficientVector::from_lambda(q({1, 1}))));
  CHECK_THROWS_AS(CoefficientVector::from_lambda(q({1, 0})), InputError);
}

TEST_CASE("enumerate_atomic examples") {
  const auto id = enumerate_atomic(ConeBasis({z({1, 0}), z({0, 1})}));
  REQUIRE(id.size() == 1);
  CHECK(id[0].point == z({1, 1}));
  CHECK(id[0].level == 2);

  const auto unit = enumerate_atomic(ConeBasis({z({0, 1}), z({1, 1})}));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].point == z({1, 2}));
  CHECK(unit[0].level == 2);

  const auto seg = enumerate_atomic(ConeBasis({z({0, 1}), z({2, 1})}));
  CHECK(points_of(seg) == std::vector<IntVector>{z({1, 1}), z({2, 2}), z({3, 2})});
  CHECK(seg[0].level == 1);
  CHECK(seg[1].level == 2);
  CHECK(seg[2].level == 2);
  CHECK(seg[2].height == 2);
}

TEST_CASE("atomic points agree with the inductive definition") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto d = static_cast<std::size_t>(draw(rng, 1, 3));
    const ConeBasis b = random_square_basis(rng, d, 3);
    const auto atomic = enumerate_atomic(b);
    CHECK(atomic == atomic_inductive_oracle(b));
    CHECK(std::is_sorted(atomic.begin(), atomic.end(),
                         [](const AtomicPoint& x, const AtomicPoint& y) { return x.point < y.point; }));
    for (const AtomicPoint& a : atomic) {
      CHECK(a.level >= 1);
      CHECK(a.level <= static_cast<int>(d));
      CHECK(is_atomic(a.coefficients));
    }
  }
  CHECK(enumerate_atomic(ConeBasis({z({0, 1}), z({2, 1})})) == atomic_inductive_oracle(ConeBasis({z({0, 1}), z({2, 1})})));
}

TEST_CASE("one primitive generator has itself as its only atomic point") {
  for (long v : {1L, -1L}) {
    const auto atomic = enumerate_atomic(ConeBasis({z({v})}));
    REQUIRE(atomic.size() == 1);
    CHECK(atomic[0].point == z({v}));
    CHECK(atomic[0].level == 1);
  }
  const auto tilted = enumerate_atomic(ConeBasis({z({2, 3})}));
  REQUIRE(tilted.size() == 1);
  CHECK(tilted[0].point == z({2, 3}));
  CHECK(enumerate_atomic(ConeBasis({z({2, 4})})).size() == 2);
}

TEST_CASE("level-1 atomic points are the lattice points of the half-open parallelepiped with sum at most 1") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 30; ++t) {
    const ConeBasis b = random_square_basis(rng, static_cast<std::size_t>(draw(rng, 1, 3)), 3);
    std::size_t level_one = 0;
    for (const AtomicPoint& a : enumerate_atomic(b)) level_one += a.level == 1;
    std::size_t expected = 0;
    // Shift each parallelepiped point by its skew parts: the point with all lambda in (0, 1].
    for (const IntVector& p : parallelepiped_points(b)) {
      Rational sum;
      auto c = solve_exact(RatMatrix::from_columns([&] {
                             std::vector<RatVector> cols;
                             for (const IntVector& g : b.generators()) cols.push_back(to_rational(g));
                             return cols;
                           }()),
                           to_rational(p));
      REQUIRE(c);
      for (std::size_t i = 0; i < c->size(); ++i) sum += (*c)[i].is_zero() ? Rational(1) : (*c)[i];
      expected += sum <= Rational(1);
    }
    CHECK(level_one == expected);
  }
}

TEST_CASE("parallelepiped points") {
  CHECK(parallelepiped_points(ConeBasis({z({1, 0}), z({0, 1})})) == std::vector<IntVector>{z({0, 0})});
  CHECK(parallelepiped_points(ConeBasis({z({0, 1}), z({2, 1})})) == std::vector<IntVector>{z({0, 0}), z({1, 1})});
  CHECK(parallelepiped_points(ConeBasis({z({1, 1}), z({-1, 1})})) == std::vector<IntVector>{z({0, 0}), z({0, 1})});

  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    const ConeBasis b = random_square_basis(rng, static_cast<std::size_t>(draw(rng, 1, 3)), 4);
    std::vector<RatVector> rows;
    for (const IntVector& g : b.generators()) rows.push_back(to_rational(g));
    const Rational det = RatMatrix::from_columns(rows).determinant();
    const auto points = parallelepiped_points(b);
    CHECK(Rational(static_cast<long>(points.size())) == (det.sign() < 0 ? -det : det));
    CHECK(points == parallelepiped_points(b, {4}));
  }
}

TEST_CASE("verify_partition examples") {
  const auto id = verify_partition(ConeBasis({z({1, 0}), z({0, 1})}), 5);
  CHECK(id.passed);
  CHECK(id.violations.empty());
  CHECK(id.atomic_points == 1);

  const auto seg = verify_partition(ConeBasis({z({0, 1}), z({2, 1})}), 6);
  CHECK(seg.passed);
  CHECK(seg.points_checked == 36);  // 2h - 1 points at each height h = 1..6

  const auto single = verify_partition(ConeBasis({z({3, 1})}), 4);
  CHECK(single.passed);
  CHECK(single.atomic_points == 1);
  CHECK(single.points_checked == 4);
}

TEST_CASE("verify_partition on random bases, including non-square ones") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 30; ++t) {
    const auto d = static_cast<std::size_t>(draw(rng, 1, 3));
    const ConeBasis b = random_square_basis(rng, d, 3);
    const auto report = verify_partition(b, static_cast<int>(d) + 2);
    CHECK(report.passed);
    CHECK(report.points_checked == std::accumulate(report.points_per_level.begin(), report.points_per_level.end(),
                                                   std::size_t{0}));
    CHECK(verify_partition(b, static_cast<int>(d) + 2, {3}).points_checked == report.points_checked);
  }
  CHECK(verify_partition(ConeBasis({z({1, 0, 1}), z({0, 2, 1})}), 4).passed);
  CHECK_THROWS_AS(verify_partition(ConeBasis({z({1, 0}), z({0, 1})}), 0), InputError);
}

TEST_CASE("level profile is invariant under permuting generators") {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 20; ++t) {
    const ConeBasis b = random_square_basis(rng, 3, 3);
    const auto reference = level_profile(enumerate_atomic(b), 3);
    std::vector<std::size_t> perm{0, 1, 2};
    do {
      CHECK(level_profile(enumerate_atomic(b.permuted(perm)), 3) == reference);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("parallel enumeration matches serial output") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 20; ++t) {
    const ConeBasis b = random_square_basis(rng, 3, 4);
    CHECK(enumerate_atomic(b, {4}) == enumerate_atomic(b));
  }
}

}  // TEST_SUITE
