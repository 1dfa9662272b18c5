#include <doctest.h>

#include <random>

#include "ehrhart/rational.hpp"
#include "support.hpp"

using namespace test;

namespace {

// Direct enumeration of non-negative solutions, for tiny inputs.
Integer partitions_by_search(const std::vector<Integer>& weights, std::size_t from, long target) {
  if (target == 0) return 1;
  if (from == weights.size()) return 0;
  Integer total = 0;
  const long w = weights[from].get_si();
  for (long used = 0; used * w <= target; ++used) total += partitions_by_search(weights, from + 1, target - used * w);
  return total;
}

Simplex half_segment() { return segment(0, frac(1, 2), Openness::open); }

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("restricted_partition examples") {
  CHECK(restricted_partition({1, 2}, 4) == 3);
  CHECK(restricted_partition({3, 5, 7}, 0) == 1);
  CHECK(restricted_partition({}, 0) == 1);
  CHECK(restricted_partition({2, 2}, 3) == 0);
  CHECK(restricted_partition({1, 2}, -1) == 0);
  CHECK(restricted_partition({}, 3) == 0);
  CHECK_THROWS_AS(restricted_partition({0, 2}, 3), InputError);
  CHECK_THROWS_AS(restricted_partition({-1}, 3), InputError);
}

TEST_CASE("restricted_partition agrees with direct search") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    std::vector<Integer> w;
    for (long i = draw(rng, 1, 4); i > 0; --i) w.emplace_back(draw(rng, 1, 6));
    const long target = draw(rng, 0, 30);
    CHECK(restricted_partition(w, target) == partitions_by_search(w, 0, target));
  }
}

TEST_CASE("residue_fstar examples") {
  const auto q2 = residue_fstar(half_segment(), 2);
  CHECK(q2.period() == 2);
  CHECK(q2.ambient_degree() == 1);
  CHECK(q2.residue(0).entries() == q({0, 1}));
  CHECK(q2.residue(1).entries() == q({0, 1}));

  const auto q1 = residue_fstar(segment(0, 1, Openness::open), 1);
  REQUIRE(q1.residues().size() == 1);
  CHECK(q1.residue(0).entries() == q({0, 1}));

  const Simplex third = segment(0, frac(1, 3), Openness::open);
  const auto q3 = residue_fstar(third, 3);
  for (long h = 1; h <= 20; ++h) CHECK(quasi_eval(q3, h) == count_points(third, h));

  CHECK_THROWS_AS(residue_fstar(half_segment(), 3), InputError);
  CHECK_THROWS_AS(residue_fstar(segment(0, frac(1, 2), Openness::closed), 2), InputError);
  CHECK_THROWS_AS(residue_fstar(half_segment(), 0), InputError);
}

TEST_CASE("quasi_eval examples") {
  const auto q2 = residue_fstar(half_segment(), 2);
  CHECK(quasi_eval(q2, 5) == 2);
  CHECK(quasi_eval(q2, 1) == 0);
  CHECK(quasi_eval(q2, 4) == 1);
  CHECK_THROWS_AS(quasi_eval(q2, 0), InputError);
}

TEST_CASE("a multiple of the minimal period gives the same counts") {
  const auto q4 = residue_fstar(half_segment(), 4);
  for (long h = 1; h <= 24; ++h) CHECK(quasi_eval(q4, h) == count_points(half_segment(), h));
}

TEST_CASE("quasipolynomials match brute force on random rational simplices") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 15; ++t) {
    const auto d = static_cast<std::size_t>(draw(rng, 1, 2));
    std::vector<RatVector> vertices;
    for (std::size_t j = 0; j <= d; ++j) {
      RatVector v;
      for (std::size_t r = 0; r < d; ++r) v.push_back(frac(draw(rng, -3, 3), draw(rng, 1, 3)));
      vertices.push_back(v);
    }
    std::optional<Simplex> s;
    try {
      s.emplace(vertices, Openness::open);
    } catch (const InputError&) {
      continue;
    }
    const long m = s->denominator().get_si();
    const auto quasi = residue_fstar(*s, m);
    for (const FStarVector& f : quasi.residues()) CHECK(f.is_nonnegative_integral());
    CHECK(quasi == residue_fstar(*s, m, -1, {3}));
    for (long h = 1; h <= 3 * m * static_cast<long>(d + 1); ++h) CHECK(quasi_eval(quasi, h) == count_points(*s, h));
  }
}

TEST_CASE("residues of a rational open complex add up") {
  const Simplex point({{frac(1, 2)}}, Openness::open);
  const OpenComplex cells({half_segment(), point});
  const auto sum = residue_fstar(cells, 2, 1);
  for (long h = 1; h <= 12; ++h)
    CHECK(quasi_eval(sum, h) == count_points(half_segment(), h) + count_points(point, h));
}

TEST_CASE("mixed_profile examples") {
  const auto p = mixed_profile(half_segment());
  CHECK(p.vertex_heights == std::vector<Integer>{1, 2});
  CHECK(p.counts.size() == 1);
  CHECK(p.count(1, 3) == 1);
  CHECK(p.total() == 1);

  const auto unit = mixed_profile(segment(0, 1, Openness::open));
  CHECK(unit.vertex_heights == std::vector<Integer>{1, 1});
  CHECK(unit.counts.size() == 1);
  CHECK(unit.count(1, 2) == 1);

  const auto point = mixed_profile(Simplex({{frac(1, 2)}}, Openness::open));
  CHECK(point.vertex_heights == std::vector<Integer>{2});
  CHECK(point.counts.size() == 1);
  CHECK(point.count(0, 2) == 1);
}

TEST_CASE("partition-function counts") {
  const Simplex s = half_segment();
  CHECK(count_via_partition_functions(s, 7) == 3);
  CHECK(count_via_partition_functions(s, 3) == 1);
  CHECK(count_via_partition_functions(s, 2) == 0);
  for (long k = 1; k <= 30; ++k) CHECK(count_via_partition_functions(s, k) == count_points(s, k));

  std::mt19937_64 rng(53);
  for (int t = 0; t < 15; ++t) {
    std::vector<RatVector> vertices;
    for (std::size_t j = 0; j <= 2; ++j)
      vertices.push_back({frac(draw(rng, -3, 3), draw(rng, 1, 3)), frac(draw(rng, -3, 3), draw(rng, 1, 3))});
    std::optional<Simplex> tri;
    try {
      tri.emplace(vertices, Openness::open);
    } catch (const InputError&) {
      continue;
    }
    const auto profile = mixed_profile(*tri);
    for (long k = 1; k <= 12; ++k) CHECK(count_via_partition_functions(profile, k) == count_points(*tri, k));
  }
  CHECK_THROWS_AS(count_via_partition_functions(s, 0), InputError);
}

}  // TEST_SUITE
