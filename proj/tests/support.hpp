#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "ehrhart/bases.hpp"
#include "ehrhart/cone.hpp"
#include "ehrhart/exact.hpp"
#include "ehrhart/simplex.hpp"

namespace test {

using namespace ehrhart;

inline std::vector<Rational> q(std::initializer_list<long> values) { return {values.begin(), values.end()}; }
inline IntVector z(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

inline Rational frac(long p, long d) { return Rational(Integer(p), Integer(d)); }

inline Simplex standard(int d, Openness openness) {
  std::vector<RatVector> vertices;
  for (int j = 0; j <= d; ++j) {
    RatVector v(static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(j)] = 1;
    vertices.push_back(v);
  }
  return Simplex(vertices, openness);
}

// Corner-anchored standard simplex conv(0, e_1, ..., e_d) in R^d.
inline Simplex corner(int d, Openness openness) {
  std::vector<RatVector> vertices(1, RatVector(static_cast<std::size_t>(d)));
  for (int j = 0; j < d; ++j) {
    RatVector v(static_cast<std::size_t>(d));
    v[static_cast<std::size_t>(j)] = 1;
    vertices.push_back(v);
  }
  return Simplex(vertices, openness);
}

inline Simplex segment(Rational a, Rational b, Openness openness) { return Simplex({{a}, {b}}, openness); }

inline Simplex reeve() {
  return Simplex({q({0, 0, 0}), q({1, 0, 0}), q({0, 1, 0}), q({1, 1, 2})}, Openness::closed);
}

inline long draw(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline ConeBasis random_square_basis(std::mt19937_64& rng, std::size_t d, long bound) {
  while (true) {
    std::vector<IntVector> g(d, IntVector(d));
    for (auto& v : g)
      for (auto& x : v) x = draw(rng, -bound, bound);
    try {
      return ConeBasis(g);
    } catch (const InputError&) {
    }
  }
}

inline Simplex random_integral_simplex(std::mt19937_64& rng, std::size_t d, std::size_t n, long bound,
                                       Openness openness) {
  while (true) {
    std::vector<RatVector> vertices;
    for (std::size_t j = 0; j <= d; ++j) {
      RatVector v;
      for (std::size_t r = 0; r < n; ++r) v.emplace_back(draw(rng, -bound, bound));
      vertices.push_back(v);
    }
    try {
      return Simplex(vertices, openness);
    } catch (const InputError&) {
    }
  }
}

// Polynomial through the given values at k = 1..n, by Lagrange interpolation.
inline Polynomial interpolate(const std::vector<Integer>& values) {
  Polynomial p;
  const long n = static_cast<long>(values.size());
  for (long i = 1; i <= n; ++i) {
    Polynomial basis = Polynomial::constant(Rational(values[static_cast<std::size_t>(i - 1)]));
    for (long j = 1; j <= n; ++j) {
      if (j == i) continue;
      basis *= Polynomial(std::vector<Rational>{Rational(-j), Rational(1)});
      basis *= Rational(1) / Rational(i - j);
    }
    p += basis;
  }
  return p;
}

}  // namespace test
