#pragma once

// Lattice points of simplicial cones: skew integral/fractional parts, the
// half-open fundamental simplex, levels and degrees of coefficient vectors,
// atomic points, the fundamental parallelepiped, and a checker for the
// partition of the open cone into discrete cones rooted at atomic points.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehrhart {

/// Split x = int + fract with fract in (0, 1]. Integers map to (x - 1, 1).
std::pair<Integer, Rational> skew_parts(const Rational& x);
std::pair<IntVector, RatVector> skew_parts(const RatVector& x);

/// Ordered, linearly independent integer generators v_1..v_d in Z^n, n >= d.
///
/// Construction computes an integral left inverse of the generator matrix V
/// once: a set P of d independent rows with D = |det V_P| and A = D V_P^{-1}.
/// For a point z, A z_P = D lambda, so all membership tests below reduce to
/// integer comparisons against D.
class ConeBasis {
 public:
  /// Throws InputError on ragged input, an empty generator list, or linearly
  /// dependent generators ("generators not linearly independent").
  explicit ConeBasis(std::vector<IntVector> generators);

  std::size_t size() const { return generators_.size(); }
  std::size_t ambient_dimension() const { return generators_.front().size(); }
  const std::vector<IntVector>& generators() const { return generators_; }
  const IntVector& generator(std::size_t i) const { return generators_.at(i); }
  /// The n x d matrix whose columns are the generators.
  RatMatrix generator_matrix() const;

  /// Positive scale D of the integral left inverse.
  const Integer& scale() const { return scale_; }
  /// |det V| when the basis is square.
  const Integer& pivot_determinant() const { return scale_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }
  /// A (d x d) with A z_P = D lambda.
  const std::vector<IntVector>& scaled_inverse() const { return scaled_inverse_; }
  /// Rows of V outside the pivot set, as (row index, row).
  const std::vector<std::pair<std::size_t, IntVector>>& other_rows() const { return other_rows_; }

  /// Same generators in the order given by `permutation`.
  ConeBasis permuted(const std::vector<std::size_t>& permutation) const;

  friend bool operator==(const ConeBasis& a, const ConeBasis& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<IntVector> generators_;
  std::vector<std::size_t> pivot_rows_;
  Integer scale_;
  std::vector<IntVector> scaled_inverse_;
  std::vector<std::pair<std::size_t, IntVector>> other_rows_;
};

/// Positive coefficient vector together with its level and degree.
struct CoefficientVector {
  RatVector lambda;
  /// The integer k with k - 1 < sum(lambda) <= k.
  int level = 0;
  /// Smallest (1-based) j with lambda_j > 1, or d + 1 if there is none.
  int degree = 0;

  /// Throws InputError unless every entry is positive.
  static CoefficientVector from_lambda(RatVector lambda);

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

struct AtomicPoint {
  IntVector point;
  CoefficientVector coefficients;
  int level = 0;
  /// Last coordinate of `point`.
  Integer height;

  friend bool operator==(const AtomicPoint&, const AtomicPoint&) = default;
};

/// Worker count for the enumeration kernels. Output never depends on it.
struct Parallelism {
  unsigned threads = 1;
};

/// Coefficients of z in the generators if z lies in the open cone, else nullopt.
/// Throws InputError if z has the wrong dimension.
std::optional<CoefficientVector> coefficients_of(const ConeBasis& basis, const IntVector& z);

/// lambda is atomic iff lambda_j <= 1 for all j < level, i.e. degree >= level.
bool is_atomic(const CoefficientVector& c);

/// All atomic lattice points, sorted lexicographically by coordinates.
std::vector<AtomicPoint> enumerate_atomic(const ConeBasis& basis, Parallelism parallelism = {});

/// Test oracle: builds T_1..T_d literally from the inductive definition by
/// scanning the full ambient bounding box and subtracting reachable points.
std::vector<AtomicPoint> atomic_inductive_oracle(const ConeBasis& basis);

/// Lattice points V lambda with 0 <= lambda_i < 1, sorted lexicographically.
std::vector<IntVector> parallelepiped_points(const ConeBasis& basis, Parallelism parallelism = {});

/// Count of atomic points per level (index 0 is level 1).
std::vector<std::size_t> level_profile(const std::vector<AtomicPoint>& atomic, std::size_t generators);

struct PartitionViolation {
  IntVector point;
  /// Number of atomic points whose discrete cone contains `point`.
  std::size_t cover_count = 0;
};

struct PartitionReport {
  bool passed = false;
  int max_level = 0;
  std::size_t points_checked = 0;
  std::size_t atomic_points = 0;
  /// Points with cover count per level of the point (index 0 is level 1).
  std::vector<std::size_t> points_per_level;
  std::vector<PartitionViolation> violations;
};

/// Checks that every lattice point of the open cone with sum(lambda) <= max_level
/// lies in exactly one a + cone_Z(v_1..v_lev(a)) over the atomic points a.
PartitionReport verify_partition(const ConeBasis& basis, int max_level, Parallelism parallelism = {});

}  // namespace ehrhart
