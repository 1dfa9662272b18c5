#pragma once

// Ehrhart quasipolynomials of rational simplices.
//
// Height anchoring: residue l (0 <= l < m) describes the heights
// h = (k-1) m + l + 1, k >= 1, i.e. h = l + 1 (mod m), and
//
//   L(h) = sum_i f*_i(l) C(k-1, i).
//
// An atomic point at level i+1 of the cone over m * simplex has height
// i m + l + 1 for exactly one such l, and contributes to f*_i(l).

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ehrhart/bases.hpp"
#include "ehrhart/cone.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

/// Number of non-negative integer solutions of sum_i x_i w_i = target; 0 for a
/// negative target, 1 for target 0. Throws InputError on non-positive weights.
Integer restricted_partition(const std::vector<Integer>& weights, const Integer& target);

class EhrhartQuasiPolynomial {
 public:
  /// One f*-vector per residue, all of the same ambient degree.
  EhrhartQuasiPolynomial(long period, std::vector<FStarVector> residues);

  long period() const { return period_; }
  int ambient_degree() const { return residues_.front().ambient_degree(); }
  const std::vector<FStarVector>& residues() const { return residues_; }
  /// Residue l covers heights congruent to l + 1 modulo the period.
  const FStarVector& residue(std::size_t l) const { return residues_.at(l); }

  friend bool operator==(const EhrhartQuasiPolynomial&, const EhrhartQuasiPolynomial&) = default;

 private:
  long period_;
  std::vector<FStarVector> residues_;
};

/// Residue f*-vectors of an open rational simplex from atomic points of the
/// cone over period * simplex. `ambient_degree` defaults to the dimension.
EhrhartQuasiPolynomial residue_fstar(const Simplex& simplex, long period, int ambient_degree = -1,
                                     Parallelism parallelism = {});
/// Residue-wise sum over the cells of a rational open complex.
EhrhartQuasiPolynomial residue_fstar(const OpenComplex& complex, long period, int ambient_degree,
                                     Parallelism parallelism = {});

/// Throws InputError for h < 1.
Integer quasi_eval(const EhrhartQuasiPolynomial& q, long height);

/// Atomic point counts of the cone over the simplex graded by per-vertex heights.
struct AtomicHeightProfile {
  /// Minimal m_i with m_i v_i integral, in vertex order.
  std::vector<Integer> vertex_heights;
  /// (level - 1, height) -> number of atomic points.
  std::map<std::pair<int, Integer>, Integer> counts;

  Integer count(int level_index, const Integer& height) const;
  Integer total() const;
};

/// Profile from the cone generated by (m_i v_i, m_i).
AtomicHeightProfile mixed_profile(const Simplex& simplex, Parallelism parallelism = {});

/// L(k) = sum_{i,s} c_{i,s} p_{m_1..m_{i+1}}(k - s).
Integer count_via_partition_functions(const AtomicHeightProfile& profile, long k);
Integer count_via_partition_functions(const Simplex& simplex, long k);

}  // namespace ehrhart
