#pragma once

// The three interchangeable descriptions of a polynomial of bounded degree d:
//
//   monomial   p(k) = sum_i c_i k^i
//   f*-basis   p(k) = sum_i f*_i C(k-1, i)
//   h*-basis   p(k) = sum_i h*_i C(k+d-i, d)
//
// f* does not depend on d beyond zero padding; h* does.

#include <cstddef>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehrhart {

namespace detail {

template <class Tag>
class BasisVector {
 public:
  /// Throws InputError for an empty entry list.
  explicit BasisVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InputError("coefficient vector needs at least one entry");
  }
  explicit BasisVector(const std::vector<Integer>& entries)
      : BasisVector(std::vector<Rational>(entries.begin(), entries.end())) {}

  /// All-zero vector for ambient degree d.
  static BasisVector zero(int d) { return BasisVector(std::vector<Rational>(static_cast<std::size_t>(d) + 1)); }

  int ambient_degree() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_.at(i); }

  bool is_nonnegative_integral() const {
    for (const Rational& x : entries_)
      if (!x.is_integer() || x.sign() < 0) return false;
    return true;
  }

  friend bool operator==(const BasisVector&, const BasisVector&) = default;

 private:
  std::vector<Rational> entries_;
};

struct FStarTag {};
struct HStarTag {};

}  // namespace detail

using FStarVector = detail::BasisVector<detail::FStarTag>;
using HStarVector = detail::BasisVector<detail::HStarTag>;

/// Entrywise sum; both operands must share the ambient degree.
FStarVector operator+(const FStarVector& lhs, const FStarVector& rhs);

/// Throws InputError("ambient degree too small") when d < deg(p).
FStarVector fstar_from_poly(const Polynomial& p, int d);
Polynomial poly_from_fstar(const FStarVector& f);

/// Throws InputError("ambient degree too small") when d < deg(p).
HStarVector hstar_from_poly(const Polynomial& p, int d);
Polynomial poly_from_hstar(const HStarVector& h);

/// Zero-extends to ambient degree `d`; the represented polynomial is unchanged.
FStarVector fstar_pad(const FStarVector& f, int d);

/// Generating-function route from f* to h*:
///   h*(z) = p(0) (1-z)^{d+1} + sum_j f*_j z^{j+1} (1-z)^{d-j},  p(0) = sum_j (-1)^j f*_j.
/// The returned polynomial in z has degree at most d+1; for a valid pair its
/// z^{d+1} coefficient cancels.
Polynomial hstar_series_from_fstar(const FStarVector& f, int d);

/// True iff the series route above reproduces hstar_from_poly(poly_from_fstar(f), d).
bool hstar_fstar_identity_check(const FStarVector& f, int d);

}  // namespace ehrhart
