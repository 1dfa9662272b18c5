#pragma once

// Exact arithmetic substrate: big integers, canonical rationals, vectors,
// matrices with exact elimination, generalized binomials and dense univariate
// polynomials. Nothing in here touches floating point.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehrhart/errors.hpp"

namespace ehrhart {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

/// Rational number kept in lowest terms with a positive denominator at all times.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(Integer(static_cast<long>(value))) {}  // NOLINT
  Rational(const Integer& value) : value_(value) {}                 // NOLINT
  /// Throws InputError if `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p/q" or "p" (optional leading '-'); result is canonical.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  Integer floor() const;
  Integer ceil() const;

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws InputError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

RatVector to_rational(const IntVector& v);
/// Returns std::nullopt if any entry is non-integral.
std::optional<IntVector> to_integer(const RatVector& v);
/// Least common multiple of all denominators (1 for an empty vector).
Integer common_denominator(const RatVector& v);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  /// Throws InputError unless all rows have the same length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  /// Columns become the matrix columns; throws InputError if ragged.
  static RatMatrix from_columns(const std::vector<RatVector>& columns);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RatVector column(std::size_t c) const;
  RatMatrix transposed() const;

  RatVector operator*(std::span<const Rational> x) const;

  std::size_t rank() const;
  /// Row indices of a maximal set of linearly independent rows, ascending.
  std::vector<std::size_t> independent_rows() const;
  /// Square matrices only; throws InputError otherwise.
  Rational determinant() const;
  /// Throws InputError if the matrix is not square and invertible.
  RatMatrix inverse() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solves M x = b exactly. Returns std::nullopt when b is outside the column
/// span. Throws InputError("generators not linearly independent") when M lacks
/// full column rank.
std::optional<RatVector> solve_exact(const RatMatrix& m, std::span<const Rational> b);

/// k (k-1) ... (k-i+1) / i!, defined for every integer k.
Integer gen_binomial(const Integer& k, unsigned i);
inline Integer gen_binomial(long k, unsigned i) { return gen_binomial(Integer(k), i); }

/// Dense univariate polynomial with rational coefficients. The coefficient
/// vector never carries trailing zeros; the zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(unsigned degree, const Rational& c = Rational(1));
  /// The polynomial k -> C(k + shift, i) in the falling-factorial sense.
  static Polynomial binomial(const Rational& shift, unsigned i);
  /// (a + b k)^e.
  static Polynomial linear_power(const Rational& a, const Rational& b, unsigned e);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Zero for indices above the degree.
  Rational coefficient(std::size_t i) const;

  Rational evaluate(const Rational& k) const;
  Rational operator()(const Rational& k) const { return evaluate(k); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& k) { return p.evaluate(k); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace ehrhart
