#include "ehrhart/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ehrhart {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Reduces `m` to reduced row echelon form in place and returns the pivot
// column of each non-zero row.
std::vector<std::size_t> reduce_rows(RatMatrix& m, std::size_t column_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < column_limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_digits(digits)) throw InputError("malformed integer '" + std::string(text) + "'");
  return Integer(std::string(text), 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!is_digits(den)) throw InputError("malformed rational '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), Integer(std::string(den), 10));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InputError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

std::optional<IntVector> to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const Rational& x : v) {
    if (!x.is_integer()) return std::nullopt;
    out.push_back(x.numerator());
  }
  return out;
}

Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  return l;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InputError("matrix rows of unequal length");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<long>(r * m.cols_));
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns) {
  return from_rows(columns).transposed();
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

std::size_t RatMatrix::rank() const {
  RatMatrix work = *this;
  return reduce_rows(work, cols_).size();
}

std::vector<std::size_t> RatMatrix::independent_rows() const {
  RatMatrix work = transposed();
  return reduce_rows(work, work.cols());
}

Rational RatMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  RatMatrix work = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && work(p, c).is_zero()) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(p, j), work(c, j));
      det = -det;
    }
    det *= work(c, c);
    const Rational inv = Rational(1) / work(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (work(i, c).is_zero()) continue;
      const Rational factor = work(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) work(i, j) -= factor * work(c, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RatMatrix work(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) work(r, c) = (*this)(r, c);
    work(r, n + r) = 1;
  }
  if (reduce_rows(work, n).size() != n) throw InputError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = work(r, n + c);
  return inv;
}

std::optional<RatVector> solve_exact(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side has wrong length");
  RatMatrix work(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) work(r, c) = m(r, c);
    work(r, m.cols()) = b[r];
  }
  const auto pivots = reduce_rows(work, m.cols());
  if (pivots.size() != m.cols()) throw InputError("generators not linearly independent");
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    if (!work(r, m.cols()).is_zero()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = work(r, m.cols());
  return x;
}

Integer gen_binomial(const Integer& k, unsigned i) {
  Integer numerator = 1;
  Integer factorial = 1;
  for (unsigned j = 0; j < i; ++j) {
    numerator *= k - j;
    factorial *= j + 1;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), factorial.get_mpz_t());
  return out;
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::binomial(const Rational& shift, unsigned i) {
  Polynomial p = constant(1);
  Rational factorial = 1;
  for (unsigned j = 0; j < i; ++j) {
    p *= Polynomial({shift - j, Rational(1)});
    factorial *= j + 1;
  }
  return p * (Rational(1) / factorial);
}

Polynomial Polynomial::linear_power(const Rational& a, const Rational& b, unsigned e) {
  Polynomial p = constant(1);
  const Polynomial factor({a, b});
  for (unsigned j = 0; j < e; ++j) p *= factor;
  return p;
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& k) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= k;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
      out[i + j] += coefficients_[i] * rhs.coefficients_[j];
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (Rational& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Rational& c : p.coefficients_) c = -c;
  return p;
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const Rational& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c << ")";
    if (i > 0) os << "*k^" << i;
    first = false;
  }
  return os;
}

}  // namespace ehrhart
