#include "ehrhart/bases.hpp"

#include <functional>

namespace ehrhart {

namespace {

// Coefficients of p in the basis {basis(i, .)}_{i=0..d}, found by solving the
// evaluation system at the sample points k = 1..d+1.
std::vector<Rational> expand_in_basis(const Polynomial& p, int d,
                                      const std::function<Integer(long k, int i)>& basis) {
  if (d < 0 || p.degree() > d) throw InputError("ambient degree too small");
  const auto n = static_cast<std::size_t>(d) + 1;
  RatMatrix m(n, n);
  RatVector rhs(n);
  for (std::size_t row = 0; row < n; ++row) {
    const long k = static_cast<long>(row) + 1;
    for (std::size_t i = 0; i < n; ++i) m(row, i) = basis(k, static_cast<int>(i));
    rhs[row] = p.evaluate(k);
  }
  auto solution = solve_exact(m, rhs);
  if (!solution) throw InvariantViolation("basis evaluation system is inconsistent");
  return *solution;
}

}  // namespace

FStarVector operator+(const FStarVector& lhs, const FStarVector& rhs) {
  if (lhs.size() != rhs.size()) throw InputError("f*-vectors of different ambient degree");
  std::vector<Rational> out = lhs.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs[i];
  return FStarVector(std::move(out));
}

FStarVector fstar_from_poly(const Polynomial& p, int d) {
  return FStarVector(expand_in_basis(
      p, d, [](long k, int i) { return gen_binomial(k - 1, static_cast<unsigned>(i)); }));
}

Polynomial poly_from_fstar(const FStarVector& f) {
  Polynomial p;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) p += Polynomial::binomial(-1, static_cast<unsigned>(i)) * f[i];
  return p;
}

HStarVector hstar_from_poly(const Polynomial& p, int d) {
  return HStarVector(expand_in_basis(p, d, [d](long k, int i) {
    return gen_binomial(k + d - i, static_cast<unsigned>(d));
  }));
}

Polynomial poly_from_hstar(const HStarVector& h) {
  const int d = h.ambient_degree();
  Polynomial p;
  for (int i = 0; i <= d; ++i) {
    const Rational& c = h[static_cast<std::size_t>(i)];
    if (!c.is_zero()) p += Polynomial::binomial(d - i, static_cast<unsigned>(d)) * c;
  }
  return p;
}

FStarVector fstar_pad(const FStarVector& f, int d) {
  if (d < f.ambient_degree()) throw InputError("cannot pad f*-vector to a smaller ambient degree");
  std::vector<Rational> out = f.entries();
  out.resize(static_cast<std::size_t>(d) + 1);
  return FStarVector(std::move(out));
}

Polynomial hstar_series_from_fstar(const FStarVector& f, int d) {
  if (d < 0) throw InputError("ambient degree too small");
  Rational p0;
  for (std::size_t j = 0; j < f.size(); ++j) p0 += (j % 2 == 0) ? f[j] : -f[j];

  // Polynomials in z here; (1 - z)^e is linear_power(1, -1, e).
  Polynomial series = Polynomial::linear_power(1, -1, static_cast<unsigned>(d) + 1) * p0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    if (static_cast<int>(j) > d) throw InputError("ambient degree too small");
    series += Polynomial::monomial(static_cast<unsigned>(j) + 1, f[j]) *
              Polynomial::linear_power(1, -1, static_cast<unsigned>(d - static_cast<int>(j)));
  }
  return series;
}

bool hstar_fstar_identity_check(const FStarVector& f, int d) {
  const Polynomial p = poly_from_fstar(f);
  if (d < 0 || p.degree() > d) return false;
  const HStarVector h = hstar_from_poly(p, d);
  return hstar_series_from_fstar(f, d) == Polynomial(h.entries());
}

}  // namespace ehrhart
