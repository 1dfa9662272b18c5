#include "ehrhart/cone.hpp"

#include <algorithm>
#include <thread>

namespace ehrhart {

namespace {

using Box = std::vector<std::pair<Integer, Integer>>;

// Bounding box, in the pivot coordinates, of conv(0, s v_1, ..., s v_d).
Box scaled_simplex_box(const ConeBasis& basis, long s) {
  Box box;
  for (std::size_t row : basis.pivot_rows()) {
    Integer lo = 0;
    Integer hi = 0;
    for (const IntVector& v : basis.generators()) {
      const Integer x = v[row] * s;
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    box.emplace_back(lo, hi);
  }
  return box;
}

// Bounding box, in the pivot coordinates, of the closed parallelepiped.
Box parallelepiped_box(const ConeBasis& basis) {
  Box box;
  for (std::size_t row : basis.pivot_rows()) {
    Integer lo = 0;
    Integer hi = 0;
    for (const IntVector& v : basis.generators()) {
      if (v[row] < 0) lo += v[row];
      else hi += v[row];
    }
    box.emplace_back(lo, hi);
  }
  return box;
}

// Walks every integer point z_P of `box` in odometer order and calls
// visit(z_P, N) with N = A z_P = D lambda maintained incrementally.
template <class Visit>
void scan_box(const ConeBasis& basis, const Box& box, Visit&& visit) {
  const std::size_t d = basis.size();
  const auto& inverse = basis.scaled_inverse();
  IntVector z(d);
  IntVector n(d);
  for (std::size_t c = 0; c < d; ++c) {
    if (box[c].first > box[c].second) return;
    z[c] = box[c].first;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) n[i] += inverse[i][c] * z[c];

  Integer span;
  while (true) {
    visit(static_cast<const IntVector&>(z), static_cast<const IntVector&>(n));
    std::size_t c = d;
    while (c-- > 0) {
      if (z[c] < box[c].second) {
        ++z[c];
        for (std::size_t i = 0; i < d; ++i) n[i] += inverse[i][c];
        break;
      }
      span = box[c].second - box[c].first;
      for (std::size_t i = 0; i < d; ++i) n[i] -= inverse[i][c] * span;
      z[c] = box[c].first;
      if (c == 0) return;
    }
  }
}

// Splits the first box coordinate across workers; each worker appends to its
// own output, which are concatenated in worker order.
template <class Result, class Visit>
std::vector<Result> scan_collect(const ConeBasis& basis, const Box& box, Parallelism parallelism,
                                 Visit visit) {
  const Integer first_span = box.front().second - box.front().first + 1;
  unsigned workers = std::max(1u, parallelism.threads);
  if (first_span < workers) workers = static_cast<unsigned>(std::max<long>(1, first_span.get_si()));

  std::vector<std::vector<Result>> outputs(workers);
  auto run = [&](unsigned w) {
    Box sub = box;
    const Integer lo = box.front().first;
    sub.front().first = lo + first_span * w / workers;
    sub.front().second = lo + first_span * (w + 1) / workers - 1;
    scan_box(basis, sub, [&](const IntVector& z, const IntVector& n) { visit(z, n, outputs[w]); });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<Result> out;
  for (auto& part : outputs) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

// Fills the non-pivot coordinates of z = V lambda; false if any is fractional.
bool complete_point(const ConeBasis& basis, const IntVector& pivot_values, const IntVector& n,
                    IntVector& point) {
  point.assign(basis.ambient_dimension(), Integer(0));
  for (std::size_t r = 0; r < basis.pivot_rows().size(); ++r) point[basis.pivot_rows()[r]] = pivot_values[r];
  Integer acc;
  for (const auto& [row, coeffs] : basis.other_rows()) {
    acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * n[i];
    if (!mpz_divisible_p(acc.get_mpz_t(), basis.scale().get_mpz_t())) return false;
    mpz_divexact(point[row].get_mpz_t(), acc.get_mpz_t(), basis.scale().get_mpz_t());
  }
  return true;
}

bool all_positive(const IntVector& n) {
  return std::all_of(n.begin(), n.end(), [](const Integer& x) { return sgn(x) > 0; });
}

Integer sum_of(const IntVector& n) {
  Integer s = 0;
  for (const Integer& x : n) s += x;
  return s;
}

// ceil(sum / D) for a positive sum.
int level_of_scaled_sum(const Integer& sum, const Integer& scale) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), sum.get_mpz_t(), scale.get_mpz_t());
  return static_cast<int>(q.get_si());
}

AtomicPoint make_atomic_point(IntVector point, CoefficientVector coefficients) {
  AtomicPoint a;
  a.height = point.back();
  a.point = std::move(point);
  a.level = coefficients.level;
  a.coefficients = std::move(coefficients);
  return a;
}

bool by_point(const AtomicPoint& a, const AtomicPoint& b) { return a.point < b.point; }

// mu - lambda in Z_{>=0}^reach x {0}^(d - reach).
bool reachable(const RatVector& lambda, const RatVector& mu, std::size_t reach) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Rational diff = mu[i] - lambda[i];
    if (i < reach) {
      if (!diff.is_integer() || diff.sign() < 0) return false;
    } else if (!diff.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::pair<Integer, Rational> skew_parts(const Rational& x) {
  if (x.is_integer()) return {x.numerator() - 1, Rational(1)};
  const Integer whole = x.floor();
  return {whole, x - Rational(whole)};
}

std::pair<IntVector, RatVector> skew_parts(const RatVector& x) {
  IntVector whole;
  RatVector frac;
  for (const Rational& v : x) {
    auto [w, f] = skew_parts(v);
    whole.push_back(std::move(w));
    frac.push_back(std::move(f));
  }
  return {std::move(whole), std::move(frac)};
}

ConeBasis::ConeBasis(std::vector<IntVector> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InputError("cone basis needs at least one generator");
  const std::size_t n = generators_.front().size();
  if (n == 0) throw InputError("generators must have positive dimension");
  for (const IntVector& v : generators_)
    if (v.size() != n) throw InputError("generators of unequal dimension");

  const std::size_t d = generators_.size();
  const RatMatrix v = generator_matrix();
  std::vector<std::size_t> rows = v.independent_rows();
  if (rows.size() != d) throw InputError("generators not linearly independent");
  pivot_rows_ = rows;

  RatMatrix square(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) square(r, c) = generators_[c][pivot_rows_[r]];
  const Rational det = square.determinant();
  scale_ = det.sign() < 0 ? Integer(-det.numerator()) : det.numerator();
  const RatMatrix inverse = square.inverse();
  scaled_inverse_.assign(d, IntVector(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const Rational entry = inverse(r, c) * Rational(scale_);
      if (!entry.is_integer()) throw InvariantViolation("adjugate of an integer matrix is not integral");
      scaled_inverse_[r][c] = entry.numerator();
    }
  }
  for (std::size_t row = 0; row < n; ++row) {
    if (std::find(pivot_rows_.begin(), pivot_rows_.end(), row) != pivot_rows_.end()) continue;
    IntVector coeffs;
    for (const IntVector& g : generators_) coeffs.push_back(g[row]);
    other_rows_.emplace_back(row, std::move(coeffs));
  }
}

RatMatrix ConeBasis::generator_matrix() const {
  std::vector<RatVector> columns;
  for (const IntVector& g : generators_) columns.push_back(to_rational(g));
  return RatMatrix::from_columns(columns);
}

ConeBasis ConeBasis::permuted(const std::vector<std::size_t>& permutation) const {
  if (permutation.size() != size()) throw InputError("permutation has wrong length");
  std::vector<IntVector> out;
  for (std::size_t i : permutation) out.push_back(generator(i));
  return ConeBasis(std::move(out));
}

CoefficientVector CoefficientVector::from_lambda(RatVector lambda) {
  Rational sum;
  for (const Rational& x : lambda) {
    if (x.sign() <= 0) throw InputError("coefficient vector must be positive");
    sum += x;
  }
  CoefficientVector c;
  c.level = static_cast<int>(sum.ceil().get_si());
  c.degree = static_cast<int>(lambda.size()) + 1;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] > Rational(1)) {
      c.degree = static_cast<int>(j) + 1;
      break;
    }
  }
  c.lambda = std::move(lambda);
  return c;
}

std::optional<CoefficientVector> coefficients_of(const ConeBasis& basis, const IntVector& z) {
  if (z.size() != basis.ambient_dimension()) throw InputError("point has wrong dimension");
  const RatVector rhs = to_rational(z);
  auto lambda = solve_exact(basis.generator_matrix(), rhs);
  if (!lambda) return std::nullopt;
  for (const Rational& x : *lambda)
    if (x.sign() <= 0) return std::nullopt;
  return CoefficientVector::from_lambda(std::move(*lambda));
}

bool is_atomic(const CoefficientVector& c) { return c.degree >= c.level; }

std::vector<AtomicPoint> enumerate_atomic(const ConeBasis& basis, Parallelism parallelism) {
  const long d = static_cast<long>(basis.size());
  const Integer& scale = basis.scale();
  const Integer limit = scale * d;
  auto points = scan_collect<AtomicPoint>(
      basis, scaled_simplex_box(basis, d), parallelism,
      [&](const IntVector& z, const IntVector& n, std::vector<AtomicPoint>& out) {
        if (!all_positive(n)) return;
        const Integer sum = sum_of(n);
        if (sum > limit) return;
        const int level = level_of_scaled_sum(sum, scale);
        for (int j = 0; j + 1 < level; ++j)
          if (n[static_cast<std::size_t>(j)] > scale) return;
        IntVector point;
        if (!complete_point(basis, z, n, point)) return;
        RatVector lambda;
        for (const Integer& x : n) lambda.emplace_back(x, scale);
        out.push_back(make_atomic_point(std::move(point), CoefficientVector::from_lambda(std::move(lambda))));
      });
  std::sort(points.begin(), points.end(), by_point);
  return points;
}

std::vector<AtomicPoint> atomic_inductive_oracle(const ConeBasis& basis) {
  const std::size_t d = basis.size();
  const std::size_t n = basis.ambient_dimension();

  std::vector<Integer> lo(n, Integer(0));
  std::vector<Integer> hi(n, Integer(0));
  for (const IntVector& v : basis.generators()) {
    for (std::size_t r = 0; r < n; ++r) {
      const Integer x = v[r] * static_cast<long>(d);
      if (x < lo[r]) lo[r] = x;
      if (x > hi[r]) hi[r] = x;
    }
  }

  // Lev(k) for k = 1..d.
  std::vector<std::vector<AtomicPoint>> levels(d + 1);
  IntVector z = lo;
  while (true) {
    if (auto c = coefficients_of(basis, z); c && c->level <= static_cast<int>(d)) {
      const auto k = static_cast<std::size_t>(c->level);
      levels[k].push_back(make_atomic_point(z, std::move(*c)));
    }
    std::size_t r = n;
    bool done = true;
    while (r-- > 0) {
      if (z[r] < hi[r]) {
        ++z[r];
        done = false;
        break;
      }
      z[r] = lo[r];
    }
    if (done) break;
  }

  std::vector<std::vector<AtomicPoint>> t(d + 1);
  for (std::size_t k = 1; k <= d; ++k) {
    for (AtomicPoint& candidate : levels[k]) {
      bool covered = false;
      for (std::size_t i = 1; i < k && !covered; ++i)
        for (const AtomicPoint& a : t[i])
          if (reachable(a.coefficients.lambda, candidate.coefficients.lambda, i)) {
            covered = true;
            break;
          }
      if (!covered) t[k].push_back(std::move(candidate));
    }
  }

  std::vector<AtomicPoint> out;
  for (auto& level : t) std::move(level.begin(), level.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), by_point);
  return out;
}

std::vector<IntVector> parallelepiped_points(const ConeBasis& basis, Parallelism parallelism) {
  const Integer& scale = basis.scale();
  auto points = scan_collect<IntVector>(
      basis, parallelepiped_box(basis), parallelism,
      [&](const IntVector& z, const IntVector& n, std::vector<IntVector>& out) {
        for (const Integer& x : n)
          if (sgn(x) < 0 || x >= scale) return;
        IntVector point;
        if (complete_point(basis, z, n, point)) out.push_back(std::move(point));
      });
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<std::size_t> level_profile(const std::vector<AtomicPoint>& atomic, std::size_t generators) {
  std::vector<std::size_t> profile(generators, 0);
  for (const AtomicPoint& a : atomic) {
    if (a.level < 1 || static_cast<std::size_t>(a.level) > generators)
      throw InvariantViolation("atomic point above the top level");
    ++profile[static_cast<std::size_t>(a.level) - 1];
  }
  return profile;
}

PartitionReport verify_partition(const ConeBasis& basis, int max_level, Parallelism parallelism) {
  if (max_level < 1) throw InputError("max level must be positive");
  const Integer& scale = basis.scale();
  const Integer limit = scale * static_cast<long>(max_level);
  const std::size_t d = basis.size();

  struct Root {
    IntVector scaled;
    std::size_t level;
  };
  std::vector<Root> roots;
  const auto atomic = enumerate_atomic(basis, parallelism);
  for (const AtomicPoint& a : atomic) {
    Root r{IntVector(d), static_cast<std::size_t>(a.level)};
    for (std::size_t i = 0; i < d; ++i) {
      const Rational scaled = a.coefficients.lambda[i] * Rational(scale);
      r.scaled[i] = scaled.numerator();
    }
    roots.push_back(std::move(r));
  }

  struct Visit {
    IntVector point;
    int level;
    std::size_t cover;
  };
  auto visits = scan_collect<Visit>(
      basis, scaled_simplex_box(basis, max_level), parallelism,
      [&](const IntVector& z, const IntVector& n, std::vector<Visit>& out) {
        if (!all_positive(n)) return;
        const Integer sum = sum_of(n);
        if (sum > limit) return;
        IntVector point;
        if (!complete_point(basis, z, n, point)) return;
        std::size_t cover = 0;
        for (const Root& root : roots) {
          bool inside = true;
          for (std::size_t i = 0; i < d && inside; ++i) {
            if (i < root.level) {
              inside = cmp(n[i], root.scaled[i]) >= 0 &&
                       mpz_congruent_p(n[i].get_mpz_t(), root.scaled[i].get_mpz_t(), scale.get_mpz_t());
            } else {
              inside = cmp(n[i], root.scaled[i]) == 0;
            }
          }
          if (inside) ++cover;
        }
        out.push_back({std::move(point), level_of_scaled_sum(sum, scale), cover});
      });

  PartitionReport report;
  report.max_level = max_level;
  report.atomic_points = atomic.size();
  report.points_per_level.assign(static_cast<std::size_t>(max_level), 0);
  for (Visit& v : visits) {
    ++report.points_checked;
    ++report.points_per_level[static_cast<std::size_t>(v.level) - 1];
    if (v.cover != 1) report.violations.push_back({std::move(v.point), v.cover});
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const PartitionViolation& a, const PartitionViolation& b) { return a.point < b.point; });
  report.passed = report.violations.empty();
  return report;
}

}  // namespace ehrhart
