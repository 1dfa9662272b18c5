#include "ehrhart/rational.hpp"

namespace ehrhart {

namespace {

constexpr long kMaxPartitionTarget = 50'000'000;

}  // namespace

Integer restricted_partition(const std::vector<Integer>& weights, const Integer& target) {
  for (const Integer& w : weights)
    if (w <= 0) throw InputError("partition weights must be positive");
  if (target < 0) return 0;
  if (target > kMaxPartitionTarget) throw InputError("partition target too large");
  const auto n = static_cast<std::size_t>(target.get_si());
  std::vector<Integer> ways(n + 1, Integer(0));
  ways[0] = 1;
  for (const Integer& w : weights) {
    if (w > target) continue;
    const auto step = static_cast<std::size_t>(w.get_si());
    for (std::size_t t = step; t <= n; ++t) ways[t] += ways[t - step];
  }
  return ways[n];
}

EhrhartQuasiPolynomial::EhrhartQuasiPolynomial(long period, std::vector<FStarVector> residues)
    : period_(period), residues_(std::move(residues)) {
  if (period_ < 1) throw InputError("period must be positive");
  if (residues_.size() != static_cast<std::size_t>(period_)) throw InputError("need one f*-vector per residue");
  for (const FStarVector& f : residues_)
    if (f.ambient_degree() != residues_.front().ambient_degree())
      throw InputError("residue f*-vectors of different ambient degree");
}

EhrhartQuasiPolynomial residue_fstar(const Simplex& simplex, long period, int ambient_degree,
                                     Parallelism parallelism) {
  if (!simplex.is_open()) throw InputError("residue f* counting needs an open simplex");
  if (period < 1) throw InputError("period must be positive");
  if (ambient_degree < 0) ambient_degree = simplex.dimension();
  if (ambient_degree < simplex.dimension()) throw InputError("ambient degree too small");

  const ConeBasis basis = homogenize(simplex, Integer(period));
  std::vector<std::vector<Rational>> counts(static_cast<std::size_t>(period),
                                            std::vector<Rational>(static_cast<std::size_t>(ambient_degree) + 1));
  for (const AtomicPoint& a : enumerate_atomic(basis, parallelism)) {
    const long i = a.level - 1;
    const Integer offset = a.height - i * period - 1;
    if (offset < 0 || offset >= period) throw InvariantViolation("atomic point height outside its level band");
    counts[offset.get_ui()][static_cast<std::size_t>(i)] += 1;
  }
  std::vector<FStarVector> residues;
  for (auto& c : counts) residues.emplace_back(std::move(c));
  return EhrhartQuasiPolynomial(period, std::move(residues));
}

EhrhartQuasiPolynomial residue_fstar(const OpenComplex& complex, long period, int ambient_degree,
                                     Parallelism parallelism) {
  if (ambient_degree < complex.dimension() || ambient_degree < 0) throw InputError("ambient degree too small");
  std::vector<FStarVector> totals(static_cast<std::size_t>(period), FStarVector::zero(ambient_degree));
  for (const Simplex& cell : complex.cells()) {
    const auto q = residue_fstar(cell, period, ambient_degree, parallelism);
    for (std::size_t l = 0; l < totals.size(); ++l) totals[l] = totals[l] + q.residue(l);
  }
  return EhrhartQuasiPolynomial(period, std::move(totals));
}

Integer quasi_eval(const EhrhartQuasiPolynomial& q, long height) {
  if (height < 1) throw InputError("height must be positive");
  const long k = (height - 1) / q.period() + 1;
  const auto l = static_cast<std::size_t>((height - 1) % q.period());
  const FStarVector& f = q.residue(l);
  Rational value;
  for (std::size_t i = 0; i < f.size(); ++i) value += f[i] * Rational(gen_binomial(k - 1, static_cast<unsigned>(i)));
  if (!value.is_integer()) throw InvariantViolation("quasipolynomial value is not an integer");
  return value.numerator();
}

Integer AtomicHeightProfile::count(int level_index, const Integer& height) const {
  auto it = counts.find({level_index, height});
  return it == counts.end() ? Integer(0) : it->second;
}

Integer AtomicHeightProfile::total() const {
  Integer t = 0;
  for (const auto& [key, c] : counts) t += c;
  return t;
}

AtomicHeightProfile mixed_profile(const Simplex& simplex, Parallelism parallelism) {
  if (!simplex.is_open()) throw InputError("mixed height profile needs an open simplex");
  AtomicHeightProfile profile;
  profile.vertex_heights = simplex.vertex_denominators();
  std::vector<IntVector> generators;
  for (std::size_t j = 0; j < simplex.vertices().size(); ++j) {
    const Integer& m = profile.vertex_heights[j];
    IntVector g;
    for (const Rational& x : simplex.vertices()[j]) {
      const Rational scaled = x * Rational(m);
      g.push_back(scaled.numerator());
    }
    g.push_back(m);
    generators.push_back(std::move(g));
  }
  for (const AtomicPoint& a : enumerate_atomic(ConeBasis(std::move(generators)), parallelism))
    profile.counts[{a.level - 1, a.height}] += 1;
  return profile;
}

Integer count_via_partition_functions(const AtomicHeightProfile& profile, long k) {
  if (k < 1) throw InputError("dilate must be positive");
  Integer total = 0;
  for (const auto& [key, c] : profile.counts) {
    const auto& [level_index, height] = key;
    const std::vector<Integer> weights(profile.vertex_heights.begin(),
                                       profile.vertex_heights.begin() + level_index + 1);
    total += c * restricted_partition(weights, Integer(k) - height);
  }
  return total;
}

Integer count_via_partition_functions(const Simplex& simplex, long k) {
  return count_via_partition_functions(mixed_profile(simplex), k);
}

}  // namespace ehrhart
