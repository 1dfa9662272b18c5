#include "ehrhart/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include <unistd.h>

#include "ehrhart/cli.hpp"
#include "ehrhart/io.hpp"

namespace ehrhart::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail << "failed: " << what << "; ";
    }
  }
};

// Inputs shared across criteria, generated once from fixed seeds.
struct Corpus {
  std::vector<Simplex> integral_open;
  std::vector<Simplex> rational_open;
  std::vector<Simplex> standard_closed;  // dimensions 0..4
  std::vector<std::pair<FStarVector, int>> produced_fstar;
};

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Simplex standard_simplex(int d, Openness openness) {
  std::vector<RatVector> vertices;
  for (int j = 0; j <= d; ++j) {
    RatVector v(static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(j)] = 1;
    vertices.push_back(std::move(v));
  }
  return Simplex(std::move(vertices), openness);
}

std::vector<Simplex> random_integral_simplices(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Simplex> out;
  while (out.size() < count) {
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t n = uniform(rng, 0, 2) == 0 ? std::min<std::size_t>(d + 1, 4) : d;
    std::vector<RatVector> vertices;
    for (std::size_t j = 0; j <= d; ++j) {
      RatVector v;
      for (std::size_t r = 0; r < n; ++r) v.emplace_back(uniform(rng, -3, 3));
      vertices.push_back(std::move(v));
    }
    try {
      out.emplace_back(std::move(vertices), Openness::open);
    } catch (const InputError&) {
      // affinely dependent draw
    }
  }
  return out;
}

std::vector<Simplex> random_rational_simplices(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Simplex> out;
  while (out.size() < count) {
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::vector<RatVector> vertices;
    for (std::size_t j = 0; j <= d; ++j) {
      RatVector v;
      for (std::size_t r = 0; r < d; ++r) v.emplace_back(Integer(uniform(rng, -3, 3)), Integer(uniform(rng, 1, 3)));
      vertices.push_back(std::move(v));
    }
    try {
      out.emplace_back(std::move(vertices), Openness::open);
    } catch (const InputError&) {
    }
  }
  return out;
}

ConeBasis random_cone_basis(std::mt19937_64& rng) {
  while (true) {
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<IntVector> generators(d, IntVector(d));
    for (auto& g : generators)
      for (auto& x : g) x = uniform(rng, -4, 4);
    try {
      return ConeBasis(std::move(generators));
    } catch (const InputError&) {
    }
  }
}

std::vector<Rational> rationals(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

std::string show(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

Outcome criterion_coloring(Corpus& corpus) {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() /
                    ("ehrhart_acceptance_hypergraph_" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream file(path);
    file << R"({"vertices": 10, "edges": [[1,2,3,4,5,6],[4,5,6,7,8,9],[1,2,3,7,8,9]]})";
  }
  const std::string p = path.string();
  const char* argv[] = {"ehrhart", "coloring-complex", "--hypergraph", p.c_str()};
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(4, argv, out, err);
  std::filesystem::remove(path);
  o.require(code == 0, "coloring-complex exit code " + std::to_string(code) + " " + err.str());
  if (!o.passed) return o;

  const io::json j = io::json::parse(out.str());
  const auto hstar = io::hstar_from_json({{"hstar", j.at("hstar")}});
  const auto fstar = io::fstar_from_json({{"fstar", j.at("fstar")}});
  o.require(hstar.entries() == rationals({-4, 102, 168, 94}), "h* = " + show(hstar.entries()));
  o.require(fstar.entries() == rationals({86, 450, 720, 360}), "f* = " + show(fstar.entries()));
  o.require(fstar.is_nonnegative_integral(), "f* non-negative");
  o.require(hstar[0].sign() < 0, "h* has a negative entry");
  corpus.produced_fstar.emplace_back(fstar, 3);
  o.detail << "h*=" << show(hstar.entries()) << " f*=" << show(fstar.entries());
  return o;
}

Outcome criterion_coloring_components(Corpus& corpus) {
  Outcome o;
  const Hypergraph sphere(10, {{1, 2, 3, 4, 5, 6}});
  const auto s = coloring_complex_hstar(sphere);
  o.require(s.fstar.entries() == rationals({30, 150, 240, 120}), "sphere f = " + show(s.fstar.entries()));
  o.require(s.hstar.entries() == rationals({0, 30, 60, 30}), "sphere h* = " + show(s.hstar.entries()));

  // The shared subsphere: colorings constant on all three edges at once, i.e. on {1..9}.
  const Hypergraph shared(10, {{1, 2, 3, 4, 5, 6, 7, 8, 9}});
  const auto two_points = coloring_complex_hstar(shared);
  o.require(two_points.f == std::vector<Integer>{2}, "two-point complex has two isolated vertices");
  const FStarVector padded = fstar_pad(two_points.fstar, 3);
  const HStarVector h3 = hstar_from_poly(poly_from_fstar(padded), 3);
  o.require(h3.entries() == rationals({2, -6, 6, -2}), "h*(S',3) = " + show(h3.entries()));

  const Hypergraph example(10, {{1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9}, {1, 2, 3, 7, 8, 9}});
  std::vector<Coloring> common = improper_vertex_set(example, 0);
  for (std::size_t e = 1; e < 3; ++e) {
    const auto other = improper_vertex_set(example, e);
    std::vector<Coloring> next;
    std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
    common = std::move(next);
  }
  o.require(common == improper_vertex_set(shared, 0), "spheres intersect exactly in the two-point subsphere");

  corpus.produced_fstar.emplace_back(s.fstar, 3);
  corpus.produced_fstar.emplace_back(padded, 3);
  o.detail << "sphere h*=" << show(s.hstar.entries()) << " h*(S',3)=" << show(h3.entries());
  return o;
}

Outcome criterion_standard_half_open() {
  Outcome o;
  std::size_t checks = 0;
  for (int d = 0; d <= 4; ++d) {
    const Simplex closed = standard_simplex(d, Openness::closed);
    for (int i = 0; i <= d + 1; ++i) {
      std::vector<bool> open(static_cast<std::size_t>(d) + 1, false);
      for (int j = 0; j < i && j <= d; ++j) open[static_cast<std::size_t>(j)] = true;
      for (long k = 1; k <= 8; ++k) {
        const Integer expected = gen_binomial(k + d - i, static_cast<unsigned>(d));
        const Integer got = count_points_half_open(closed, open, k);
        ++checks;
        o.require(got == expected, "d=" + std::to_string(d) + " i=" + std::to_string(i) + " k=" +
                                       std::to_string(k) + " count " + to_string(got));
      }
    }
  }
  o.detail << checks << " counts";
  return o;
}

Outcome criterion_partition(const Corpus& corpus) {
  Outcome o;
  std::mt19937_64 rng(0x5eed0004);
  std::vector<ConeBasis> bases;
  for (int i = 0; i < 100; ++i) bases.push_back(random_cone_basis(rng));
  for (const Simplex& s : corpus.standard_closed) bases.push_back(homogenize(s, 1));
  for (const Simplex& s : corpus.integral_open) bases.push_back(homogenize(s, 1));

  std::size_t points = 0;
  for (const ConeBasis& b : bases) {
    const auto report = verify_partition(b, static_cast<int>(b.size()) + 2);
    points += report.points_checked;
    o.require(report.passed, "partition violated on " + io::to_json(b).dump());
  }
  o.detail << bases.size() << " bases, " << points << " points";
  return o;
}

Outcome criterion_fstar_oracle(Corpus& corpus) {
  Outcome o;
  std::vector<Simplex> simplices = corpus.integral_open;
  for (const Simplex& s : corpus.standard_closed) simplices.push_back(s.with_openness(Openness::open));
  for (const Simplex& s : simplices) {
    const FStarVector atomic = fstar_simplex(s, s.dimension());
    const FStarVector interpolated = fstar_interpolate(s, s.dimension());
    o.require(atomic == interpolated, "f* mismatch " + show(atomic.entries()) + " vs " + show(interpolated.entries()));
    corpus.produced_fstar.emplace_back(atomic, s.dimension());
  }
  const Simplex segment({rationals({0}), rationals({2})}, Openness::open);
  o.require(fstar_simplex(segment, 1).entries() == rationals({1, 2}), "open (0,2) gives (1,2)");
  for (const Simplex& s : corpus.standard_closed) {
    std::vector<Rational> expected(static_cast<std::size_t>(s.dimension()) + 1);
    expected.back() = 1;
    o.require(fstar_simplex(s.with_openness(Openness::open), s.dimension()).entries() == expected,
              "open standard simplex of dimension " + std::to_string(s.dimension()));
  }
  o.detail << simplices.size() + 1 << " simplices";
  return o;
}

Outcome criterion_hstar_two_paths(Corpus& corpus) {
  Outcome o;
  std::vector<Simplex> closed = corpus.standard_closed;
  for (const Simplex& s : corpus.integral_open) closed.push_back(s.with_openness(Openness::closed));
  for (const Simplex& s : closed) {
    const int d = s.dimension();
    const HStarVector parallelepiped = hstar_simplex(s);
    const FStarVector f = fstar_complex(open_faces(s), d);
    const HStarVector converted = hstar_from_poly(poly_from_fstar(f), d);
    o.require(parallelepiped == converted,
              "h* mismatch " + show(parallelepiped.entries()) + " vs " + show(converted.entries()));
    o.require(parallelepiped.is_nonnegative_integral(), "h* non-negative");
    corpus.produced_fstar.emplace_back(f, d);
  }
  o.detail << closed.size() << " closed simplices";
  return o;
}

Outcome criterion_rational(Corpus& corpus) {
  Outcome o;
  const Simplex half({rationals({0}), {Rational(1, 2)}}, Openness::open);
  const auto q = residue_fstar(half, 2);
  o.require(q.residue(0).entries() == rationals({0, 1}) && q.residue(1).entries() == rationals({0, 1}),
            "(0,1/2) residues " + show(q.residue(0).entries()) + " " + show(q.residue(1).entries()));
  for (long h = 1; h <= 20; ++h) o.require(quasi_eval(q, h) == count_points(half, h), "(0,1/2) at h=" + std::to_string(h));

  std::size_t evaluations = 0;
  for (const Simplex& s : corpus.rational_open) {
    const long m = s.denominator().get_si();
    const auto qs = residue_fstar(s, m);
    for (const FStarVector& f : qs.residues()) {
      o.require(f.is_nonnegative_integral(), "residue f* non-negative integral");
      corpus.produced_fstar.emplace_back(f, s.dimension());
    }
    const long top = 4 * m * (s.dimension() + 1);
    for (long h = 1; h <= top; ++h, ++evaluations)
      o.require(quasi_eval(qs, h) == count_points(s, h), "quasipolynomial mismatch at h=" + std::to_string(h) +
                                                             " for " + io::to_json(s).dump());
  }

  // Disjoint cells: the open segment (0,1/2) and the point 1/2 sum to the half-open [1/2 excluded at 0].
  const OpenComplex cells({half, Simplex({{Rational(1, 2)}}, Openness::open)});
  const auto total = residue_fstar(cells, 2, 1);
  for (const FStarVector& f : total.residues()) o.require(f.is_nonnegative_integral(), "complex residue f*");
  o.detail << corpus.rational_open.size() << " rational simplices, " << evaluations << " evaluations";
  return o;
}

Outcome criterion_mixed_heights(const Corpus& corpus) {
  Outcome o;
  const Simplex half({rationals({0}), {Rational(1, 2)}}, Openness::open);
  const AtomicHeightProfile profile = mixed_profile(half);
  o.require(profile.vertex_heights == std::vector<Integer>{1, 2}, "vertex heights (1,2)");
  o.require(profile.counts.size() == 1 && profile.count(1, 3) == 1, "profile is exactly c_{1,3} = 1");
  for (long k = 1; k <= 20; ++k)
    o.require(count_via_partition_functions(profile, k) == count_points(half, k), "(0,1/2) at k=" + std::to_string(k));

  for (const Simplex& s : corpus.rational_open) {
    const AtomicHeightProfile p = mixed_profile(s);
    for (long k = 1; k <= 20; ++k)
      o.require(count_via_partition_functions(p, k) == count_points(s, k),
                "mixed-height count mismatch at k=" + std::to_string(k) + " for " + io::to_json(s).dump());
  }
  o.require(restricted_partition({1, 2}, 4) == 3, "p_{1,2}(4) = 3");
  o.require(restricted_partition({3, 5, 7}, 0) == 1, "p(0) = 1");
  o.require(restricted_partition({2, 2}, 3) == 0, "p_{2,2}(3) = 0");
  o.detail << corpus.rational_open.size() + 1 << " simplices x 20 dilates";
  return o;
}

Outcome criterion_bases(const Corpus& corpus) {
  Outcome o;
  std::mt19937_64 rng(0x5eed0009);
  for (int trial = 0; trial < 200; ++trial) {
    const long degree = uniform(rng, -1, 6);
    std::vector<Rational> coeffs;
    for (long i = 0; i <= degree; ++i) coeffs.emplace_back(Integer(uniform(rng, -9, 9)), Integer(uniform(rng, 1, 6)));
    if (degree >= 0 && coeffs.back().is_zero()) coeffs.back() = 1;
    const Polynomial p(coeffs);
    const int d = static_cast<int>(uniform(rng, std::max<long>(0, p.degree()), 6));
    const FStarVector f = fstar_from_poly(p, d);
    const HStarVector h = hstar_from_poly(p, d);
    o.require(poly_from_fstar(f) == p && fstar_from_poly(poly_from_fstar(f), d) == f, "f* round trip");
    o.require(poly_from_hstar(h) == p && hstar_from_poly(poly_from_hstar(h), d) == h, "h* round trip");
    o.require(hstar_from_poly(poly_from_fstar(f), d) == h, "monomial -> f* -> h* agrees with monomial -> h*");
    o.require(hstar_fstar_identity_check(f, d), "series identity on random polynomial");

    const int d2 = static_cast<int>(uniform(rng, std::max<long>(0, p.degree()), 6));
    const FStarVector f2 = fstar_from_poly(p, d2);
    for (int i = 0; i <= std::min(d, d2); ++i)
      o.require(f[static_cast<std::size_t>(i)] == f2[static_cast<std::size_t>(i)], "f*-stability");
  }

  const HStarVector low = hstar_from_poly(Polynomial::constant(2), 1);
  const HStarVector high = hstar_from_poly(Polynomial::constant(2), 3);
  const bool stable = low[0] == high[0] && low[1] == high[1];
  o.require(!stable, "h* must depend on the ambient degree for constant 2");

  for (const auto& [f, d] : corpus.produced_fstar)
    o.require(hstar_fstar_identity_check(f, d), "series identity on produced f* " + show(f.entries()));
  o.detail << "200 polynomials, " << corpus.produced_fstar.size() << " produced f*-vectors";
  return o;
}

Outcome criterion_permutations() {
  Outcome o;
  std::mt19937_64 rng(0x5eed000a);
  for (int i = 0; i < 20; ++i) {
    const ConeBasis basis = random_cone_basis(rng);
    const auto reference = level_profile(enumerate_atomic(basis), basis.size());
    std::vector<std::size_t> perm(basis.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const ConeBasis permuted = basis.permuted(perm);
      o.require(level_profile(enumerate_atomic(permuted), permuted.size()) == reference,
                "level profile changed under permutation of " + io::to_json(basis).dump());
    }
  }
  o.detail << "20 bases x 5 permutations";
  return o;
}

}  // namespace

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.title << "  (" << std::fixed
    << std::setprecision(2) << r.seconds << " s)  " << r.detail;
  return s.str();
}

std::vector<CriterionResult> run_all(std::ostream* out) {
  Corpus corpus;
  corpus.integral_open = random_integral_simplices(50, 0x5eed0005);
  corpus.rational_open = random_rational_simplices(20, 0x5eed0007);
  for (int d = 0; d <= 4; ++d) corpus.standard_closed.push_back(standard_simplex(d, Openness::closed));

  struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds; zero for none
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "coloring complex h* with a negative entry", 60, [&] { return criterion_coloring(corpus); }},
      {2, "coloring complex components", 0, [&] { return criterion_coloring_components(corpus); }},
      {3, "half-open standard simplex counts", 30, [&] { return criterion_standard_half_open(); }},
      {4, "discrete-cone partition of open cones", 120, [&] { return criterion_partition(corpus); }},
      {5, "atomic f* equals interpolated f*", 0, [&] { return criterion_fstar_oracle(corpus); }},
      {6, "parallelepiped h* equals converted h*", 0, [&] { return criterion_hstar_two_paths(corpus); }},
      {7, "rational residue f* and quasipolynomial", 0, [&] { return criterion_rational(corpus); }},
      {8, "mixed-height partition-function count", 0, [&] { return criterion_mixed_heights(corpus); }},
      {9, "basis conversions and series identity", 0, [&] { return criterion_bases(corpus); }},
      {10, "level profile under generator permutations", 0, [&] { return criterion_permutations(); }},
  };

  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    const auto start = Clock::now();
    try {
      Outcome o = c.check();
      r.passed = o.passed;
      r.detail = o.detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit > 0 && r.seconds > c.time_limit) {
      r.passed = false;
      r.detail += " exceeded time limit of " + std::to_string(static_cast<int>(c.time_limit)) + " s";
    }
    if (out) *out << format_line(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ehrhart::acceptance
