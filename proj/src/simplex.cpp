#include "ehrhart/simplex.hpp"

#include <algorithm>
#include <set>

namespace ehrhart {

namespace {

void require_integral_open(const Simplex& simplex, const char* what) {
  if (!simplex.is_integral()) throw InputError(std::string(what) + " needs an integral simplex");
  if (!simplex.is_open()) throw InputError(std::string(what) + " needs an open simplex");
}

void require_degree(const Simplex& simplex, int ambient_degree) {
  if (ambient_degree < simplex.dimension()) throw InputError("ambient degree too small");
}

}  // namespace

Simplex::Simplex(std::vector<RatVector> vertices, Openness openness)
    : vertices_(std::move(vertices)), openness_(openness) {
  if (vertices_.empty()) throw InputError("simplex needs at least one vertex");
  const std::size_t n = vertices_.front().size();
  if (n == 0) throw InputError("vertices must have positive dimension");
  for (const RatVector& v : vertices_)
    if (v.size() != n) throw InputError("vertices of unequal dimension");
  if (vertices_.size() > 1) {
    std::vector<RatVector> differences;
    for (std::size_t j = 1; j < vertices_.size(); ++j) {
      RatVector diff(n);
      for (std::size_t r = 0; r < n; ++r) diff[r] = vertices_[j][r] - vertices_[0][r];
      differences.push_back(std::move(diff));
    }
    if (RatMatrix::from_rows(differences).rank() != differences.size())
      throw InputError("simplex vertices are affinely dependent");
  }
}

bool Simplex::is_integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RatVector& v) { return to_integer(v).has_value(); });
}

std::vector<Integer> Simplex::vertex_denominators() const {
  std::vector<Integer> out;
  for (const RatVector& v : vertices_) out.push_back(common_denominator(v));
  return out;
}

Integer Simplex::denominator() const {
  Integer l = 1;
  for (const Integer& m : vertex_denominators()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.get_mpz_t());
  return l;
}

OpenComplex::OpenComplex(std::vector<Simplex> cells) : cells_(std::move(cells)) {
  for (const Simplex& c : cells_)
    if (!c.is_open()) throw InputError("complex cells must be open simplices");
}

int OpenComplex::dimension() const {
  int d = -1;
  for (const Simplex& c : cells_) d = std::max(d, c.dimension());
  return d;
}

ConeBasis homogenize(const Simplex& simplex, const Integer& height) {
  if (height <= 0) throw InputError("height must be positive");
  std::vector<IntVector> generators;
  for (const RatVector& v : simplex.vertices()) {
    IntVector g;
    for (const Rational& x : v) {
      const Rational scaled = x * Rational(height);
      if (!scaled.is_integer()) throw InputError("height does not clear denominators");
      g.push_back(scaled.numerator());
    }
    g.push_back(height);
    generators.push_back(std::move(g));
  }
  return ConeBasis(std::move(generators));
}

void for_each_lattice_point(const Simplex& simplex, long k, const std::function<void(const IntVector&)>& visit) {
  const std::vector<bool> open(simplex.vertices().size(), simplex.is_open());
  for_each_lattice_point(simplex, open, k, visit);
}

void for_each_lattice_point(const Simplex& simplex, const std::vector<bool>& open_facets, long k,
                            const std::function<void(const IntVector&)>& visit) {
  if (k < 1) throw InputError("dilate must be positive");
  if (open_facets.size() != simplex.vertices().size()) throw InputError("one facet flag per vertex expected");
  const std::size_t n = simplex.ambient_dimension();
  const auto d = static_cast<std::size_t>(simplex.dimension());

  std::vector<RatVector> w;
  for (const RatVector& v : simplex.vertices()) {
    RatVector scaled;
    for (const Rational& x : v) scaled.push_back(x * Rational(k));
    w.push_back(std::move(scaled));
  }
  if (d == 0) {
    if (auto p = to_integer(w.front())) visit(*p);
    return;
  }

  // x = w_0 + E mu', E = [w_j - w_0]; enumerate x on d independent rows of E
  // and recover the rest from mu'.
  RatMatrix e(n, d);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 1; j <= d; ++j) e(r, j - 1) = w[j][r] - w[0][r];
  const std::vector<std::size_t> pivots = e.independent_rows();
  RatMatrix square(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) square(i, j) = e(pivots[i], j);
  const RatMatrix inverse = square.inverse();

  std::vector<Integer> lo(d);
  std::vector<Integer> hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = w[0][pivots[i]];
    Rational mx = mn;
    for (const RatVector& v : w) {
      mn = std::min(mn, v[pivots[i]]);
      mx = std::max(mx, v[pivots[i]]);
    }
    lo[i] = mn.ceil();
    hi[i] = mx.floor();
    if (lo[i] > hi[i]) return;
  }

  IntVector x = lo;
  RatVector offset(d);
  IntVector point(n);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) offset[i] = Rational(x[i]) - w[0][pivots[i]];
    const RatVector mu = inverse * offset;
    Rational mu0 = 1;
    for (const Rational& m : mu) mu0 -= m;
    bool inside = open_facets[0] ? mu0.sign() > 0 : mu0.sign() >= 0;
    for (std::size_t j = 0; j < d && inside; ++j)
      inside = open_facets[j + 1] ? mu[j].sign() > 0 : mu[j].sign() >= 0;
    if (inside) {
      for (std::size_t r = 0; r < n && inside; ++r) {
        Rational coord = w[0][r];
        for (std::size_t j = 0; j < d; ++j) coord += mu[j] * e(r, j);
        if (!coord.is_integer()) inside = false;
        else point[r] = coord.numerator();
      }
      if (inside) visit(point);
    }

    std::size_t i = d;
    bool done = true;
    while (i-- > 0) {
      if (x[i] < hi[i]) {
        ++x[i];
        done = false;
        break;
      }
      x[i] = lo[i];
    }
    if (done) return;
  }
}

Integer count_points(const Simplex& simplex, long k) {
  Integer count = 0;
  for_each_lattice_point(simplex, k, [&](const IntVector&) { ++count; });
  return count;
}

Integer count_points_half_open(const Simplex& simplex, const std::vector<bool>& open_facets, long k) {
  Integer count = 0;
  for_each_lattice_point(simplex, open_facets, k, [&](const IntVector&) { ++count; });
  return count;
}

std::vector<IntVector> lattice_points(const Simplex& simplex, long k) {
  std::vector<IntVector> out;
  for_each_lattice_point(simplex, k, [&](const IntVector& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

FStarVector fstar_simplex(const Simplex& simplex, int ambient_degree, Parallelism parallelism) {
  require_integral_open(simplex, "atomic f* counting");
  require_degree(simplex, ambient_degree);
  const ConeBasis basis = homogenize(simplex, 1);
  const auto profile = level_profile(enumerate_atomic(basis, parallelism), basis.size());
  std::vector<Rational> entries(static_cast<std::size_t>(ambient_degree) + 1);
  for (std::size_t i = 0; i < profile.size(); ++i) entries[i] = Rational(profile[i]);
  return FStarVector(std::move(entries));
}

FStarVector fstar_interpolate(const Simplex& simplex, int ambient_degree) {
  if (!simplex.is_integral()) throw InputError("interpolation needs an integral simplex");
  require_degree(simplex, ambient_degree);
  const auto n = static_cast<std::size_t>(ambient_degree) + 1;
  RatMatrix m(n, n);
  RatVector counts(n);
  for (std::size_t row = 0; row < n; ++row) {
    const long k = static_cast<long>(row) + 1;
    for (std::size_t i = 0; i < n; ++i) m(row, i) = gen_binomial(k - 1, static_cast<unsigned>(i));
    counts[row] = count_points(simplex, k);
  }
  auto f = solve_exact(m, counts);
  if (!f) throw InvariantViolation("interpolation system is inconsistent");
  return FStarVector(std::move(*f));
}

HStarVector hstar_simplex(const Simplex& simplex, Parallelism parallelism) {
  if (!simplex.is_integral()) throw InputError("parallelepiped h* needs an integral simplex");
  if (simplex.is_open()) throw InputError("parallelepiped h* needs a closed simplex");
  const int d = simplex.dimension();
  std::vector<Rational> entries(static_cast<std::size_t>(d) + 1);
  for (const IntVector& p : parallelepiped_points(homogenize(simplex, 1), parallelism)) {
    const Integer& height = p.back();
    if (height < 0 || height > d) throw InvariantViolation("parallelepiped point outside height range");
    entries[height.get_ui()] += 1;
  }
  return HStarVector(std::move(entries));
}

OpenComplex open_faces(const Simplex& closed) {
  const std::size_t count = closed.vertices().size();
  std::vector<Simplex> cells;
  for (unsigned long mask = 1; mask < (1UL << count); ++mask) {
    std::vector<RatVector> vertices;
    for (std::size_t j = 0; j < count; ++j)
      if (mask & (1UL << j)) vertices.push_back(closed.vertices()[j]);
    cells.emplace_back(std::move(vertices), Openness::open);
  }
  return OpenComplex(std::move(cells));
}

namespace {

std::set<std::vector<VertexId>> faces_of(const std::vector<std::vector<VertexId>>& facets) {
  std::set<std::vector<VertexId>> faces;
  for (std::vector<VertexId> facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.size() >= 63) throw InputError("facet too large");
    for (unsigned long mask = 1; mask < (1UL << facet.size()); ++mask) {
      std::vector<VertexId> face;
      for (std::size_t j = 0; j < facet.size(); ++j)
        if (mask & (1UL << j)) face.push_back(facet[j]);
      faces.insert(std::move(face));
    }
  }
  return faces;
}

}  // namespace

OpenComplex open_faces(const std::vector<std::vector<VertexId>>& facets,
                       const std::map<VertexId, RatVector>& coordinates,
                       const std::vector<std::vector<VertexId>>& removed) {
  const auto excluded = faces_of(removed);
  std::vector<Simplex> cells;
  for (const auto& face : faces_of(facets)) {
    if (excluded.contains(face)) continue;
    std::vector<RatVector> vertices;
    for (VertexId id : face) {
      auto it = coordinates.find(id);
      if (it == coordinates.end()) throw InputError("no coordinates for vertex " + std::to_string(id));
      vertices.push_back(it->second);
    }
    cells.emplace_back(std::move(vertices), Openness::open);
  }
  return OpenComplex(std::move(cells));
}

FStarVector fstar_complex(const OpenComplex& complex, int ambient_degree, Parallelism parallelism) {
  if (ambient_degree < complex.dimension() || ambient_degree < 0) throw InputError("ambient degree too small");
  FStarVector total = FStarVector::zero(ambient_degree);
  for (const Simplex& cell : complex.cells())
    total = total + fstar_pad(fstar_simplex(cell, cell.dimension(), parallelism), ambient_degree);
  return total;
}

bool check_disjoint_union(const OpenComplex& complex, long max_dilate) {
  for (long k = 1; k <= max_dilate; ++k) {
    std::set<IntVector> seen;
    std::size_t total = 0;
    for (const Simplex& cell : complex.cells()) {
      for_each_lattice_point(cell, k, [&](const IntVector& p) {
        seen.insert(p);
        ++total;
      });
    }
    if (seen.size() != total) return false;
  }
  return true;
}

std::vector<Integer> f_vector(const std::vector<std::vector<VertexId>>& facets) {
  std::vector<Integer> f;
  for (const auto& face : faces_of(facets)) {
    if (f.size() < face.size()) f.resize(face.size(), Integer(0));
    ++f[face.size() - 1];
  }
  return f;
}

std::vector<Integer> h_vector(const std::vector<Integer>& f) {
  // With D = dim + 1 = f.size(): h_k = sum_{i<=k} (-1)^{k-i} C(D-i, D-k) f_{i-1}, f_{-1} = 1.
  const long top = static_cast<long>(f.size());
  std::vector<Integer> h;
  for (long k = 0; k <= top; ++k) {
    Integer acc = 0;
    for (long i = 0; i <= k; ++i) {
      const Integer face_count = i == 0 ? Integer(1) : f[static_cast<std::size_t>(i - 1)];
      const Integer term = gen_binomial(top - i, static_cast<unsigned>(top - k)) * face_count;
      if ((k - i) % 2 == 0) acc += term;
      else acc -= term;
    }
    h.push_back(acc);
  }
  return h;
}

bool is_unimodular(const Simplex& simplex) {
  if (!simplex.is_integral()) throw InputError("unimodularity is defined for integral simplices");
  return enumerate_atomic(homogenize(simplex, 1)).size() == 1;
}

}  // namespace ehrhart
