#pragma once

// Simplices, partial simplicial complexes and their Ehrhart counting
// functions. Two independent routes to every counting vector are provided:
// atomic-point / parallelepiped counting through the cone over the simplex,
// and brute-force lattice counting of dilates followed by interpolation.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "ehrhart/bases.hpp"
#include "ehrhart/cone.hpp"
#include "ehrhart/exact.hpp"

namespace ehrhart {

enum class Openness { open, closed };

/// Convex hull (closed) or relative interior (open) of affinely independent
/// rational points.
class Simplex {
 public:
  /// Throws InputError on an empty vertex list, ragged coordinates, or
  /// affinely dependent vertices.
  Simplex(std::vector<RatVector> vertices, Openness openness);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t ambient_dimension() const { return vertices_.front().size(); }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  Openness openness() const { return openness_; }
  bool is_open() const { return openness_ == Openness::open; }
  bool is_integral() const;
  /// Smallest positive m with m * vertex integral, per vertex.
  std::vector<Integer> vertex_denominators() const;
  /// Smallest positive m making every vertex integral.
  Integer denominator() const;

  Simplex with_openness(Openness openness) const { return Simplex(vertices_, openness); }

  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<RatVector> vertices_;
  Openness openness_;
};

/// Disjoint union of open simplices. Disjointness is the producer's promise;
/// check_disjoint_union can spot-check it on a few dilates.
class OpenComplex {
 public:
  OpenComplex() = default;
  /// Throws InputError if any cell is closed.
  explicit OpenComplex(std::vector<Simplex> cells);

  const std::vector<Simplex>& cells() const { return cells_; }
  /// Largest cell dimension; -1 when empty.
  int dimension() const;
  bool empty() const { return cells_.empty(); }

 private:
  std::vector<Simplex> cells_;
};

/// Cone generators (h v_i, h) over the vertices, order preserved. Throws
/// InputError("height does not clear denominators") unless every h v_i is integral.
ConeBasis homogenize(const Simplex& simplex, const Integer& height);

/// Calls `visit` for each lattice point of k * simplex, honouring openness.
void for_each_lattice_point(const Simplex& simplex, long k, const std::function<void(const IntVector&)>& visit);
/// As above, but only the facets opposite the vertices flagged in `open_facets`
/// are excluded, regardless of the simplex's own openness flag.
void for_each_lattice_point(const Simplex& simplex, const std::vector<bool>& open_facets, long k,
                            const std::function<void(const IntVector&)>& visit);

/// Brute-force |Z^n cap k simplex|. Throws InputError for k < 1.
Integer count_points(const Simplex& simplex, long k);
Integer count_points_half_open(const Simplex& simplex, const std::vector<bool>& open_facets, long k);
std::vector<IntVector> lattice_points(const Simplex& simplex, long k);

/// f*-vector of an open integral simplex from atomic point levels, padded to
/// `ambient_degree` (which must be at least the dimension).
FStarVector fstar_simplex(const Simplex& simplex, int ambient_degree, Parallelism parallelism = {});
/// f*-vector of any integral simplex by counting dilates 1..ambient_degree+1.
FStarVector fstar_interpolate(const Simplex& simplex, int ambient_degree);
/// h*-vector of a closed integral simplex from parallelepiped heights.
HStarVector hstar_simplex(const Simplex& simplex, Parallelism parallelism = {});

using VertexId = long;

/// Every open face of a closed simplex, once each.
OpenComplex open_faces(const Simplex& closed);
/// Open faces of the complex generated by `facets`, minus every face of the
/// subcomplex generated by `removed`. Faces are deduplicated by vertex set.
OpenComplex open_faces(const std::vector<std::vector<VertexId>>& facets,
                       const std::map<VertexId, RatVector>& coordinates,
                       const std::vector<std::vector<VertexId>>& removed = {});

/// Sum of padded cell f*-vectors; `ambient_degree` must cover every cell.
FStarVector fstar_complex(const OpenComplex& complex, int ambient_degree, Parallelism parallelism = {});

/// Counts the union's lattice points directly for k = 1..max_dilate and
/// compares against the per-cell sum.
bool check_disjoint_union(const OpenComplex& complex, long max_dilate);

/// Face numbers f_0..f_dim of the abstract complex generated by `facets`.
std::vector<Integer> f_vector(const std::vector<std::vector<VertexId>>& facets);
/// Combinatorial h-vector (h_0..h_{dim+1}) of a face-number vector f_0..f_dim.
std::vector<Integer> h_vector(const std::vector<Integer>& f);

/// True iff the open simplex has exactly one atomic point, i.e. normalized volume 1.
bool is_unimodular(const Simplex& simplex);

}  // namespace ehrhart
