#pragma once

// Coloring complexes of hypergraphs. Vertices of the complex are the non-constant
// 0/1 colorings that are constant on some edge; faces are chains (under the
// componentwise order) whose members are all constant on one common edge.
// Every face is a unimodular simplex, so the f*-vector equals the f-vector.

#include <cstdint>
#include <vector>

#include "ehrhart/bases.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

/// 0/1 vector over the hypergraph vertices; bit v-1 holds x_v.
using Coloring = std::uint64_t;

class Hypergraph {
 public:
  /// Vertices are 1..vertex_count (at most 63). Every edge must have at least
  /// two distinct vertices in range; throws InputError otherwise.
  Hypergraph(unsigned vertex_count, std::vector<std::vector<unsigned>> edges);

  unsigned vertex_count() const { return vertex_count_; }
  /// Edges with duplicates removed, each sorted.
  const std::vector<std::vector<unsigned>>& edges() const { return edges_; }
  Coloring edge_mask(std::size_t e) const { return edge_masks_.at(e); }

 private:
  unsigned vertex_count_;
  std::vector<std::vector<unsigned>> edges_;
  std::vector<Coloring> edge_masks_;
};

/// Non-constant colorings that are constant on edge `e`, ascending.
std::vector<Coloring> improper_vertex_set(const Hypergraph& h, std::size_t e);
IntVector coloring_coordinates(Coloring x, unsigned vertex_count);

/// f_0, f_1, ... of the coloring complex (empty for the empty complex).
std::vector<Integer> coloring_complex_fvector(const Hypergraph& h);

/// Explicit face list, each face a strictly increasing chain. Intended for
/// small instances only.
std::vector<std::vector<Coloring>> coloring_complex_faces(const Hypergraph& h);

/// Each face as an open simplex with its 0/1 vertex coordinates.
OpenComplex coloring_complex_geometric(const Hypergraph& h);

struct ColoringInvariants {
  std::vector<Integer> f;
  FStarVector fstar;
  HStarVector hstar;
  /// -1 for the empty complex, whose vectors are reported at ambient degree 0.
  int dimension;
};

ColoringInvariants coloring_complex_hstar(const Hypergraph& h);

}  // namespace ehrhart
