#include "ehrhart/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

namespace ehrhart {

namespace {

bool constant_on(Coloring x, Coloring edge) {
  const Coloring part = x & edge;
  return part == 0 || part == edge;
}

// Per-edge poset with upward adjacency, ordered by popcount so that every
// successor appears after its predecessor.
struct EdgePoset {
  std::vector<Coloring> elements;
  std::vector<std::vector<std::size_t>> above;
};

EdgePoset build_poset(const Hypergraph& h, std::size_t e) {
  EdgePoset poset;
  poset.elements = improper_vertex_set(h, e);
  std::stable_sort(poset.elements.begin(), poset.elements.end(),
                   [](Coloring a, Coloring b) { return std::popcount(a) < std::popcount(b); });
  poset.above.resize(poset.elements.size());
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    for (std::size_t j = i + 1; j < poset.elements.size(); ++j) {
      const Coloring x = poset.elements[i];
      const Coloring y = poset.elements[j];
      if (x != y && (x & y) == x) poset.above[i].push_back(j);
    }
  return poset;
}

// Depth-first walk over the chains of one edge poset. `visit(chain, shared)`
// receives the current chain and the mask of earlier edges on which every
// chain member is constant.
template <class Visit>
void walk_chains(const EdgePoset& poset, const std::vector<Coloring>& earlier_edges, Visit&& visit) {
  std::vector<Coloring> chain;
  const std::uint64_t all_earlier = earlier_edges.size() >= 64 ? ~0ULL : ((1ULL << earlier_edges.size()) - 1);

  auto descend = [&](auto&& self, std::size_t node, std::uint64_t shared) -> void {
    const Coloring x = poset.elements[node];
    for (std::size_t e = 0; e < earlier_edges.size(); ++e)
      if ((shared >> e & 1ULL) && !constant_on(x, earlier_edges[e])) shared &= ~(1ULL << e);
    chain.push_back(x);
    visit(static_cast<const std::vector<Coloring>&>(chain), shared);
    for (std::size_t next : poset.above[node]) self(self, next, shared);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < poset.elements.size(); ++i) descend(descend, i, all_earlier);
}

}  // namespace

Hypergraph::Hypergraph(unsigned vertex_count, std::vector<std::vector<unsigned>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count_ == 0 || vertex_count_ > 63) throw InputError("hypergraph needs 1..63 vertices");
  if (edges.size() > 63) throw InputError("hypergraph supports at most 63 edges");
  for (auto& edge : edges) {
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& edge : edges) {
    if (edge.size() < 2) throw InputError("hypergraph edges need at least two vertices");
    Coloring mask = 0;
    for (unsigned v : edge) {
      if (v < 1 || v > vertex_count_) throw InputError("edge vertex out of range");
      mask |= Coloring{1} << (v - 1);
    }
    edge_masks_.push_back(mask);
    edges_.push_back(std::move(edge));
  }
}

std::vector<Coloring> improper_vertex_set(const Hypergraph& h, std::size_t e) {
  const Coloring edge = h.edge_mask(e);
  const Coloring full = (Coloring{1} << h.vertex_count()) - 1;
  const Coloring free = full & ~edge;
  std::vector<Coloring> out;
  // Walk the subsets of the free vertices.
  Coloring sub = 0;
  while (true) {
    for (Coloring x : {sub, sub | edge})
      if (x != 0 && x != full) out.push_back(x);
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVector coloring_coordinates(Coloring x, unsigned vertex_count) {
  IntVector out;
  for (unsigned v = 0; v < vertex_count; ++v) out.emplace_back(static_cast<long>(x >> v & 1ULL));
  return out;
}

std::vector<Integer> coloring_complex_fvector(const Hypergraph& h) {
  // A chain is counted at the first edge on which all of its members are constant.
  // Chains are counted by dynamic programming over each edge poset, keyed by
  // their top element and the mask of earlier edges every member is constant on.
  struct State {
    std::uint64_t shared;
    std::vector<Integer> chains;  // chains[s - 1]: chains of s elements ending here
  };
  std::vector<Integer> f;
  for (std::size_t e = 0; e < h.edges().size(); ++e) {
    const Coloring edge = h.edge_mask(e);
    const Coloring free = ((Coloring{1} << h.vertex_count()) - 1) & ~edge;
    const std::vector<Coloring> elements = improper_vertex_set(h, e);  // ascending, so a linear extension
    std::unordered_map<Coloring, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

    std::vector<std::vector<State>> states(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const Coloring y = elements[i];
      std::uint64_t own = 0;
      for (std::size_t g = 0; g < e; ++g)
        if (constant_on(y, h.edge_mask(g))) own |= 1ULL << g;

      std::map<std::uint64_t, std::vector<Integer>> acc;
      acc[own] = {Integer(1)};
      auto absorb = [&](Coloring x) {
        const auto it = index.find(x);
        if (it == index.end()) return;
        for (const State& st : states[it->second]) {
          auto& dst = acc[st.shared & own];
          if (dst.size() < st.chains.size() + 1) dst.resize(st.chains.size() + 1);
          for (std::size_t l = 0; l < st.chains.size(); ++l) dst[l + 1] += st.chains[l];
        }
      };
      // Elements below y are constant on the edge too: a subset of y's free part,
      // with or without the edge itself.
      const Coloring low = y & free;
      const bool has_edge = (y & edge) != 0;
      for (Coloring sub = low;; sub = (sub - 1) & low) {
        if (has_edge && sub != low) absorb(sub | edge);
        if (sub != y) absorb(sub);
        if (sub == 0) break;
      }

      for (auto& [shared, chains] : acc) {
        if (shared == 0) {
          if (f.size() < chains.size()) f.resize(chains.size(), Integer(0));
          for (std::size_t l = 0; l < chains.size(); ++l) f[l] += chains[l];
        }
        states[i].push_back({shared, std::move(chains)});
      }
    }
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<std::vector<Coloring>> coloring_complex_faces(const Hypergraph& h) {
  std::set<std::vector<Coloring>> faces;
  for (std::size_t e = 0; e < h.edges().size(); ++e)
    walk_chains(build_poset(h, e), {},
                [&](const std::vector<Coloring>& chain, std::uint64_t) { faces.insert(chain); });
  return {faces.begin(), faces.end()};
}

OpenComplex coloring_complex_geometric(const Hypergraph& h) {
  std::vector<Simplex> cells;
  for (const auto& face : coloring_complex_faces(h)) {
    std::vector<RatVector> vertices;
    for (Coloring x : face) vertices.push_back(to_rational(coloring_coordinates(x, h.vertex_count())));
    cells.emplace_back(std::move(vertices), Openness::open);
  }
  return OpenComplex(std::move(cells));
}

ColoringInvariants coloring_complex_hstar(const Hypergraph& h) {
  std::vector<Integer> f = coloring_complex_fvector(h);
  if (f.empty()) return {{}, FStarVector::zero(0), HStarVector::zero(0), -1};
  const int d = static_cast<int>(f.size()) - 1;
  FStarVector fstar(f);
  HStarVector hstar = hstar_from_poly(poly_from_fstar(fstar), d);
  return {std::move(f), std::move(fstar), std::move(hstar), d};
}

}  // namespace ehrhart
