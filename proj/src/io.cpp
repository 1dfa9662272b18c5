#include "ehrhart/io.hpp"

#include <fstream>
#include <sstream>

namespace ehrhart::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a JSON array");
  return j;
}

long small_integer(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const Integer z = parse_integer(j.get<std::string>());
    if (!z.fits_slong_p()) throw InputError(std::string(what) + " out of range");
    return z.get_si();
  }
  throw InputError(std::string(what) + " must be an integer");
}

template <class Vector>
json entries_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(to_json(x));
  return out;
}

std::vector<Rational> rational_entries(const json& j, const char* what) {
  std::vector<Rational> out;
  for (const json& x : array(j, what)) out.push_back(rational_from_json(x));
  return out;
}

void check_degree(const json& j, std::size_t entries) {
  if (j.contains("ambient_degree") &&
      small_integer(j.at("ambient_degree"), "ambient_degree") + 1 != static_cast<long>(entries))
    throw InputError("ambient_degree does not match the number of entries");
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Rational& r) { return r.to_string(); }
json to_json(const Integer& z) { return to_string(z); }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(to_json(x));
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational string or an integer, got " + j.dump());
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw InputError("expected an integer string or an integer, got " + j.dump());
}

IntVector int_vector_from_json(const json& j) {
  IntVector out;
  for (const json& x : array(j, "integer vector")) out.push_back(integer_from_json(x));
  return out;
}

RatVector rat_vector_from_json(const json& j) { return rational_entries(j, "rational vector"); }

json to_json(const FStarVector& f) {
  return {{"ambient_degree", f.ambient_degree()}, {"fstar", entries_to_json(f)}};
}

FStarVector fstar_from_json(const json& j) {
  auto entries = rational_entries(field(j, "fstar"), "fstar");
  check_degree(j, entries.size());
  return FStarVector(std::move(entries));
}

json to_json(const HStarVector& h) {
  return {{"ambient_degree", h.ambient_degree()}, {"hstar", entries_to_json(h)}};
}

HStarVector hstar_from_json(const json& j) {
  auto entries = rational_entries(field(j, "hstar"), "hstar");
  check_degree(j, entries.size());
  return HStarVector(std::move(entries));
}

json to_json(const Simplex& s) {
  json vertices = json::array();
  for (const RatVector& v : s.vertices()) vertices.push_back(to_json(v));
  return {{"vertices", vertices}, {"openness", s.is_open() ? "open" : "closed"}};
}

Simplex simplex_from_json(const json& j) {
  std::vector<RatVector> vertices;
  for (const json& v : array(field(j, "vertices"), "vertices")) vertices.push_back(rat_vector_from_json(v));
  const json& openness = field(j, "openness");
  if (openness == "open") return Simplex(std::move(vertices), Openness::open);
  if (openness == "closed") return Simplex(std::move(vertices), Openness::closed);
  throw InputError("openness must be \"open\" or \"closed\"");
}

json to_json(const ConeBasis& b) {
  json generators = json::array();
  for (const IntVector& g : b.generators()) generators.push_back(to_json(g));
  return {{"generators", generators}};
}

ConeBasis generators_from_json(const json& j) {
  std::vector<IntVector> generators;
  for (const json& g : array(field(j, "generators"), "generators")) generators.push_back(int_vector_from_json(g));
  return ConeBasis(std::move(generators));
}

json to_json(const std::vector<AtomicPoint>& atomic) {
  json out = json::array();
  for (const AtomicPoint& a : atomic) {
    out.push_back({{"point", to_json(a.point)},
                   {"lambda", to_json(a.coefficients.lambda)},
                   {"level", a.level},
                   {"height", to_json(a.height)}});
  }
  return out;
}

std::vector<AtomicPoint> atomic_points_from_json(const json& j) {
  std::vector<AtomicPoint> out;
  for (const json& entry : array(j, "atomic points")) {
    AtomicPoint a;
    a.point = int_vector_from_json(field(entry, "point"));
    if (a.point.empty()) throw InputError("atomic point without coordinates");
    a.coefficients = CoefficientVector::from_lambda(rat_vector_from_json(field(entry, "lambda")));
    a.level = static_cast<int>(small_integer(field(entry, "level"), "level"));
    if (a.level != a.coefficients.level) throw InputError("level disagrees with lambda");
    a.height = a.point.back();
    out.push_back(std::move(a));
  }
  return out;
}

OpenComplex complex_from_json(const json& j) {
  if (j.is_object() && j.contains("cells")) {
    std::vector<Simplex> cells;
    for (const json& c : array(j.at("cells"), "cells")) cells.push_back(simplex_from_json(c));
    return OpenComplex(std::move(cells));
  }
  auto id_lists = [](const json& lists, const char* what) {
    std::vector<std::vector<VertexId>> out;
    for (const json& list : array(lists, what)) {
      std::vector<VertexId> ids;
      for (const json& id : array(list, what)) ids.push_back(small_integer(id, "vertex id"));
      out.push_back(std::move(ids));
    }
    return out;
  };
  const auto facets = id_lists(field(j, "facets"), "facets");
  std::map<VertexId, RatVector> coords;
  const json& coord_json = field(j, "coords");
  if (!coord_json.is_object()) throw InputError("coords must be an object keyed by vertex id");
  for (const auto& [key, value] : coord_json.items())
    coords.emplace(small_integer(json(key), "vertex id"), rat_vector_from_json(value));
  const auto removed = j.contains("remove") ? id_lists(j.at("remove"), "remove") : std::vector<std::vector<VertexId>>{};
  return open_faces(facets, coords, removed);
}

json to_json(const OpenComplex& c) {
  json cells = json::array();
  for (const Simplex& s : c.cells()) cells.push_back(to_json(s));
  return {{"cells", cells}};
}

json to_json(const EhrhartQuasiPolynomial& q) {
  json residues = json::array();
  for (std::size_t l = 0; l < q.residues().size(); ++l)
    residues.push_back({{"heights_mod", static_cast<long>(l) + 1}, {"fstar", entries_to_json(q.residue(l))}});
  return {{"period", q.period()}, {"ambient_degree", q.ambient_degree()}, {"residues", residues}};
}

EhrhartQuasiPolynomial quasi_from_json(const json& j) {
  const long period = small_integer(field(j, "period"), "period");
  if (period < 1) throw InputError("period must be positive");
  const json& residues = array(field(j, "residues"), "residues");
  std::vector<std::optional<FStarVector>> slots(static_cast<std::size_t>(period));
  for (const json& r : residues) {
    const long mod = small_integer(field(r, "heights_mod"), "heights_mod");
    if (mod < 1 || mod > period) throw InputError("heights_mod out of range");
    auto& slot = slots[static_cast<std::size_t>(mod - 1)];
    if (slot) throw InputError("duplicate residue");
    slot = FStarVector(rational_entries(field(r, "fstar"), "fstar"));
    check_degree(j, slot->size());
  }
  std::vector<FStarVector> out;
  for (auto& slot : slots) {
    if (!slot) throw InputError("missing residue");
    out.push_back(std::move(*slot));
  }
  return EhrhartQuasiPolynomial(period, std::move(out));
}

json to_json(const Hypergraph& h) { return {{"vertices", h.vertex_count()}, {"edges", h.edges()}}; }

Hypergraph hypergraph_from_json(const json& j) {
  const long n = small_integer(field(j, "vertices"), "vertices");
  if (n < 1) throw InputError("vertices must be positive");
  std::vector<std::vector<unsigned>> edges;
  for (const json& e : array(field(j, "edges"), "edges")) {
    std::vector<unsigned> edge;
    for (const json& v : array(e, "edge")) {
      const long id = small_integer(v, "edge vertex");
      if (id < 1) throw InputError("edge vertex out of range");
      edge.push_back(static_cast<unsigned>(id));
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(static_cast<unsigned>(n), std::move(edges));
}

json to_json(const PartitionReport& report) {
  json violations = json::array();
  for (const PartitionViolation& v : report.violations)
    violations.push_back({{"point", to_json(v.point)}, {"cover_count", std::to_string(v.cover_count)}});
  json per_level = json::array();
  for (std::size_t n : report.points_per_level) per_level.push_back(std::to_string(n));
  return {{"passed", report.passed},
          {"max_level", report.max_level},
          {"points_checked", std::to_string(report.points_checked)},
          {"atomic_points", std::to_string(report.atomic_points)},
          {"points_per_level", per_level},
          {"violations", violations}};
}

json to_json(const ColoringInvariants& c) {
  json f = json::array();
  for (const Integer& x : c.f) f.push_back(to_json(x));
  return {{"f", f}, {"fstar", entries_to_json(c.fstar)}, {"hstar", entries_to_json(c.hstar)}, {"dimension", c.dimension}};
}

json to_json(const AtomicHeightProfile& p) {
  json counts = json::array();
  for (const auto& [key, c] : p.counts)
    counts.push_back({{"level_index", key.first}, {"height", to_json(key.second)}, {"count", to_json(c)}});
  return {{"vertex_heights", to_json(p.vertex_heights)}, {"counts", counts}};
}

}  // namespace ehrhart::io
