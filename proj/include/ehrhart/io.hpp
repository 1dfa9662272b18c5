#pragma once

// JSON wire formats. Every number that can exceed machine range (coordinates,
// coefficients, counts) travels as a decimal string: "p/q" or "p".

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/bases.hpp"
#include "ehrhart/coloring.hpp"
#include "ehrhart/cone.hpp"
#include "ehrhart/rational.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart::io {

using json = nlohmann::json;

/// Reads and parses a JSON file; failures surface as InputError.
json read_json_file(const std::filesystem::path& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

json to_json(const Rational& r);
json to_json(const Integer& z);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
/// Accepts a string ("p/q" or "p") or a JSON integer.
Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);
IntVector int_vector_from_json(const json& j);
RatVector rat_vector_from_json(const json& j);

/// {"ambient_degree": d, "fstar": [...]}
json to_json(const FStarVector& f);
FStarVector fstar_from_json(const json& j);
/// {"ambient_degree": d, "hstar": [...]}
json to_json(const HStarVector& h);
HStarVector hstar_from_json(const json& j);

/// {"vertices": [[...], ...], "openness": "open" | "closed"}
json to_json(const Simplex& s);
Simplex simplex_from_json(const json& j);

/// {"generators": [[...], ...]} in the significant order.
json to_json(const ConeBasis& b);
ConeBasis generators_from_json(const json& j);

/// [{"point": [...], "lambda": [...], "level": n, "height": "h"}, ...]
json to_json(const std::vector<AtomicPoint>& atomic);
std::vector<AtomicPoint> atomic_points_from_json(const json& j);

/// {"cells": [simplex, ...]} or {"facets": [[id, ...]], "coords": {id: [...]}, "remove": [[id, ...]]}.
OpenComplex complex_from_json(const json& j);
json to_json(const OpenComplex& c);

/// {"period": m, "ambient_degree": d, "residues": [{"heights_mod": l + 1, "fstar": [...]}, ...]}
json to_json(const EhrhartQuasiPolynomial& q);
EhrhartQuasiPolynomial quasi_from_json(const json& j);

/// {"vertices": n, "edges": [[...], ...]}
json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json to_json(const PartitionReport& report);
/// {"f": [...], "fstar": [...], "hstar": [...], "dimension": d}
json to_json(const ColoringInvariants& c);
/// {"vertex_heights": [...], "counts": [{"level_index": i, "height": "s", "count": "c"}, ...]}
json to_json(const AtomicHeightProfile& p);

}  // namespace ehrhart::io
