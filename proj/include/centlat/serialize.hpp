#pragma once

#include <string>

#include <json.hpp>

#include "centlat/group.hpp"
#include "centlat/homs.hpp"
#include "centlat/lattice.hpp"

namespace centlat {

using Json = nlohmann::ordered_json;

// {"order": n, "table": [[...]], "generators": {"x": i, ...}, "labels": [...]}
Json group_to_json(const FiniteGroup& g);
// Rejects unknown fields; "generators" and "labels" are optional.
FiniteGroup group_from_json(const Json& j);
FiniteGroup load_group_file(const std::string& path);

// {"source": <group>, "target": <group>, "map": [...]}
Json hom_to_json(const GroupHom& h);
GroupHom hom_from_json(const Json& j);

// {"group_order", "nodes": [{"id", "order", "members"}], "leq": [[i, j]...],
//  "involution", "top", "bottom"}
Json lattice_to_json(const CentralizerLattice& l);

// Hasse diagram: cover edges, top at rank 0, involution pairs as dashed
// undirected edges.
std::string lattice_to_dot(const CentralizerLattice& l);

}  // namespace centlat
