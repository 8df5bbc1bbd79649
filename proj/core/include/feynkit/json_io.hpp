#pragma once

#include "feynkit/graph.hpp"
#include "feynkit/link.hpp"
#include "feynkit/perturb.hpp"
#include "feynkit/symmetric_form.hpp"

#include <json.hpp>

#include <string>

namespace feynkit {

using Json = nlohmann::json;

/// {"dim": d, "entries": [[...], ...]} with integer or "p/q" entries.
RatMatrix parse_matrix(const Json& j);
SymmetricForm parse_symmetric_form(const Json& j);
Json matrix_to_json(const RatMatrix& m);

/// {"dim": d, "3": <nested d^3 array>, "4": ...} with rational entries;
/// tensors are in the normalized convention (symmetrized u_k).
Potential parse_potential(const Json& j);

/// {"legs": m, "vertices": [k_1, ..], "edges": [[[v, slot], [v, slot]], ..]};
/// vertex ids: 0..m-1 are legs (slot 0), m.. are internal.
FeynmanGraph parse_graph(const Json& j);
Json graph_to_json(const FeynmanGraph& g);

/// {"components": [{"points": [[x,y,z], ..], "framing": [[..], ..]?}, ..]}.
PolygonalLink parse_link(const Json& j);
Json link_to_json(const PolygonalLink& link);

/// Loads a link from a JSON file, or from a builtin spec of the form
/// "builtin:<name>[?segments=N]" with names: circle, hopf, trefoil,
/// trefoil-alt, torus-2-5, torus-link-2-4.
PolygonalLink load_link(const std::string& path_or_builtin);

Json rational_to_json(const Rat& r);
Rat rational_from_json(const Json& j);

}  // namespace feynkit
