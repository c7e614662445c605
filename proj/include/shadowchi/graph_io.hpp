#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "shadowchi/chi.hpp"
#include "shadowchi/graph.hpp"
#include "shadowchi/line.hpp"
#include "shadowchi/shift.hpp"

namespace shadowchi {

// {"vertices": N, "edges": [[u, v], ...], "labels": [[a, b, n], ...]}; labels
// optional. Malformed input raises InputError.
FiniteGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const FiniteGraph& g);

// DIMACS .col: "p edge N M" header, "e u v" lines with 1-based vertices.
FiniteGraph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const FiniteGraph& g);

// Chooses the format from the content: JSON when it starts with '{'.
FiniteGraph parse_graph(const std::string& text);
FiniteGraph load_graph(const std::string& path);

// Graph fields plus "blocks": [[v, ...], ...], "mode": "cycle" | "segment"
// and an optional "chi".
LineInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const LineInstance& inst);

// {"k": K, "extent": m, "mode": ..., "anchors": [{"position": p, "offset": [a0, b0]}, ...]}.
// "k" and "mode" are optional and may be overridden by the caller.
AnchoredTower tower_from_json(const nlohmann::json& j);
nlohmann::json tower_to_json(const AnchoredTower& t);

nlohmann::json coloring_to_json(const Coloring& c);

std::string read_file(const std::string& path);

}  // namespace shadowchi
