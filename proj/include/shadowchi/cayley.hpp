#pragma once

#include <cstdint>

#include "shadowchi/graph.hpp"
#include "shadowchi/group.hpp"

namespace shadowchi {

// Vertex numbering shared by every orbit-structured graph in the library:
// level * k^2 + a * k + b, where level counts orbits from the bottom of the
// window (or is the residue mod M in a quotient).
inline Vertex orbit_vertex(int k, int level, int a, int b) { return level * k * k + a * k + b; }

// Cay(spec) restricted to the levels lo..hi (inclusive). Edges join x and s*x
// for every generator s with both ends in the window. Labels carry the
// actual group elements; block labels carry (level - lo, a * k + b).
FiniteGraph cayley_window(const MarkedGroupSpec& spec, std::int64_t lo, std::int64_t hi);

// Cay(spec) modulo the right action of ((0,0), M): levels taken mod M.
// Throws InputError when M < 3.
FiniteGraph cayley_quotient(const MarkedGroupSpec& spec, int M);

// The single orbit (Z_k x Z_k) x {0}; the grid graph H for either spec.
FiniteGraph grid_graph(int k);

}  // namespace shadowchi
