#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowchi/chi.hpp"
#include "shadowchi/graph.hpp"
#include "shadowchi/line.hpp"

namespace shadowchi {

// Greedy scan in the given order: keep a position iff it is more than r away
// from everything kept so far. The result is maximal r-discrete.
std::vector<std::int64_t> greedy_maximal_discrete(const std::vector<std::int64_t>& positions, std::int64_t r);

// Coloring of one (Z_k x Z_k)-orbit that is constant on columns: entry a is
// the color (1..k+1) of column a.
using OrbitColoring = std::vector<int>;

// Column a gets color a + 1; the spare color k + 1 is unused.
OrbitColoring anchor_coloring(int k);

// The anchor coloring seen from an anchor sitting at grid offset (a0, b0):
// column a gets color ((a - a0) mod k) + 1.
OrbitColoring anchor_coloring(int k, int a0);

// The one color in 1..k+1 an injective orbit coloring leaves out.
int free_color(int k, const OrbitColoring& c);

// Orbit colorings leading from source to target, one column recolored per
// step onto the color the previous orbit leaves free. The last entry equals
// target; empty when source == target. At most 3k entries (in fact at most
// k + k/2). InputError unless both are injective maps into 1..k+1.
std::vector<OrbitColoring> transfer_schedule(int k, const OrbitColoring& source, const OrbitColoring& target);

// Empty when `next` follows `prev` by a legal single-column recoloring
// through the free color (or equals it), otherwise the reason.
std::string transfer_step_failure(int k, const OrbitColoring& prev, const OrbitColoring& next);

struct Anchor {
    std::int64_t position = 0;
    int a0 = 0;  // grid offset relative to the previous anchor (the origin for the first)
    int b0 = 0;
};

// A stretch of Cay(Delta_k): `extent` consecutive orbits, with anchor orbits
// at strictly increasing positions in [0, extent).
struct AnchoredTower {
    int k = 3;
    std::vector<Anchor> anchors;
    int extent = 0;
    LineMode mode = LineMode::Segment;
};

// InputError if any gap between consecutive anchors (cyclically in Cycle
// mode) is at most 3k, or the tower is otherwise malformed.
void validate_tower(const AnchoredTower& tower);

// Per-orbit column colorings of the whole tower, anchors included.
std::vector<OrbitColoring> color_tower_orbits(const AnchoredTower& tower);

// The tower as a graph (vertex level * k^2 + a * k + b) and its per-vertex
// coloring with at most k + 1 colors.
FiniteGraph tower_graph(const AnchoredTower& tower);
Coloring color_tower(const AnchoredTower& tower);

// Seeded random tower. Segment towers take their anchors from
// greedy_maximal_discrete(random candidate positions, 3k); cycle towers draw
// gaps in [3k+1, 3k+8]. Offsets are uniform unless zero_offsets is set.
AnchoredTower random_tower(int k, std::uint64_t seed, LineMode mode, bool zero_offsets = false);

// Whether no k-coloring of a single-gap tower agrees with both anchor
// orbits. The tower must have exactly two anchors in Segment mode, the first
// at 0 and the second at extent - 1.
bool witness_k_insufficient(const AnchoredTower& tower, const Budget& budget = {});

}  // namespace shadowchi
