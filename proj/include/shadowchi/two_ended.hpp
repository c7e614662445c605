#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shadowchi/budget.hpp"
#include "shadowchi/chi.hpp"
#include "shadowchi/line.hpp"

namespace shadowchi {

// Pairwise-far connected separators together with the adjacency relation
// "some path joins them avoiding every other member".
struct SeparatorFamily {
    std::vector<VertexSet> members;
    std::vector<std::pair<int, int>> t_edges;  // member indices, i < j

    std::vector<int> t_degrees() const;
    VertexSet united() const;
};

// Connected vertex sets of size <= size_cap inside some window of
// window_blocks consecutive blocks that divide the instance into two parts.
// Ordered by leftmost window, then lexicographically; each set appears once.
// Windows may hold at most 64 vertices.
std::vector<VertexSet> find_separators(const LineInstance& inst, int window_blocks, int size_cap);

// Greedy left-to-right selection of candidates at pairwise distance >= 4,
// plus the t-adjacency. Throws InputError when there are no candidates on a
// multi-block instance.
SeparatorFamily build_psi(const LineInstance& inst, const std::vector<VertexSet>& candidates);

// Structural checks on a family: pairwise distance, separation, and the
// t-degree pattern (all degree 2 in Cycle mode; a path in Segment mode).
struct FamilyCheck {
    bool members_divide = true;
    int min_pairwise_distance = -1;  // -1 when fewer than two members
    bool distance_ok = true;
    bool t_shape_ok = true;
    bool ok() const { return members_divide && distance_ok && t_shape_ok; }
};

FamilyCheck check_family(const LineInstance& inst, const SeparatorFamily& psi);

struct ComplementReport {
    std::size_t component_count = 0;
    std::size_t max_component_size = 0;
    int max_component_span = 0;  // blocks touched, for the checked components
    int largest_gap = 0;         // blocks between consecutive member starts
    bool degenerate = false;     // too few members for the t-structure
    bool ok = true;
};

// Complement of the union of psi: every component (in Segment mode, every
// one not touching an end block) must span fewer blocks than the largest gap.
ComplementReport check_complement_components(const LineInstance& inst, const SeparatorFamily& psi);

struct TwoEndedParams {
    std::optional<int> window_blocks;  // default 2
    std::optional<int> size_cap;       // default 2 * max block size
    Budget budget;
};

struct TwoEndedColoringResult {
    Coloring coloring;
    SeparatorFamily psi;
    VertexSet b_star;
    VertexSet b;
    int chi = 0;
    int colors_used = 0;
    std::size_t b_star_components = 0;
    std::size_t complement_components = 0;
    std::size_t largest_complement_component = 0;
};

// Separator-based coloring with at most 2 chi - 1 colors: color the closed
// neighborhoods of the separators with chi colors, drop the last class,
// then color what remains with the other chi colors. When the instance has
// no chi, it is computed first.
TwoEndedColoringResult color_two_ended(const LineInstance& inst, const TwoEndedParams& params = {});

}  // namespace shadowchi
