#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shadowchi/budget.hpp"
#include "shadowchi/graph.hpp"

namespace shadowchi {

// Total assignment of colors 1..palette to the vertices of a graph.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;

    int color(Vertex v) const { return colors[static_cast<std::size_t>(v)]; }

    // Number of distinct colors actually appearing.
    int colors_used() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Throws InputError when the assignment is not total on g or a color falls
// outside 1..palette.
bool is_proper(const FiniteGraph& g, const Coloring& c);

struct Pin {
    Vertex vertex;
    int color;
};

enum class SearchStatus { Found, Infeasible, Undecided };

struct SearchResult {
    SearchStatus status = SearchStatus::Undecided;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

// Proper coloring with colors 1..palette extending the pins, or a proof that
// none exists. Backtracking with saturation-ordered branching; colors absent
// from the pins are treated as interchangeable.
SearchResult find_coloring(const FiniteGraph& g, int palette, std::span<const Pin> pins = {},
                           const Budget& budget = {});

enum class ChiStatus {
    Exact,      // lower == upper
    Bounded,    // budget ran out with lower < upper; both bounds certified
    Undecided,  // nothing certified beyond the trivial bounds
};

struct ChiResult {
    ChiStatus status = ChiStatus::Undecided;
    int lower = 0;
    int upper = 0;
    std::optional<Coloring> witness;  // proper coloring with `upper` colors

    bool exact() const { return status == ChiStatus::Exact; }
    int value() const;  // throws InvariantViolation unless exact()
};

ChiResult chromatic_number(const FiniteGraph& g, std::optional<int> upper_hint = std::nullopt,
                           const Budget& budget = {});

// Size of a clique found greedily; a valid lower bound for chi.
int greedy_clique_size(const FiniteGraph& g);

// Saturation-ordered greedy coloring without backtracking.
Coloring dsatur_greedy(const FiniteGraph& g);

enum class Symmetry {
    None,       // every proper coloring
    PinFirst,   // vertex 0 fixed to color 1; multiply by palette for the full count
    Canonical,  // one representative per color relabeling (first appearances increase)
};

struct EnumerateOptions {
    Symmetry symmetry = Symmetry::None;
    int jobs = 1;
    // With jobs > 1 the visitor runs concurrently unless this is set.
    bool sequential_delivery = false;
    Budget budget;
};

struct EnumerationResult {
    std::uint64_t count = 0;
    bool complete = true;
};

using ColoringVisitor = std::function<void(std::span<const int> colors)>;

// Visits proper colorings with colors drawn from 1..palette (not all need
// appear). Single-threaded runs visit in lexicographic order of the color
// vector.
EnumerationResult enumerate_colorings(const FiniteGraph& g, int palette, const ColoringVisitor& visitor,
                                      const EnumerateOptions& options = {});

// palette * (palette - 1) * ... over `used` factors: the number of full
// colorings represented by one canonical coloring using `used` colors.
std::uint64_t falling_factorial(int palette, int used);

}  // namespace shadowchi
