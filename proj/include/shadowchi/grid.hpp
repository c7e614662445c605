#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadowchi/budget.hpp"
#include "shadowchi/chi.hpp"
#include "shadowchi/graph.hpp"
#include "shadowchi/group.hpp"

namespace shadowchi {

// H: the Cayley graph of Z_k x Z_k with generators {(a, b) : a, b != 0}.
// Vertex a * k + b is (a, b). A row fixes b, a column fixes a.
class GridGraphH {
public:
    explicit GridGraphH(int k);

    int k() const { return k_; }
    const FiniteGraph& graph() const { return graph_; }
    Vertex vertex(int a, int b) const { return a * k_ + b; }
    int column_of(Vertex v) const { return v / k_; }
    int row_of(Vertex v) const { return v % k_; }

private:
    int k_;
    FiniteGraph graph_;
};

struct IndependentSetClass {
    enum class Kind { Singleton, Horizontal, Vertical, NotIndependent };
    Kind kind = Kind::NotIndependent;
    int index = -1;  // row b for Horizontal, column a for Vertical

    friend bool operator==(const IndependentSetClass&, const IndependentSetClass&) = default;
};

std::string to_string(IndependentSetClass::Kind kind);

// Throws InputError on an empty set.
IndependentSetClass classify_independent_set(const GridGraphH& h, const VertexSet& a);

enum class Orientation { Horizontal, Vertical };

std::string to_string(Orientation o);

// Which branches of the dichotomy hold for a coloring of one k x k orbit:
// every row contains a horizontal color set, every column a vertical one.
// Only color sets of size >= 2 count.
struct OrientationPredicates {
    bool horizontal = false;
    bool vertical = false;
};

// `colors` lists the k^2 colors of one orbit in vertex order a * k + b.
OrientationPredicates orientation_predicates(int k, std::span<const int> colors);

// InputError if c is improper on H or uses more than 2k-2 colors;
// InvariantViolation if not exactly one branch holds.
Orientation orientation(const GridGraphH& h, const Coloring& c);

// Two neighboring orbits, levels 0 and 1 of Cay(spec); vertex
// level * k^2 + a * k + b. Cross edges come from group multiplication.
class TwoOrbitGraph {
public:
    TwoOrbitGraph(int k, bool twisted);

    int k() const { return k_; }
    bool twisted() const { return twisted_; }
    const FiniteGraph& graph() const { return graph_; }

private:
    int k_;
    bool twisted_;
    FiniteGraph graph_;
};

struct Violation {
    std::uint64_t index = 0;  // position in enumeration order
    std::vector<int> colors;
    std::string reason;
};

struct VerificationReport {
    std::string check;
    int k = 0;
    bool twisted = false;
    int palette = 0;
    std::string enumeration;  // "full", "pin-first" or "canonical"
    std::uint64_t enumerated = 0;  // colorings actually visited
    std::uint64_t total = 0;       // all proper colorings represented
    bool complete = true;
    std::vector<Violation> violations;
    std::uint64_t violation_count = 0;

    bool passed() const { return complete && violation_count == 0; }
};

struct VerifyOptions {
    std::optional<int> palette;          // defaults per check
    std::optional<Symmetry> symmetry;    // defaults per check
    int jobs = 1;
    Budget budget;
    std::size_t keep_violations = 10;
};

// Enumerates proper (2k-2)-colorings of H and checks that exactly one branch
// of the dichotomy holds for each. Refuses any other palette.
VerificationReport verify_dichotomy(int k, const VerifyOptions& options = {});

// Enumerates proper colorings of the two-orbit graph and checks that the
// orbit orientations agree (untwisted) or differ (twisted). Palette 2k-2 by
// default; with palette k the check is that each orbit is colored by a
// coordinate projection.
VerificationReport verify_invariance(int k, bool twisted, const VerifyOptions& options = {});

// Enumerates proper k-colorings of the untwisted two-orbit graph and checks
// that each is a coordinate projection up to relabeling, the same on both
// orbits.
VerificationReport verify_rigidity(int k, const VerifyOptions& options = {});

// Empty string when `colors` (2k^2 entries on the untwisted two-orbit graph)
// passes the rigidity check, otherwise the reason.
std::string rigidity_failure(const TwoOrbitGraph& g, std::span<const int> colors);

// The coordinate index a coloring of one orbit factors through: 0 when the
// color depends only on a and is injective in it, 1 for b; nullopt otherwise.
std::optional<int> projection_axis(int k, std::span<const int> colors);

}  // namespace shadowchi
