#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowchi/budget.hpp"
#include "shadowchi/chi.hpp"
#include "shadowchi/grid.hpp"
#include "shadowchi/group.hpp"

namespace shadowchi {

// Cay(spec) modulo the right action of ((0,0), M). Left generator
// multiplication commutes with that action, so the quotient graph is well
// defined even where the subgroup is not normal.
class QuotientGraph {
public:
    // InputError when M < 3; InvariantViolation if the construction check
    // (regularity, compatibility with the right action) fails.
    QuotientGraph(const MarkedGroupSpec& spec, int M);

    const MarkedGroupSpec& spec() const { return spec_; }
    int period() const { return M_; }
    const FiniteGraph& graph() const { return graph_; }
    Vertex vertex(int a, int b, int level) const;

private:
    MarkedGroupSpec spec_;
    int M_;
    FiniteGraph graph_;
};

QuotientGraph build_quotient(const MarkedGroupSpec& spec, int M);

ChiResult quotient_chi(const MarkedGroupSpec& spec, int M, const Budget& budget = {});

// Whether the odd-level coordinate swap is an isomorphism from the Gamma_k
// quotient onto the Delta_k quotient, checked edge by edge. Only meaningful
// (and only attempted) for even M; InputError otherwise.
bool verify_swap_isomorphism(int k, int M);

// Orientation of each orbit of a proper coloring with at most 2k-2 colors.
std::vector<Orientation> orientation_sequence(const QuotientGraph& q, const Coloring& c);

struct AlternationReport {
    int k = 0;
    int M = 0;
    int palette = 0;
    SearchStatus solver = SearchStatus::Undecided;  // search for a (2k-2)-coloring
    std::uint64_t solver_nodes = 0;
    VerificationReport two_orbit;  // twisted neighboring orbits always flip
    bool parity_obstruction = false;  // flips around an odd cycle cannot close up

    bool passed() const {
        return solver == SearchStatus::Infeasible && two_orbit.passed() && parity_obstruction;
    }
    bool undecided() const { return solver == SearchStatus::Undecided || !two_orbit.complete; }
};

// No (2k-2)-coloring of the Gamma_k quotient for odd M, certified by the
// exact solver and independently by the orientation-flip parity argument.
AlternationReport verify_alternation_obstruction(int k, int M, const Budget& budget = {});

}  // namespace shadowchi
