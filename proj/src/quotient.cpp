#include "shadowchi/quotient.hpp"

#include <string>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"

namespace shadowchi {

QuotientGraph::QuotientGraph(const MarkedGroupSpec& spec, int M) : spec_(spec), M_(M), graph_(cayley_quotient(spec, M)) {
    if (graph_.regular_degree() != spec.degree())
        throw InvariantViolation("quotient is not " + std::to_string(spec.degree()) + "-regular");
    // x ~ s.x must survive replacing x by x.((0,0),M) for every generator.
    const GroupElement shift{0, 0, M};
    const auto gens = generators(spec);
    for (const auto& x : graph_.element_labels())
        for (const auto& s : gens) {
            auto lhs = multiply(spec, multiply(spec, s.as_element(), x), shift);
            auto rhs = multiply(spec, s.as_element(), multiply(spec, x, shift));
            if (!(lhs == rhs)) throw InvariantViolation("left and right actions do not commute");
        }
}

Vertex QuotientGraph::vertex(int a, int b, int level) const {
    const int k = spec_.k();
    return orbit_vertex(k, ((level % M_) + M_) % M_, ((a % k) + k) % k, ((b % k) + k) % k);
}

QuotientGraph build_quotient(const MarkedGroupSpec& spec, int M) { return QuotientGraph(spec, M); }

ChiResult quotient_chi(const MarkedGroupSpec& spec, int M, const Budget& budget) {
    return chromatic_number(build_quotient(spec, M).graph(), std::nullopt, budget);
}

bool verify_swap_isomorphism(int k, int M) {
    if (M % 2 != 0) throw InputError("the odd-level swap is only well defined on quotients with even M");
    const QuotientGraph gamma(MarkedGroupSpec::gamma(k), M);
    const QuotientGraph delta(MarkedGroupSpec::delta(k), M);
    const auto& labels = gamma.graph().element_labels();
    auto image = [&](Vertex v) {
        auto e = swap_odd_levels(labels[static_cast<std::size_t>(v)]);
        return delta.vertex(e.a, e.b, static_cast<int>(e.n));
    };
    std::vector<char> hit(static_cast<std::size_t>(delta.graph().vertex_count()), 0);
    for (Vertex v = 0; v < gamma.graph().vertex_count(); ++v) {
        auto& h = hit[static_cast<std::size_t>(image(v))];
        if (h) return false;
        h = 1;
    }
    if (gamma.graph().edge_count() != delta.graph().edge_count()) return false;
    for (auto [u, v] : gamma.graph().edges())
        if (!delta.graph().has_edge(image(u), image(v))) return false;
    return true;
}

std::vector<Orientation> orientation_sequence(const QuotientGraph& q, const Coloring& c) {
    const int k = q.spec().k();
    if (!is_proper(q.graph(), c)) throw InputError("coloring is not proper on the quotient");
    if (c.colors_used() > 2 * k - 2) throw InputError("orientation needs at most 2k-2 colors");
    std::vector<Orientation> out;
    const auto orbit = static_cast<std::size_t>(k * k);
    for (int level = 0; level < q.period(); ++level) {
        auto colors = std::span<const int>(c.colors).subspan(static_cast<std::size_t>(level) * orbit, orbit);
        auto p = orientation_predicates(k, colors);
        if (p.horizontal == p.vertical)
            throw InvariantViolation("orbit " + std::to_string(level) + " satisfies neither or both orientations");
        out.push_back(p.horizontal ? Orientation::Horizontal : Orientation::Vertical);
    }
    return out;
}

AlternationReport verify_alternation_obstruction(int k, int M, const Budget& budget) {
    if (M % 2 == 0) throw InputError("the alternation obstruction needs odd M, got " + std::to_string(M));
    if (M < 3) throw InputError("quotient period M must be at least 3");
    AlternationReport report;
    report.k = k;
    report.M = M;
    report.palette = 2 * k - 2;

    const auto q = build_quotient(MarkedGroupSpec::gamma(k), M);
    auto r = find_coloring(q.graph(), report.palette, {}, budget);
    report.solver = r.status;
    report.solver_nodes = r.nodes;
    if (r.status == SearchStatus::Found)
        throw InvariantViolation("found a (2k-2)-coloring of an odd twisted quotient");

    // Structural route: every proper (2k-2)-coloring of two neighboring
    // twisted orbits flips orientation, and an odd number of flips around
    // the M-cycle of orbits cannot return to the starting orientation.
    VerifyOptions vo;
    vo.budget = budget;
    report.two_orbit = verify_invariance(k, true, vo);
    report.parity_obstruction = report.two_orbit.passed() && M % 2 == 1;
    return report;
}

}  // namespace shadowchi
