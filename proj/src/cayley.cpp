#include "shadowchi/cayley.hpp"

#include <string>

#include "shadowchi/errors.hpp"

namespace shadowchi {

namespace {

FiniteGraph build_levels(const MarkedGroupSpec& spec, std::int64_t lo, int levels, bool cyclic) {
    const int k = spec.k();
    const auto gens = generators(spec);
    std::vector<Edge> edges;
    std::vector<GroupElement> labels;
    std::vector<BlockLabel> blocks;
    for (int level = 0; level < levels; ++level)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                GroupElement x{a, b, lo + level};
                labels.push_back(x);
                blocks.push_back({level, a * k + b});
                Vertex u = orbit_vertex(k, level, a, b);
                for (const auto& s : gens) {
                    auto y = multiply(spec, s.as_element(), x);
                    auto target = y.n - lo;
                    if (cyclic) {
                        target %= levels;
                        if (target < 0) target += levels;
                    } else if (target < 0 || target >= levels) {
                        continue;
                    }
                    Vertex v = orbit_vertex(k, static_cast<int>(target), y.a, y.b);
                    if (u < v) edges.emplace_back(u, v);
                }
            }
    auto g = FiniteGraph::from_edges(levels * k * k, edges);
    g.set_element_labels(std::move(labels));
    g.set_block_labels(std::move(blocks));
    return g;
}

}  // namespace

FiniteGraph cayley_window(const MarkedGroupSpec& spec, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InputError("empty window");
    return build_levels(spec, lo, static_cast<int>(hi - lo + 1), false);
}

FiniteGraph cayley_quotient(const MarkedGroupSpec& spec, int M) {
    if (M < 3) throw InputError("quotient period M must be at least 3, got " + std::to_string(M));
    return build_levels(spec, 0, M, true);
}

FiniteGraph grid_graph(int k) { return cayley_window(MarkedGroupSpec::delta(k), 0, 0); }

}  // namespace shadowchi
