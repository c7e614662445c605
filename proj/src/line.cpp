#include "shadowchi/line.hpp"

#include <algorithm>
#include <cstdlib>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"

namespace shadowchi {

std::string to_string(LineMode mode) { return mode == LineMode::Cycle ? "cycle" : "segment"; }

LineMode parse_line_mode(const std::string& s) {
    if (s == "cycle") return LineMode::Cycle;
    if (s == "segment") return LineMode::Segment;
    throw InputError("mode must be 'cycle' or 'segment', got '" + s + "'");
}

LineInstance::LineInstance(FiniteGraph graph, std::vector<int> block_of, LineMode mode, int chi)
    : graph_(std::move(graph)), block_of_(std::move(block_of)), mode_(mode), chi_(chi) {
    const int n = graph_.vertex_count();
    if (n == 0) throw InputError("line instance has no vertices");
    if (static_cast<int>(block_of_.size()) != n) throw InputError("block assignment does not cover every vertex");
    if (chi_ < 0) throw InputError("chi must be non-negative");
    const int m = *std::max_element(block_of_.begin(), block_of_.end()) + 1;
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(m));
    for (Vertex v = 0; v < n; ++v) {
        int b = block_of_[static_cast<std::size_t>(v)];
        if (b < 0) throw InputError("negative block index");
        members[static_cast<std::size_t>(b)].push_back(v);
    }
    for (int b = 0; b < m; ++b)
        if (members[static_cast<std::size_t>(b)].empty()) throw InputError("block " + std::to_string(b) + " is empty");
    if (mode_ == LineMode::Cycle && m < 3) throw InputError("cycle mode needs at least 3 blocks");
    for (auto [u, v] : graph_.edges()) {
        int bu = block_of_[static_cast<std::size_t>(u)];
        int bv = block_of_[static_cast<std::size_t>(v)];
        bool ok = std::abs(bu - bv) <= 1 ||
                  (mode_ == LineMode::Cycle && std::min(bu, bv) == 0 && std::max(bu, bv) == m - 1);
        if (!ok)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins non-adjacent blocks");
    }
    if (components(graph_).size() != 1) throw InputError("line instance is not connected");
    for (auto& mem : members) blocks_.emplace_back(std::move(mem));
}

int LineInstance::max_block_size() const {
    std::size_t best = 0;
    for (const auto& b : blocks_) best = std::max(best, b.size());
    return static_cast<int>(best);
}

LineInstance LineInstance::with_chi(int chi) const { return LineInstance(graph_, block_of_, mode_, chi); }

LineInstance LineInstance::with_mode(LineMode mode) const { return LineInstance(graph_, block_of_, mode, chi_); }

LineInstance unroll_cycle(const LineInstance& inst) {
    if (inst.mode() != LineMode::Cycle) throw InputError("unroll_cycle needs a cycle-mode instance");
    const int n = inst.graph().vertex_count();
    const int m = inst.block_count();
    std::vector<Edge> edges;
    for (auto [u, v] : inst.graph().edges()) {
        int bu = inst.block_of(u);
        int bv = inst.block_of(v);
        if (std::abs(bu - bv) <= 1) {
            for (int c = 0; c < 3; ++c) edges.emplace_back(c * n + u, c * n + v);
        } else {
            Vertex top = bu == m - 1 ? u : v;
            Vertex bottom = bu == m - 1 ? v : u;
            for (int c = 0; c < 2; ++c) edges.emplace_back(c * n + top, (c + 1) * n + bottom);
        }
    }
    std::vector<int> block_of(static_cast<std::size_t>(3 * n));
    for (int c = 0; c < 3; ++c)
        for (Vertex v = 0; v < n; ++v) block_of[static_cast<std::size_t>(c * n + v)] = c * m + inst.block_of(v);
    return LineInstance(FiniteGraph::from_edges(3 * n, edges), std::move(block_of), LineMode::Segment, inst.chi());
}

namespace {

bool segment_divides(const LineInstance& inst, const VertexSet& f) {
    const int last = inst.block_count() - 1;
    auto rest = set_difference(VertexSet::range(inst.graph().vertex_count()), f);
    int left_only = 0;
    int right_only = 0;
    int touching = 0;
    for (const auto& comp : components(inst.graph(), rest)) {
        bool left = false;
        bool right = false;
        for (Vertex v : comp) {
            left = left || inst.block_of(v) == 0;
            right = right || inst.block_of(v) == last;
        }
        if (left || right) ++touching;
        if (left && !right) ++left_only;
        if (right && !left) ++right_only;
    }
    return touching == 2 && left_only == 1 && right_only == 1;
}

}  // namespace

int circular_start_block(const LineInstance& inst, const VertexSet& f) {
    if (f.empty()) throw InputError("empty set has no start block");
    if (inst.mode() == LineMode::Segment) {
        int first = inst.block_count();
        for (Vertex v : f) first = std::min(first, inst.block_of(v));
        return first;
    }
    const int m = inst.block_count();
    std::vector<char> occupied(static_cast<std::size_t>(m), 0);
    for (Vertex v : f) occupied[static_cast<std::size_t>(inst.block_of(v))] = 1;
    int best_len = 0;
    int best_end = -1;
    for (int start = 0; start < m; ++start) {
        if (occupied[static_cast<std::size_t>(start)]) continue;
        if (!occupied[static_cast<std::size_t>((start + m - 1) % m)]) continue;  // not a run start
        int len = 0;
        while (len < m && !occupied[static_cast<std::size_t>((start + len) % m)]) ++len;
        if (len > best_len) {
            best_len = len;
            best_end = (start + len - 1) % m;
        }
    }
    return best_end < 0 ? 0 : (best_end + 1) % m;
}

bool divides_into_two(const LineInstance& inst, const VertexSet& f) {
    if (f.empty()) throw InputError("separator candidate is empty");
    for (Vertex v : f)
        if (!inst.graph().valid(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (!is_connected(inst.graph(), f)) throw InputError("separator candidate is not connected");
    if (inst.mode() == LineMode::Segment) return segment_divides(inst, f);

    const int n = inst.graph().vertex_count();
    const int m = inst.block_count();
    const int start = circular_start_block(inst, f);
    std::vector<Vertex> lifted;
    for (Vertex v : f) {
        int pos = m + start + ((inst.block_of(v) - start) % m + m) % m;
        lifted.push_back((pos / m) * n + v);
    }
    return segment_divides(unroll_cycle(inst), VertexSet(std::move(lifted)));
}

LineInstance path_line(int m, LineMode mode) {
    if (m < 1) throw InputError("need at least one block");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    if (mode == LineMode::Cycle && m >= 3) edges.emplace_back(m - 1, 0);
    std::vector<int> block_of(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) block_of[static_cast<std::size_t>(i)] = i;
    int chi = m == 1 ? 1 : (mode == LineMode::Cycle && m % 2 == 1 ? 3 : 2);
    return LineInstance(FiniteGraph::from_edges(m, edges), std::move(block_of), mode, chi);
}

LineInstance ladder_line(int m, LineMode mode) {
    if (m < 1) throw InputError("need at least one block");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);
        if (i + 1 < m) {
            edges.emplace_back(2 * i, 2 * i + 2);
            edges.emplace_back(2 * i + 1, 2 * i + 3);
        }
    }
    if (mode == LineMode::Cycle && m >= 3) {
        edges.emplace_back(2 * (m - 1), 0);
        edges.emplace_back(2 * (m - 1) + 1, 1);
    }
    std::vector<int> block_of(static_cast<std::size_t>(2 * m));
    for (int v = 0; v < 2 * m; ++v) block_of[static_cast<std::size_t>(v)] = v / 2;
    int chi = mode == LineMode::Cycle && m % 2 == 1 ? 3 : 2;
    return LineInstance(FiniteGraph::from_edges(2 * m, edges), std::move(block_of), mode, chi);
}

LineInstance cayley_line(const MarkedGroupSpec& spec, int m, LineMode mode) {
    auto g = mode == LineMode::Cycle ? cayley_quotient(spec, m) : cayley_window(spec, 0, m - 1);
    const int k = spec.k();
    std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) block_of[static_cast<std::size_t>(v)] = v / (k * k);
    // The coordinate coloring certifies k except on odd twisted cycles, where
    // chi is left for the caller to compute.
    int chi = (spec.twisted() && mode == LineMode::Cycle && m % 2 == 1) ? 0 : k;
    return LineInstance(std::move(g), std::move(block_of), mode, chi);
}

}  // namespace shadowchi
