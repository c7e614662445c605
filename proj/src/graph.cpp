#include "shadowchi/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "shadowchi/errors.hpp"

namespace shadowchi {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex count) {
    std::vector<Vertex> vs(static_cast<std::size_t>(std::max(count, 0)));
    for (Vertex v = 0; v < count; ++v) vs[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(vs));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

FiniteGraph FiniteGraph::from_edges(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    FiniteGraph g;
    g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw InputError("self loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        twice += adj.size();
    }
    g.edge_count_ = twice / 2;
    return g;
}

bool FiniteGraph::has_edge(Vertex u, Vertex v) const {
    if (!valid(u) || !valid(v)) return false;
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> FiniteGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<int> FiniteGraph::regular_degree() const {
    if (adjacency_.empty()) return std::nullopt;
    int d = degree(0);
    for (Vertex v = 1; v < vertex_count(); ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

void FiniteGraph::set_element_labels(std::vector<GroupElement> labels) {
    if (!labels.empty() && labels.size() != adjacency_.size()) throw InputError("label count mismatch");
    element_labels_ = std::move(labels);
}

void FiniteGraph::set_block_labels(std::vector<BlockLabel> labels) {
    if (!labels.empty() && labels.size() != adjacency_.size()) throw InputError("label count mismatch");
    block_labels_ = std::move(labels);
}

namespace {

void require_vertex(const FiniteGraph& g, Vertex v) {
    if (!g.valid(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<Distance> distances_from(const FiniteGraph& g, const VertexSet& sources) {
    std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()));
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        require_vertex(g, s);
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        int du = *dist[static_cast<std::size_t>(u)];
        for (Vertex w : g.neighbors(u)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (!dw) {
                dw = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Distance path_distance(const FiniteGraph& g, Vertex u, Vertex v) {
    require_vertex(g, u);
    require_vertex(g, v);
    return distances_from(g, VertexSet{u})[static_cast<std::size_t>(v)];
}

Distance set_distance(const FiniteGraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw InputError("set_distance needs non-empty sets");
    for (Vertex v : b) require_vertex(g, v);
    auto dist = distances_from(g, a);
    Distance best;
    for (Vertex v : b) {
        auto d = dist[static_cast<std::size_t>(v)];
        if (d && (!best || *d < *best)) best = d;
    }
    return best;
}

std::vector<VertexSet> components(const FiniteGraph& g, const VertexSet& restrict_to) {
    std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : restrict_to) {
        require_vertex(g, v);
        allowed[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(allowed.size(), 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex start : restrict_to) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<Vertex> block;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            block.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (allowed[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.emplace_back(std::move(block));
    }
    return out;
}

std::vector<VertexSet> components(const FiniteGraph& g) { return components(g, VertexSet::range(g.vertex_count())); }

bool is_connected(const FiniteGraph& g, const VertexSet& s) { return !s.empty() && components(g, s).size() == 1; }

bool is_independent(const FiniteGraph& g, const VertexSet& a) {
    for (Vertex u : a) {
        require_vertex(g, u);
        for (Vertex w : g.neighbors(u))
            if (w > u && a.contains(w)) return false;
    }
    return true;
}

FiniteGraph induced_subgraph(const FiniteGraph& g, const VertexSet& s) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        require_vertex(g, s[i]);
        local[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbors(s[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    auto sub = FiniteGraph::from_edges(static_cast<int>(s.size()), edges);
    if (!g.element_labels().empty()) {
        std::vector<GroupElement> labels;
        for (Vertex v : s) labels.push_back(g.element_labels()[static_cast<std::size_t>(v)]);
        sub.set_element_labels(std::move(labels));
    }
    if (!g.block_labels().empty()) {
        std::vector<BlockLabel> labels;
        for (Vertex v : s) labels.push_back(g.block_labels()[static_cast<std::size_t>(v)]);
        sub.set_block_labels(std::move(labels));
    }
    return sub;
}

VertexSet closed_neighborhood(const FiniteGraph& g, const VertexSet& s) {
    std::vector<Vertex> out(s.begin(), s.end());
    for (Vertex v : s) {
        require_vertex(g, v);
        auto adj = g.neighbors(v);
        out.insert(out.end(), adj.begin(), adj.end());
    }
    return VertexSet(std::move(out));
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
    std::vector<Vertex> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& x, const VertexSet& y) {
    std::vector<Vertex> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

}  // namespace shadowchi
