#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shadowchi/group.hpp"

namespace shadowchi {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Path distance; std::nullopt stands for "no path".
using Distance = std::optional<int>;

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
    explicit VertexSet(std::vector<Vertex> vs);

    static VertexSet range(Vertex count);

    bool contains(Vertex v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Vertex>& members() const { return members_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& x, const VertexSet& y) { return x.members_ <=> y.members_; }

private:
    std::vector<Vertex> members_;
};

// Optional per-vertex annotation carried for reporting and export.
struct BlockLabel {
    int block = 0;
    int local = 0;
    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

// Simple undirected graph on 0..n-1 with sorted neighbor lists. Immutable
// once built.
class FiniteGraph {
public:
    FiniteGraph() = default;

    // Rejects self loops and out-of-range endpoints; duplicate and reversed
    // edges are merged.
    static FiniteGraph from_edges(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool valid(Vertex v) const { return v >= 0 && v < vertex_count(); }

    // Each edge once, with u < v, in increasing order.
    std::vector<Edge> edges() const;

    std::optional<int> regular_degree() const;

    const std::vector<GroupElement>& element_labels() const { return element_labels_; }
    const std::vector<BlockLabel>& block_labels() const { return block_labels_; }
    void set_element_labels(std::vector<GroupElement> labels);
    void set_block_labels(std::vector<BlockLabel> labels);

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::vector<GroupElement> element_labels_;
    std::vector<BlockLabel> block_labels_;
};

Distance path_distance(const FiniteGraph& g, Vertex u, Vertex v);

// Multi-source breadth-first distances from a set; nullopt where unreachable.
std::vector<Distance> distances_from(const FiniteGraph& g, const VertexSet& sources);

Distance set_distance(const FiniteGraph& g, const VertexSet& a, const VertexSet& b);

// Components of the subgraph induced on restrict_to, each sorted, ordered by
// smallest member.
std::vector<VertexSet> components(const FiniteGraph& g, const VertexSet& restrict_to);
std::vector<VertexSet> components(const FiniteGraph& g);

bool is_connected(const FiniteGraph& g, const VertexSet& s);

bool is_independent(const FiniteGraph& g, const VertexSet& a);

// Subgraph induced on s; vertex i of the result is s[i].
FiniteGraph induced_subgraph(const FiniteGraph& g, const VertexSet& s);

// Closed neighborhood: s together with every vertex adjacent to it.
VertexSet closed_neighborhood(const FiniteGraph& g, const VertexSet& s);

VertexSet set_union(const VertexSet& x, const VertexSet& y);
VertexSet set_difference(const VertexSet& x, const VertexSet& y);

}  // namespace shadowchi
