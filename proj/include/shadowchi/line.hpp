#pragma once

#include <string>
#include <vector>

#include "shadowchi/graph.hpp"
#include "shadowchi/group.hpp"

namespace shadowchi {

enum class LineMode {
    Segment,  // blocks 0 and m-1 stand in for the two ends
    Cycle,    // block m-1 adjoins block 0; ends live on the universal cover
};

std::string to_string(LineMode mode);
LineMode parse_line_mode(const std::string& s);

// A connected, locally finite graph whose vertices are partitioned into an
// ordered list of blocks, with edges only inside a block or between
// consecutive blocks (cyclically in Cycle mode). The finite presentation of
// one two-ended component.
class LineInstance {
public:
    // Validates the block structure, connectivity and (in Cycle mode) m >= 3.
    LineInstance(FiniteGraph graph, std::vector<int> block_of, LineMode mode, int chi = 0);

    const FiniteGraph& graph() const { return graph_; }
    LineMode mode() const { return mode_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_of(Vertex v) const { return block_of_[static_cast<std::size_t>(v)]; }
    const VertexSet& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    int max_block_size() const;

    // Known chromatic number of the graph; 0 when not supplied.
    int chi() const { return chi_; }
    LineInstance with_chi(int chi) const;
    LineInstance with_mode(LineMode mode) const;

private:
    FiniteGraph graph_;
    std::vector<int> block_of_;
    std::vector<VertexSet> blocks_;
    LineMode mode_;
    int chi_;
};

// Three copies of a Cycle instance unrolled into a Segment of 3m blocks.
// Vertex v of copy c becomes c * n + v.
LineInstance unroll_cycle(const LineInstance& inst);

// Whether removing f leaves exactly two end-touching components, one on each
// side. f must be non-empty and connected (InputError otherwise). In Cycle
// mode f is lifted into the middle copy of unroll_cycle() and the test runs
// there.
bool divides_into_two(const LineInstance& inst, const VertexSet& f);

// In Cycle mode, the block right after the longest circular run of blocks
// that s misses: reading blocks from there, s occupies a contiguous stretch
// whenever it fits in fewer than m blocks. In Segment mode, s's first block.
int circular_start_block(const LineInstance& inst, const VertexSet& s);

// Built-in instances.
LineInstance path_line(int m, LineMode mode);     // C_m or the path on m vertices
LineInstance ladder_line(int m, LineMode mode);   // rungs {2i, 2i+1}
LineInstance cayley_line(const MarkedGroupSpec& spec, int m, LineMode mode);  // one orbit per block

}  // namespace shadowchi
