#include "shadowchi/chi.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>

#include "shadowchi/errors.hpp"

namespace shadowchi {

int Coloring::colors_used() const {
    std::vector<int> cs = colors;
    std::sort(cs.begin(), cs.end());
    return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

bool is_proper(const FiniteGraph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw InputError("coloring covers " + std::to_string(c.colors.size()) + " vertices, graph has " +
                         std::to_string(g.vertex_count()));
    for (int col : c.colors)
        if (col < 1 || col > c.palette)
            throw InputError("color " + std::to_string(col) + " outside palette 1.." + std::to_string(c.palette));
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v)) return false;
    return true;
}

int ChiResult::value() const {
    if (!exact()) throw InvariantViolation("chromatic number not decided");
    return upper;
}

std::uint64_t falling_factorial(int palette, int used) {
    std::uint64_t r = 1;
    for (int i = 0; i < used; ++i) r *= static_cast<std::uint64_t>(palette - i);
    return r;
}

namespace {

constexpr int kMaxPalette = 64;

void check_palette(int palette) {
    if (palette < 1 || palette > kMaxPalette)
        throw InputError("palette must be in 1.." + std::to_string(kMaxPalette) + ", got " + std::to_string(palette));
}

std::uint64_t bit(int color) { return std::uint64_t{1} << (color - 1); }

// Incremental bookkeeping of which colors each vertex still may take.
// Assignments must be undone in LIFO order.
class ColorState {
public:
    ColorState(const FiniteGraph& g, int palette)
        : g_(g),
          palette_(palette),
          full_(palette == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << palette) - 1),
          color_(static_cast<std::size_t>(g.vertex_count()), 0),
          count_(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(palette), 0),
          forbidden_(static_cast<std::size_t>(g.vertex_count()), 0),
          used_(static_cast<std::size_t>(palette) + 1, 0) {}

    int color(Vertex v) const { return color_[idx(v)]; }
    std::uint64_t allowed(Vertex v) const { return ~forbidden_[idx(v)] & full_; }
    int saturation(Vertex v) const { return std::popcount(forbidden_[idx(v)]); }
    int used(int c) const { return used_[static_cast<std::size_t>(c)]; }
    bool dead() const { return dead_ > 0; }
    const std::vector<int>& colors() const { return color_; }

    void assign(Vertex v, int c) {
        color_[idx(v)] = c;
        ++used_[static_cast<std::size_t>(c)];
        const auto b = bit(c);
        for (Vertex w : g_.neighbors(v)) {
            auto& cnt = count_[idx(w) * static_cast<std::size_t>(palette_) + static_cast<std::size_t>(c - 1)];
            if (cnt++ == 0) {
                forbidden_[idx(w)] |= b;
                if (color_[idx(w)] == 0 && forbidden_[idx(w)] == full_) ++dead_;
            }
        }
    }

    void unassign(Vertex v) {
        const int c = color_[idx(v)];
        const auto b = bit(c);
        for (Vertex w : g_.neighbors(v)) {
            auto& cnt = count_[idx(w) * static_cast<std::size_t>(palette_) + static_cast<std::size_t>(c - 1)];
            if (--cnt == 0) {
                if (color_[idx(w)] == 0 && forbidden_[idx(w)] == full_) --dead_;
                forbidden_[idx(w)] &= ~b;
            }
        }
        --used_[static_cast<std::size_t>(c)];
        color_[idx(v)] = 0;
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    const FiniteGraph& g_;
    int palette_;
    std::uint64_t full_;
    std::vector<int> color_;
    std::vector<std::uint16_t> count_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> used_;
    int dead_ = 0;
};

class DsaturSearch {
public:
    DsaturSearch(const FiniteGraph& g, int palette, const Budget& budget)
        : g_(g), state_(g, palette), probe_(budget), interchangeable_(static_cast<std::size_t>(palette) + 1, 1) {}

    // False when the pins already clash.
    bool apply_pins(std::span<const Pin> pins, int palette) {
        std::vector<int> seen(static_cast<std::size_t>(g_.vertex_count()), 0);
        for (const auto& p : pins) {
            if (!g_.valid(p.vertex)) throw InputError("pinned vertex " + std::to_string(p.vertex) + " out of range");
            if (p.color < 1 || p.color > palette)
                throw InputError("pinned color " + std::to_string(p.color) + " outside palette");
            auto& s = seen[static_cast<std::size_t>(p.vertex)];
            if (s != 0 && s != p.color) throw InputError("vertex " + std::to_string(p.vertex) + " pinned twice");
            if (s != 0) continue;
            s = p.color;
            interchangeable_[static_cast<std::size_t>(p.color)] = 0;
            if ((state_.allowed(p.vertex) & bit(p.color)) == 0) return false;
            state_.assign(p.vertex, p.color);
        }
        return !state_.dead();
    }

    SearchStatus run() {
        if (search()) return SearchStatus::Found;
        return undecided_ ? SearchStatus::Undecided : SearchStatus::Infeasible;
    }

    const std::vector<int>& colors() const { return state_.colors(); }
    std::uint64_t nodes() const { return nodes_; }

private:
    Vertex pick() const {
        Vertex best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (state_.color(v) != 0) continue;
            int sat = state_.saturation(v);
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool search() {
        if (probe_.tick()) {
            undecided_ = true;
            return false;
        }
        ++nodes_;
        const Vertex v = pick();
        if (v < 0) return true;
        bool fresh_tried = false;
        for (auto allowed = state_.allowed(v); allowed != 0; allowed &= allowed - 1) {
            const int c = std::countr_zero(allowed) + 1;
            if (interchangeable_[static_cast<std::size_t>(c)] && state_.used(c) == 0) {
                if (fresh_tried) continue;
                fresh_tried = true;
            }
            state_.assign(v, c);
            if (!state_.dead() && search()) return true;
            state_.unassign(v);
            if (undecided_) return false;
        }
        return false;
    }

    const FiniteGraph& g_;
    ColorState state_;
    BudgetProbe probe_;
    std::vector<char> interchangeable_;
    std::uint64_t nodes_ = 0;
    bool undecided_ = false;
};

}  // namespace

SearchResult find_coloring(const FiniteGraph& g, int palette, std::span<const Pin> pins, const Budget& budget) {
    check_palette(palette);
    SearchResult result;
    DsaturSearch search(g, palette, budget);
    if (!search.apply_pins(pins, palette)) {
        result.status = SearchStatus::Infeasible;
        return result;
    }
    result.status = search.run();
    result.nodes = search.nodes();
    if (result.status == SearchStatus::Found) result.coloring = Coloring{search.colors(), palette};
    return result;
}

int greedy_clique_size(const FiniteGraph& g) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        std::vector<Vertex> clique{start};
        std::vector<Vertex> candidates(g.neighbors(start).begin(), g.neighbors(start).end());
        while (!candidates.empty()) {
            // Keep the candidate that leaves the most candidates behind.
            Vertex pick = candidates.front();
            std::size_t pick_score = 0;
            for (Vertex c : candidates) {
                std::size_t score = 0;
                for (Vertex d : candidates)
                    if (g.has_edge(c, d)) ++score;
                if (score > pick_score) {
                    pick = c;
                    pick_score = score;
                }
            }
            clique.push_back(pick);
            std::erase_if(candidates, [&](Vertex d) { return d == pick || !g.has_edge(pick, d); });
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

Coloring dsatur_greedy(const FiniteGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    int palette = 0;
    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        for (Vertex u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] != 0) continue;
            if (v < 0 || sat[static_cast<std::size_t>(u)] > sat[static_cast<std::size_t>(v)] ||
                (sat[static_cast<std::size_t>(u)] == sat[static_cast<std::size_t>(v)] && g.degree(u) > g.degree(v)))
                v = u;
        }
        auto& sv = seen[static_cast<std::size_t>(v)];
        int c = 1;
        while (c < static_cast<int>(sv.size()) && sv[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        palette = std::max(palette, c);
        for (Vertex w : g.neighbors(v)) {
            auto& sw = seen[static_cast<std::size_t>(w)];
            if (static_cast<int>(sw.size()) <= c) sw.resize(static_cast<std::size_t>(c) + 1, 0);
            if (!sw[static_cast<std::size_t>(c)]) {
                sw[static_cast<std::size_t>(c)] = 1;
                ++sat[static_cast<std::size_t>(w)];
            }
        }
    }
    return {std::move(color), std::max(palette, n > 0 ? 1 : 0)};
}

ChiResult chromatic_number(const FiniteGraph& g, std::optional<int> upper_hint, const Budget& budget) {
    if (g.vertex_count() == 0) throw InputError("chromatic number of the empty graph is not defined here");
    ChiResult result;
    result.lower = greedy_clique_size(g);
    auto greedy = dsatur_greedy(g);
    result.upper = greedy.palette;
    result.witness = std::move(greedy);

    if (upper_hint && *upper_hint >= result.lower && *upper_hint < result.upper && *upper_hint <= kMaxPalette) {
        auto r = find_coloring(g, *upper_hint, {}, budget);
        if (r.status == SearchStatus::Found) {
            result.upper = *upper_hint;
            result.witness = std::move(r.coloring);
        }
    }
    while (result.lower < result.upper) {
        auto r = find_coloring(g, result.lower, {}, budget);
        if (r.status == SearchStatus::Found) {
            result.upper = result.lower;
            result.witness = std::move(r.coloring);
        } else if (r.status == SearchStatus::Infeasible) {
            ++result.lower;
        } else {
            result.status = ChiStatus::Bounded;
            return result;
        }
    }
    result.status = ChiStatus::Exact;
    return result;
}

namespace {

class Enumerator {
public:
    Enumerator(const FiniteGraph& g, int palette, Symmetry symmetry, const Budget& budget)
        : g_(g), palette_(palette), symmetry_(symmetry), state_(g, palette), probe_(budget) {}

    // Assigns a prefix produced by collect(); false if it is no longer viable.
    bool replay(std::span<const int> prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            auto v = static_cast<Vertex>(i);
            if ((state_.allowed(v) & bit(prefix[i])) == 0) return false;
            state_.assign(v, prefix[i]);
            max_used_ = std::max(max_used_, prefix[i]);
        }
        return !state_.dead();
    }

    template <class Leaf>
    void walk(Vertex v, Vertex stop, Leaf&& leaf) {
        if (probe_.tick()) {
            aborted_ = true;
            return;
        }
        if (v == stop) {
            leaf(state_.colors());
            return;
        }
        const std::uint64_t allowed = state_.allowed(v);
        for (int c = 1; c <= palette_; ++c) {
            if ((allowed & bit(c)) == 0) continue;
            if (symmetry_ == Symmetry::PinFirst && v == 0 && c != 1) break;
            if (symmetry_ == Symmetry::Canonical && c > max_used_ + 1) break;
            const int saved = max_used_;
            max_used_ = std::max(max_used_, c);
            state_.assign(v, c);
            if (!state_.dead()) walk(v + 1, stop, leaf);
            state_.unassign(v);
            max_used_ = saved;
            if (aborted_) return;
        }
    }

    bool aborted() const { return aborted_; }

private:
    const FiniteGraph& g_;
    int palette_;
    Symmetry symmetry_;
    ColorState state_;
    BudgetProbe probe_;
    int max_used_ = 0;
    bool aborted_ = false;
};

}  // namespace

EnumerationResult enumerate_colorings(const FiniteGraph& g, int palette, const ColoringVisitor& visitor,
                                      const EnumerateOptions& options) {
    check_palette(palette);
    const Vertex n = g.vertex_count();
    EnumerationResult result;

    if (options.jobs <= 1 || n < 2) {
        Enumerator e(g, palette, options.symmetry, options.budget);
        e.walk(0, n, [&](const std::vector<int>& colors) {
            ++result.count;
            if (visitor) visitor(colors);
        });
        result.complete = !e.aborted();
        return result;
    }

    // Split the tree on a prefix of the vertex order and hand prefixes out.
    std::vector<std::vector<int>> prefixes;
    Vertex depth = 1;
    for (;; ++depth) {
        prefixes.clear();
        Enumerator e(g, palette, options.symmetry, Budget{});
        e.walk(0, depth, [&](const std::vector<int>& colors) {
            prefixes.emplace_back(colors.begin(), colors.begin() + depth);
        });
        if (depth >= n || prefixes.size() >= static_cast<std::size_t>(8 * options.jobs)) break;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> aborted{false};
    std::mutex deliver;
    auto worker = [&] {
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            Enumerator e(g, palette, options.symmetry, options.budget);
            if (!e.replay(prefixes[i])) continue;
            std::uint64_t local = 0;
            e.walk(depth, n, [&](const std::vector<int>& colors) {
                ++local;
                if (!visitor) return;
                if (options.sequential_delivery) {
                    std::lock_guard lock(deliver);
                    visitor(colors);
                } else {
                    visitor(colors);
                }
            });
            total += local;
            if (e.aborted()) {
                aborted = true;
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int j = 0; j < options.jobs; ++j) pool.emplace_back(worker);
    }
    result.count = total;
    result.complete = !aborted;
    return result;
}

}  // namespace shadowchi
