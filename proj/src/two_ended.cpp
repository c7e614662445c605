#include "shadowchi/two_ended.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "shadowchi/errors.hpp"

namespace shadowchi {

std::vector<int> SeparatorFamily::t_degrees() const {
    std::vector<int> deg(members.size(), 0);
    for (auto [i, j] : t_edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

VertexSet SeparatorFamily::united() const {
    std::vector<Vertex> all;
    for (const auto& s : members) all.insert(all.end(), s.begin(), s.end());
    return VertexSet(std::move(all));
}

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

// One window of the (possibly unrolled) segment with everything outside it
// contracted: the components of the left and right remainders never change
// when vertices inside the window are removed.
class WindowView {
public:
    WindowView(const LineInstance& base, int first_block, int last_block, int original_count) {
        const auto& g = base.graph();
        const int last = base.block_count() - 1;
        std::vector<Vertex> inside;
        for (int b = first_block; b <= last_block; ++b)
            inside.insert(inside.end(), base.block(b).begin(), base.block(b).end());
        std::sort(inside.begin(), inside.end(),
                  [&](Vertex x, Vertex y) { return x % original_count < y % original_count; });
        if (inside.size() > 64)
            throw InputError("separator window holds " + std::to_string(inside.size()) +
                             " vertices; at most 64 supported, use fewer window blocks");
        size_ = static_cast<int>(inside.size());
        std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int i = 0; i < size_; ++i) {
            local[static_cast<std::size_t>(inside[static_cast<std::size_t>(i)])] = i;
            original_.push_back(inside[static_cast<std::size_t>(i)] % original_count);
        }
        adj_.assign(static_cast<std::size_t>(size_), 0);
        for (int i = 0; i < size_; ++i) {
            Vertex v = inside[static_cast<std::size_t>(i)];
            int b = base.block_of(v);
            if (b == 0) left_mask_ |= bit(i);
            if (b == last) right_mask_ |= bit(i);
            for (Vertex w : g.neighbors(v)) {
                int j = local[static_cast<std::size_t>(w)];
                if (j >= 0) adj_[static_cast<std::size_t>(i)] |= bit(j);
            }
        }
        std::vector<Vertex> outside;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (local[static_cast<std::size_t>(v)] < 0) outside.push_back(v);
        for (const auto& comp : components(g, VertexSet(std::move(outside)))) {
            Super s;
            for (Vertex v : comp) {
                s.left = s.left || base.block_of(v) == 0;
                s.right = s.right || base.block_of(v) == last;
                for (Vertex w : g.neighbors(v)) {
                    int j = local[static_cast<std::size_t>(w)];
                    if (j >= 0) s.touches |= bit(j);
                }
            }
            supers_.push_back(s);
        }
    }

    int size() const { return size_; }
    Mask adjacency(int i) const { return adj_[static_cast<std::size_t>(i)]; }
    Vertex original(int i) const { return original_[static_cast<std::size_t>(i)]; }

    bool divides(Mask removed) const {
        const Mask all = size_ == 64 ? ~Mask{0} : bit(size_) - 1;
        Mask unvisited = all & ~removed;
        std::vector<char> super_seen(supers_.size(), 0);
        int touching = 0;
        int left_only = 0;
        int right_only = 0;
        auto account = [&](bool left, bool right) {
            if (left || right) ++touching;
            if (left && !right) ++left_only;
            if (right && !left) ++right_only;
        };
        auto grow = [&](Mask comp, bool& left, bool& right) {
            Mask frontier = comp;
            while (true) {
                Mask next = 0;
                for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
                for (std::size_t s = 0; s < supers_.size(); ++s) {
                    if (super_seen[s] || (supers_[s].touches & (comp | next)) == 0) continue;
                    super_seen[s] = 1;
                    left = left || supers_[s].left;
                    right = right || supers_[s].right;
                    next |= supers_[s].touches;
                }
                next &= unvisited & ~comp;
                if (next == 0) break;
                comp |= next;
                frontier = next;
            }
            unvisited &= ~comp;
            left = left || (comp & left_mask_) != 0;
            right = right || (comp & right_mask_) != 0;
        };
        for (std::size_t s = 0; s < supers_.size(); ++s) {
            if (super_seen[s]) continue;
            super_seen[s] = 1;
            bool left = supers_[s].left;
            bool right = supers_[s].right;
            grow(supers_[s].touches & unvisited, left, right);
            account(left, right);
        }
        while (unvisited != 0) {
            bool left = false;
            bool right = false;
            grow(bit(std::countr_zero(unvisited)), left, right);
            account(left, right);
        }
        return touching == 2 && left_only == 1 && right_only == 1;
    }

private:
    struct Super {
        Mask touches = 0;
        bool left = false;
        bool right = false;
    };

    int size_ = 0;
    std::vector<Mask> adj_;
    std::vector<Vertex> original_;
    std::vector<Super> supers_;
    Mask left_mask_ = 0;
    Mask right_mask_ = 0;
};

// Every connected vertex subset of the window with at most `cap` members,
// each exactly once (extension-set enumeration rooted at the lowest member).
template <class Visit>
void connected_subsets(const WindowView& w, int cap, Visit&& visit) {
    auto above = [](int root) { return root == 63 ? Mask{0} : ~(bit(root + 1) - 1); };
    auto extend = [&](auto&& self, Mask sub, Mask nsub, Mask ext, int root, int size) -> void {
        visit(sub);
        if (size == cap) return;
        while (ext != 0) {
            int x = std::countr_zero(ext);
            ext &= ext - 1;
            Mask adj = w.adjacency(x);
            Mask excl = adj & ~sub & ~nsub & above(root);
            self(self, sub | bit(x), nsub | adj, ext | excl, root, size + 1);
        }
    };
    for (int root = 0; root < w.size(); ++root) {
        Mask adj = w.adjacency(root);
        extend(extend, bit(root), adj, adj & above(root), root, 1);
    }
}

}  // namespace

std::vector<VertexSet> find_separators(const LineInstance& inst, int window_blocks, int size_cap) {
    if (window_blocks < 1) throw InputError("window must span at least one block");
    if (size_cap < 1) throw InputError("size cap must be at least 1");
    const int m = inst.block_count();
    const int n = inst.graph().vertex_count();

    const bool cycle = inst.mode() == LineMode::Cycle;
    const LineInstance base = cycle ? unroll_cycle(inst) : inst;
    const int width = std::min(window_blocks, m);
    const int windows = cycle ? m : m - width + 1;

    std::vector<VertexSet> out;
    std::set<std::vector<Vertex>> seen;
    for (int w = 0; w < windows; ++w) {
        const int first = cycle ? m + w : w;
        WindowView view(base, first, first + width - 1, n);
        std::vector<std::vector<Vertex>> found;
        connected_subsets(view, size_cap, [&](Mask sub) {
            if (!view.divides(sub)) return;
            std::vector<Vertex> members;
            for (Mask s = sub; s != 0; s &= s - 1) members.push_back(view.original(std::countr_zero(s)));
            std::sort(members.begin(), members.end());
            found.push_back(std::move(members));
        });
        std::sort(found.begin(), found.end());
        for (auto& f : found)
            if (seen.insert(f).second) out.emplace_back(std::move(f));
    }
    return out;
}

namespace {

std::vector<std::pair<int, int>> compute_t_edges(const FiniteGraph& g, const std::vector<VertexSet>& members) {
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Vertex v : members[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (owner[static_cast<std::size_t>(v)] < 0) rest.push_back(v);
    std::set<std::pair<int, int>> edges;
    auto link = [&](const std::set<int>& touching) {
        for (auto i = touching.begin(); i != touching.end(); ++i)
            for (auto j = std::next(i); j != touching.end(); ++j) edges.emplace(*i, *j);
    };
    for (const auto& comp : components(g, VertexSet(std::move(rest)))) {
        std::set<int> touching;
        for (Vertex v : comp)
            for (Vertex w : g.neighbors(v))
                if (int o = owner[static_cast<std::size_t>(w)]; o >= 0) touching.insert(o);
        link(touching);
    }
    // Members joined by a direct edge (impossible at distance >= 4, kept for
    // families built by hand).
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int o = owner[static_cast<std::size_t>(v)];
        if (o < 0) continue;
        for (Vertex w : g.neighbors(v)) {
            int p = owner[static_cast<std::size_t>(w)];
            if (p >= 0 && p != o) edges.emplace(std::min(o, p), std::max(o, p));
        }
    }
    return {edges.begin(), edges.end()};
}

}  // namespace

SeparatorFamily build_psi(const LineInstance& inst, const std::vector<VertexSet>& candidates) {
    if (candidates.empty() && inst.block_count() > 1)
        throw InputError("no separators found; increase window/cap");
    const auto& g = inst.graph();
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    SeparatorFamily psi;
    for (const auto& cand : candidates) {
        bool clear = std::none_of(cand.begin(), cand.end(),
                                  [&](Vertex v) { return blocked[static_cast<std::size_t>(v)] != 0; });
        if (!clear) continue;
        psi.members.push_back(cand);
        auto dist = distances_from(g, cand);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(v)] && *dist[static_cast<std::size_t>(v)] <= 3)
                blocked[static_cast<std::size_t>(v)] = 1;
    }
    psi.t_edges = compute_t_edges(g, psi.members);
    return psi;
}

FamilyCheck check_family(const LineInstance& inst, const SeparatorFamily& psi) {
    FamilyCheck check;
    for (const auto& s : psi.members) check.members_divide = check.members_divide && divides_into_two(inst, s);
    for (std::size_t i = 0; i < psi.members.size(); ++i)
        for (std::size_t j = i + 1; j < psi.members.size(); ++j) {
            auto d = set_distance(inst.graph(), psi.members[i], psi.members[j]);
            if (!d) continue;
            if (check.min_pairwise_distance < 0 || *d < check.min_pairwise_distance) check.min_pairwise_distance = *d;
        }
    check.distance_ok = check.min_pairwise_distance < 0 || check.min_pairwise_distance >= 4;

    const auto deg = psi.t_degrees();
    const auto count = psi.members.size();
    if (inst.mode() == LineMode::Cycle) {
        check.t_shape_ok = count >= 3 && psi.t_edges.size() == count &&
                           std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    } else if (count >= 2) {
        auto ends = std::count(deg.begin(), deg.end(), 1);
        auto middles = std::count(deg.begin(), deg.end(), 2);
        check.t_shape_ok = ends == 2 && static_cast<std::size_t>(ends + middles) == count &&
                           psi.t_edges.size() == count - 1;
    } else {
        check.t_shape_ok = psi.t_edges.empty();
    }
    return check;
}

ComplementReport check_complement_components(const LineInstance& inst, const SeparatorFamily& psi) {
    ComplementReport report;
    const int m = inst.block_count();
    const bool cycle = inst.mode() == LineMode::Cycle;

    std::vector<int> starts;
    for (const auto& s : psi.members) starts.push_back(circular_start_block(inst, s));
    std::sort(starts.begin(), starts.end());
    if (starts.size() < 2) {
        report.largest_gap = m;
    } else {
        for (std::size_t i = 0; i + 1 < starts.size(); ++i)
            report.largest_gap = std::max(report.largest_gap, starts[i + 1] - starts[i]);
        if (cycle) report.largest_gap = std::max(report.largest_gap, starts.front() + m - starts.back());
    }
    report.degenerate = cycle ? psi.members.size() < 3 : psi.members.empty();

    auto rest = set_difference(VertexSet::range(inst.graph().vertex_count()), psi.united());
    for (const auto& comp : components(inst.graph(), rest)) {
        std::set<int> blocks;
        for (Vertex v : comp) blocks.insert(inst.block_of(v));
        if (!cycle && (blocks.count(0) || blocks.count(m - 1))) continue;
        ++report.component_count;
        report.max_component_size = std::max(report.max_component_size, comp.size());
        report.max_component_span = std::max(report.max_component_span, static_cast<int>(blocks.size()));
    }
    report.ok = !report.degenerate && report.max_component_span < report.largest_gap;
    return report;
}

namespace {

Coloring color_exactly(const FiniteGraph& g, const VertexSet& part, int palette, const Budget& budget,
                       const char* what) {
    auto sub = induced_subgraph(g, part);
    auto r = find_coloring(sub, palette, {}, budget);
    if (r.status == SearchStatus::Undecided)
        throw BudgetExhausted(std::string("budget exhausted while coloring ") + what);
    if (r.status == SearchStatus::Infeasible)
        throw InputError(std::string("a component of ") + what + " is not " + std::to_string(palette) +
                         "-colorable; the supplied chi is wrong");
    return *r.coloring;
}

}  // namespace

TwoEndedColoringResult color_two_ended(const LineInstance& inst, const TwoEndedParams& params) {
    const auto& g = inst.graph();
    const int n = g.vertex_count();
    TwoEndedColoringResult result;

    result.chi = inst.chi();
    if (result.chi == 0) {
        auto chi = chromatic_number(g, std::nullopt, params.budget);
        if (!chi.exact()) throw BudgetExhausted("budget exhausted computing chi of the instance");
        result.chi = chi.value();
    }
    const int chi = result.chi;

    const int window = params.window_blocks.value_or(2);
    const int cap = params.size_cap.value_or(2 * inst.max_block_size());
    result.psi = build_psi(inst, find_separators(inst, window, cap));

    // B*: closed neighborhoods of the separators, colored with chi colors.
    std::vector<int> star_of(static_cast<std::size_t>(n), -1);
    for (std::size_t j = 0; j < result.psi.members.size(); ++j)
        for (Vertex v : closed_neighborhood(g, result.psi.members[j])) {
            auto& s = star_of[static_cast<std::size_t>(v)];
            if (s >= 0 && s != static_cast<int>(j)) throw InvariantViolation("neighborhoods of two separators overlap");
            s = static_cast<int>(j);
        }
    std::vector<Vertex> star_members;
    for (Vertex v = 0; v < n; ++v)
        if (star_of[static_cast<std::size_t>(v)] >= 0) star_members.push_back(v);
    result.b_star = VertexSet(std::move(star_members));

    std::vector<int> first(static_cast<std::size_t>(n), 0);
    const auto star_parts = components(g, result.b_star);
    result.b_star_components = star_parts.size();
    for (const auto& part : star_parts) {
        const int owner = star_of[static_cast<std::size_t>(part[0])];
        if (!std::all_of(part.begin(), part.end(),
                         [&](Vertex v) { return star_of[static_cast<std::size_t>(v)] == owner; }))
            throw InvariantViolation("a component of B* spans two separator neighborhoods");
        auto c = color_exactly(g, part, chi, params.budget, "B*");
        for (std::size_t i = 0; i < part.size(); ++i) first[static_cast<std::size_t>(part[i])] = c.colors[i];
    }

    // B: drop the last color class; it joins the rest.
    std::vector<Vertex> kept;
    for (Vertex v : result.b_star)
        if (first[static_cast<std::size_t>(v)] != chi) kept.push_back(v);
    result.b = VertexSet(std::move(kept));

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (Vertex v : result.b) colors[static_cast<std::size_t>(v)] = first[static_cast<std::size_t>(v)];

    const auto rest_parts = components(g, set_difference(VertexSet::range(n), result.b));
    result.complement_components = rest_parts.size();
    for (const auto& part : rest_parts) {
        result.largest_complement_component = std::max(result.largest_complement_component, part.size());
        auto c = color_exactly(g, part, chi, params.budget, "the complement of B");
        for (std::size_t i = 0; i < part.size(); ++i) colors[static_cast<std::size_t>(part[i])] = chi - 1 + c.colors[i];
    }

    result.coloring = Coloring{std::move(colors), 2 * chi - 1};
    if (!is_proper(g, result.coloring)) throw InvariantViolation("two-ended coloring is not proper");
    result.colors_used = result.coloring.colors_used();
    return result;
}

}  // namespace shadowchi
