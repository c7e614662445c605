#include "shadowchi/grid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"

namespace shadowchi {

GridGraphH::GridGraphH(int k) : k_(k), graph_(grid_graph(k)) {}

std::string to_string(IndependentSetClass::Kind kind) {
    switch (kind) {
        case IndependentSetClass::Kind::Singleton: return "singleton";
        case IndependentSetClass::Kind::Horizontal: return "horizontal";
        case IndependentSetClass::Kind::Vertical: return "vertical";
        case IndependentSetClass::Kind::NotIndependent: return "not-independent";
    }
    return "?";
}

std::string to_string(Orientation o) { return o == Orientation::Horizontal ? "horizontal" : "vertical"; }

IndependentSetClass classify_independent_set(const GridGraphH& h, const VertexSet& a) {
    using Kind = IndependentSetClass::Kind;
    if (a.empty()) throw InputError("cannot classify the empty set");
    if (!is_independent(h.graph(), a)) return {Kind::NotIndependent, -1};
    if (a.size() == 1) return {Kind::Singleton, -1};
    const int col = h.column_of(a[0]);
    const int row = h.row_of(a[0]);
    bool same_col = std::all_of(a.begin(), a.end(), [&](Vertex v) { return h.column_of(v) == col; });
    bool same_row = std::all_of(a.begin(), a.end(), [&](Vertex v) { return h.row_of(v) == row; });
    if (same_col) return {Kind::Vertical, col};
    if (same_row) return {Kind::Horizontal, row};
    throw InvariantViolation("independent set of H lies in neither a row nor a column");
}

OrientationPredicates orientation_predicates(int k, std::span<const int> colors) {
    struct ClassShape {
        int size = 0;
        int a = -1;
        int b = -1;
        bool same_a = true;
        bool same_b = true;
    };
    std::map<int, ClassShape> shapes;
    for (int v = 0; v < k * k; ++v) {
        const int a = v / k;
        const int b = v % k;
        auto& s = shapes[colors[static_cast<std::size_t>(v)]];
        if (s.size == 0) {
            s.a = a;
            s.b = b;
        }
        s.same_a = s.same_a && s.a == a;
        s.same_b = s.same_b && s.b == b;
        ++s.size;
    }
    std::vector<char> row_hit(static_cast<std::size_t>(k), 0);
    std::vector<char> col_hit(static_cast<std::size_t>(k), 0);
    for (const auto& [color, s] : shapes) {
        if (s.size < 2) continue;
        if (s.same_b) row_hit[static_cast<std::size_t>(s.b)] = 1;
        if (s.same_a) col_hit[static_cast<std::size_t>(s.a)] = 1;
    }
    auto all = [](const std::vector<char>& v) { return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; }); };
    return {all(row_hit), all(col_hit)};
}

Orientation orientation(const GridGraphH& h, const Coloring& c) {
    if (!is_proper(h.graph(), c)) throw InputError("coloring is not proper on H");
    if (c.colors_used() > 2 * h.k() - 2) throw InputError("orientation is only defined for at most 2k-2 colors");
    auto p = orientation_predicates(h.k(), c.colors);
    if (p.horizontal == p.vertical)
        throw InvariantViolation(p.horizontal ? "coloring is both horizontal and vertical"
                                              : "coloring is neither horizontal nor vertical");
    return p.horizontal ? Orientation::Horizontal : Orientation::Vertical;
}

TwoOrbitGraph::TwoOrbitGraph(int k, bool twisted)
    : k_(k), twisted_(twisted), graph_(cayley_window(MarkedGroupSpec(k, twisted), 0, 1)) {}

std::optional<int> projection_axis(int k, std::span<const int> colors) {
    auto at = [&](int a, int b) { return colors[static_cast<std::size_t>(a * k + b)]; };
    for (int axis = 0; axis < 2; ++axis) {
        bool ok = true;
        std::vector<int> seen;
        for (int i = 0; i < k && ok; ++i) {
            const int base = axis == 0 ? at(i, 0) : at(0, i);
            for (int j = 0; j < k && ok; ++j) ok = (axis == 0 ? at(i, j) : at(j, i)) == base;
            seen.push_back(base);
        }
        std::sort(seen.begin(), seen.end());
        if (ok && std::adjacent_find(seen.begin(), seen.end()) == seen.end()) return axis;
    }
    return std::nullopt;
}

std::string rigidity_failure(const TwoOrbitGraph& g, std::span<const int> colors) {
    const int k = g.k();
    const auto orbit = static_cast<std::size_t>(k * k);
    if (colors.size() != 2 * orbit) return "coloring does not cover both orbits";
    Coloring c{std::vector<int>(colors.begin(), colors.end()), *std::max_element(colors.begin(), colors.end())};
    if (*std::min_element(colors.begin(), colors.end()) < 1) return "color out of range";
    if (!is_proper(g.graph(), c)) return "coloring is not proper";
    auto lower = colors.subspan(0, orbit);
    auto upper = colors.subspan(orbit, orbit);
    auto axis0 = projection_axis(k, lower);
    auto axis1 = projection_axis(k, upper);
    if (!axis0) return "orbit 0 is not a coordinate projection";
    if (!axis1) return "orbit 1 is not a coordinate projection";
    if (*axis0 != *axis1) return "orbits use different coordinate projections";
    if (!std::equal(lower.begin(), lower.end(), upper.begin())) return "orbit 1 color pattern differs from orbit 0";
    return {};
}

namespace {

using Check = std::function<std::string(std::span<const int>)>;

VerificationReport run_check(VerificationReport report, const FiniteGraph& g, Symmetry symmetry,
                             const VerifyOptions& options, const Check& check) {
    std::atomic<std::uint64_t> index{0};
    std::atomic<std::uint64_t> total{0};
    std::atomic<std::uint64_t> bad{0};
    std::mutex keep;
    const int palette = report.palette;

    EnumerateOptions eo;
    eo.symmetry = symmetry;
    eo.jobs = options.jobs;
    eo.budget = options.budget;
    auto result = enumerate_colorings(
        g, palette,
        [&](std::span<const int> colors) {
            const auto i = index++;
            switch (symmetry) {
                case Symmetry::None: total += 1; break;
                case Symmetry::PinFirst: total += static_cast<std::uint64_t>(palette); break;
                case Symmetry::Canonical: {
                    int used = *std::max_element(colors.begin(), colors.end());
                    total += falling_factorial(palette, used);
                    break;
                }
            }
            auto reason = check(colors);
            if (reason.empty()) return;
            ++bad;
            std::lock_guard lock(keep);
            if (report.violations.size() < options.keep_violations)
                report.violations.push_back({i, std::vector<int>(colors.begin(), colors.end()), std::move(reason)});
        },
        eo);
    report.enumeration = symmetry == Symmetry::None       ? "full"
                         : symmetry == Symmetry::PinFirst ? "pin-first"
                                                          : "canonical";
    report.enumerated = result.count;
    report.total = total;
    report.complete = result.complete;
    report.violation_count = bad;
    return report;
}

void require_k(int k) {
    if (k < 3) throw InputError("k must be at least 3");
}

}  // namespace

VerificationReport verify_dichotomy(int k, const VerifyOptions& options) {
    require_k(k);
    const int palette = options.palette.value_or(2 * k - 2);
    if (palette != 2 * k - 2)
        throw InputError("the dichotomy is stated for exactly 2k-2 = " + std::to_string(2 * k - 2) + " colors");
    GridGraphH h(k);
    VerificationReport report;
    report.check = "dichotomy";
    report.k = k;
    report.palette = palette;
    auto symmetry = options.symmetry.value_or(k == 3 ? Symmetry::None : Symmetry::Canonical);
    return run_check(std::move(report), h.graph(), symmetry, options, [k](std::span<const int> colors) {
        auto p = orientation_predicates(k, colors);
        if (p.horizontal && p.vertical) return std::string("both branches hold");
        if (!p.horizontal && !p.vertical) return std::string("neither branch holds");
        return std::string();
    });
}

VerificationReport verify_invariance(int k, bool twisted, const VerifyOptions& options) {
    require_k(k);
    const int palette = options.palette.value_or(2 * k - 2);
    if (palette < 1 || palette > 2 * k - 2)
        throw InputError("orientation is only defined for at most 2k-2 = " + std::to_string(2 * k - 2) + " colors");
    TwoOrbitGraph g(k, twisted);
    VerificationReport report;
    report.check = "invariance";
    report.k = k;
    report.twisted = twisted;
    report.palette = palette;
    const auto orbit = static_cast<std::size_t>(k * k);
    auto symmetry = options.symmetry.value_or(Symmetry::PinFirst);
    return run_check(std::move(report), g.graph(), symmetry, options,
                     [=](std::span<const int> colors) -> std::string {
                         auto lower = colors.subspan(0, orbit);
                         auto upper = colors.subspan(orbit, orbit);
                         auto p0 = orientation_predicates(k, lower);
                         auto p1 = orientation_predicates(k, upper);
                         if (p0.horizontal == p0.vertical) return "orbit 0 violates the dichotomy";
                         if (p1.horizontal == p1.vertical) return "orbit 1 violates the dichotomy";
                         bool same = p0.horizontal == p1.horizontal;
                         if (!twisted && !same) return "orbit orientations differ";
                         if (twisted && same) return "orbit orientations agree";
                         if (palette == k && (!projection_axis(k, lower) || !projection_axis(k, upper)))
                             return "orbit coloring is not a row or column coloring";
                         return {};
                     });
}

VerificationReport verify_rigidity(int k, const VerifyOptions& options) {
    require_k(k);
    const int palette = options.palette.value_or(k);
    if (palette != k) throw InputError("rigidity is stated for exactly k colors");
    TwoOrbitGraph g(k, false);
    VerificationReport report;
    report.check = "rigidity";
    report.k = k;
    report.palette = palette;
    auto symmetry = options.symmetry.value_or(Symmetry::None);
    return run_check(std::move(report), g.graph(), symmetry, options,
                     [&g](std::span<const int> colors) { return rigidity_failure(g, colors); });
}

}  // namespace shadowchi
