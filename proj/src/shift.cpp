#include "shadowchi/shift.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"

namespace shadowchi {

std::vector<std::int64_t> greedy_maximal_discrete(const std::vector<std::int64_t>& positions, std::int64_t r) {
    if (r < 1) throw InputError("discreteness radius must be at least 1");
    std::vector<std::int64_t> kept;
    for (auto p : positions) {
        bool far = std::all_of(kept.begin(), kept.end(), [&](std::int64_t q) { return std::llabs(p - q) > r; });
        if (far) kept.push_back(p);
    }
    return kept;
}

OrbitColoring anchor_coloring(int k) { return anchor_coloring(k, 0); }

OrbitColoring anchor_coloring(int k, int a0) {
    if (k < 3) throw InputError("k must be at least 3");
    OrbitColoring c(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) c[static_cast<std::size_t>(a)] = ((a - a0) % k + k) % k + 1;
    return c;
}

namespace {

void require_injective(int k, const OrbitColoring& c, const char* which) {
    if (static_cast<int>(c.size()) != k)
        throw InputError(std::string(which) + " coloring has " + std::to_string(c.size()) + " columns, expected " +
                         std::to_string(k));
    std::vector<char> seen(static_cast<std::size_t>(k) + 2, 0);
    for (int col : c) {
        if (col < 1 || col > k + 1) throw InputError(std::string(which) + " coloring uses a color outside 1..k+1");
        if (seen[static_cast<std::size_t>(col)]++) throw InputError(std::string(which) + " coloring is not injective");
    }
}

}  // namespace

int free_color(int k, const OrbitColoring& c) {
    std::vector<char> seen(static_cast<std::size_t>(k) + 2, 0);
    for (int col : c)
        if (col >= 1 && col <= k + 1) seen[static_cast<std::size_t>(col)] = 1;
    for (int col = k + 1; col >= 1; --col)
        if (!seen[static_cast<std::size_t>(col)]) return col;
    throw InputError("orbit coloring leaves no color free");
}

std::vector<OrbitColoring> transfer_schedule(int k, const OrbitColoring& source, const OrbitColoring& target) {
    require_injective(k, source, "source");
    require_injective(k, target, "target");
    std::vector<OrbitColoring> steps;
    OrbitColoring current = source;
    while (current != target) {
        const int hole = free_color(k, current);
        // Prefer the column that wants the free color; otherwise the hole is
        // also free in the target and we break a cycle of mismatches.
        auto wants = std::find(target.begin(), target.end(), hole);
        std::size_t col;
        if (wants != target.end()) {
            col = static_cast<std::size_t>(wants - target.begin());
        } else {
            col = 0;
            while (current[col] == target[col]) ++col;
        }
        current[col] = hole;
        steps.push_back(current);
        if (static_cast<int>(steps.size()) > 3 * k) throw InvariantViolation("transfer schedule exceeded 3k steps");
    }
    return steps;
}

std::string transfer_step_failure(int k, const OrbitColoring& prev, const OrbitColoring& next) {
    if (static_cast<int>(prev.size()) != k || static_cast<int>(next.size()) != k) return "wrong column count";
    int changed = 0;
    std::size_t where = 0;
    for (std::size_t a = 0; a < prev.size(); ++a)
        if (prev[a] != next[a]) {
            ++changed;
            where = a;
        }
    if (changed == 0) return {};
    if (changed > 1) return "more than one column recolored";
    if (next[where] != free_color(k, prev)) return "recolored column did not take the free color";
    return {};
}

void validate_tower(const AnchoredTower& tower) {
    if (tower.k < 3) throw InputError("k must be at least 3");
    if (tower.extent < 1) throw InputError("tower needs at least one orbit");
    if (tower.mode == LineMode::Cycle && tower.extent < 3) throw InputError("cycle towers need at least 3 orbits");
    if (tower.anchors.empty()) throw InputError("tower needs at least one anchor");
    const std::int64_t min_gap = 3 * static_cast<std::int64_t>(tower.k) + 1;
    for (std::size_t j = 0; j < tower.anchors.size(); ++j) {
        const auto p = tower.anchors[j].position;
        if (p < 0 || p >= tower.extent) throw InputError("anchor position " + std::to_string(p) + " outside the tower");
        if (j > 0) {
            const auto gap = p - tower.anchors[j - 1].position;
            if (gap <= 0) throw InputError("anchor positions must increase");
            if (gap < min_gap)
                throw InputError("anchor gap " + std::to_string(gap) + " is not larger than 3k = " +
                                 std::to_string(3 * tower.k));
        }
    }
    if (tower.mode == LineMode::Cycle) {
        const auto wrap = tower.anchors.front().position + tower.extent - tower.anchors.back().position;
        if (wrap < min_gap)
            throw InputError("wrap-around anchor gap " + std::to_string(wrap) + " is not larger than 3k = " +
                             std::to_string(3 * tower.k));
    }
}

std::vector<OrbitColoring> color_tower_orbits(const AnchoredTower& tower) {
    validate_tower(tower);
    const int k = tower.k;
    const auto extent = static_cast<std::size_t>(tower.extent);
    const auto count = tower.anchors.size();

    std::vector<OrbitColoring> at_anchor;
    int acc = 0;
    for (const auto& anchor : tower.anchors) {
        acc = ((acc + anchor.a0) % k + k) % k;
        at_anchor.push_back(anchor_coloring(k, acc));
    }

    std::vector<OrbitColoring> orbits(extent);
    auto fill_gap = [&](std::size_t j, std::int64_t from, std::int64_t to, const OrbitColoring& target) {
        auto steps = transfer_schedule(k, at_anchor[j], target);
        for (auto p = from + 1; p < to; ++p) {
            auto i = static_cast<std::size_t>(p - from - 1);
            orbits[static_cast<std::size_t>(p) % extent] = i < steps.size() ? steps[i] : target;
        }
    };
    for (std::size_t j = 0; j < count; ++j)
        orbits[static_cast<std::size_t>(tower.anchors[j].position)] = at_anchor[j];
    for (std::size_t j = 0; j + 1 < count; ++j)
        fill_gap(j, tower.anchors[j].position, tower.anchors[j + 1].position, at_anchor[j + 1]);

    const auto first = tower.anchors.front().position;
    const auto last = tower.anchors.back().position;
    if (tower.mode == LineMode::Cycle) {
        fill_gap(count - 1, last, first + tower.extent, at_anchor.front());
    } else {
        for (std::int64_t p = 0; p < first; ++p) orbits[static_cast<std::size_t>(p)] = at_anchor.front();
        for (auto p = last + 1; p < tower.extent; ++p) orbits[static_cast<std::size_t>(p)] = at_anchor.back();
    }
    return orbits;
}

FiniteGraph tower_graph(const AnchoredTower& tower) {
    auto spec = MarkedGroupSpec::delta(tower.k);
    return tower.mode == LineMode::Cycle ? cayley_quotient(spec, tower.extent)
                                         : cayley_window(spec, 0, tower.extent - 1);
}

Coloring color_tower(const AnchoredTower& tower) {
    const auto orbits = color_tower_orbits(tower);
    const int k = tower.k;
    Coloring c{std::vector<int>(static_cast<std::size_t>(tower.extent) * static_cast<std::size_t>(k * k)), k + 1};
    for (int level = 0; level < tower.extent; ++level)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                c.colors[static_cast<std::size_t>(orbit_vertex(k, level, a, b))] =
                    orbits[static_cast<std::size_t>(level)][static_cast<std::size_t>(a)];
    if (!is_proper(tower_graph(tower), c)) throw InvariantViolation("tower coloring is not proper");
    return c;
}

AnchoredTower random_tower(int k, std::uint64_t seed, LineMode mode, bool zero_offsets) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    AnchoredTower t;
    t.k = k;
    t.mode = mode;
    if (mode == LineMode::Segment) {
        t.extent = uniform(3 * k + 2, 8 * k);
        std::vector<std::int64_t> candidates;
        for (int p = 0; p < t.extent; ++p)
            if (uniform(0, 1) == 1) candidates.push_back(p);
        if (candidates.empty()) candidates.push_back(uniform(0, t.extent - 1));
        std::shuffle(candidates.begin(), candidates.end(), rng);
        auto kept = greedy_maximal_discrete(candidates, 3 * k);
        std::sort(kept.begin(), kept.end());
        for (auto p : kept) t.anchors.push_back({p, 0, 0});
    } else {
        const int count = uniform(1, 4);
        std::int64_t position = 0;
        for (int j = 0; j < count; ++j) {
            t.anchors.push_back({position, 0, 0});
            position += uniform(3 * k + 1, 3 * k + 8);
        }
        t.extent = static_cast<int>(position);
    }
    if (!zero_offsets)
        for (auto& a : t.anchors) {
            a.a0 = uniform(0, k - 1);
            a.b0 = uniform(0, k - 1);
        }
    return t;
}

bool witness_k_insufficient(const AnchoredTower& tower, const Budget& budget) {
    if (tower.mode != LineMode::Segment || tower.anchors.size() != 2 || tower.anchors[0].position != 0 ||
        tower.anchors[1].position != tower.extent - 1)
        throw InputError("witness needs a single-gap segment tower with anchors at both ends");
    validate_tower(tower);
    const int k = tower.k;
    const auto orbits = color_tower_orbits(tower);
    std::vector<Pin> pins;
    for (int level : {0, tower.extent - 1})
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                pins.push_back({orbit_vertex(k, level, a, b),
                                orbits[static_cast<std::size_t>(level)][static_cast<std::size_t>(a)]});
    auto r = find_coloring(tower_graph(tower), k, pins, budget);
    if (r.status == SearchStatus::Undecided) throw BudgetExhausted("budget exhausted in the pinned k-coloring search");
    return r.status == SearchStatus::Infeasible;
}

}  // namespace shadowchi
