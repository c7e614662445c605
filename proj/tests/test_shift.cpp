#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"
#include "shadowchi/grid.hpp"
#include "shadowchi/shift.hpp"

using namespace shadowchi;

namespace {

// Both orbit colorings spread over the untwisted two-orbit graph.
bool adjacent_orbits_proper(int k, const OrbitColoring& lo, const OrbitColoring& hi) {
    TwoOrbitGraph g(k, false);
    Coloring c{std::vector<int>(static_cast<std::size_t>(2 * k * k)), k + 1};
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            c.colors[static_cast<std::size_t>(orbit_vertex(k, 0, a, b))] = lo[static_cast<std::size_t>(a)];
            c.colors[static_cast<std::size_t>(orbit_vertex(k, 1, a, b))] = hi[static_cast<std::size_t>(a)];
        }
    return is_proper(g.graph(), c);
}

std::vector<OrbitColoring> injections(int k) {
    std::vector<OrbitColoring> out;
    std::vector<int> colors(static_cast<std::size_t>(k) + 1);
    std::iota(colors.begin(), colors.end(), 1);
    std::set<OrbitColoring> seen;
    do {
        OrbitColoring c(colors.begin(), colors.begin() + k);
        if (seen.insert(c).second) out.push_back(c);
    } while (std::next_permutation(colors.begin(), colors.end()));
    return out;
}

void check_schedule(int k, const OrbitColoring& src, const OrbitColoring& tgt) {
    auto steps = transfer_schedule(k, src, tgt);
    CHECK(static_cast<int>(steps.size()) <= 3 * k);
    if (src == tgt) CHECK(steps.empty());
    else CHECK(steps.back() == tgt);
    OrbitColoring prev = src;
    for (const auto& s : steps) {
        CHECK(transfer_step_failure(k, prev, s).empty());
        CHECK(adjacent_orbits_proper(k, prev, s));
        prev = s;
    }
}

AnchoredTower single_gap(int k, int gap, int a0, int b0) {
    AnchoredTower t;
    t.k = k;
    t.extent = gap + 1;
    t.anchors = {{0, 0, 0}, {gap, a0, b0}};
    return t;
}

}  // namespace

TEST_CASE("greedy_maximal_discrete") {
    std::vector<std::int64_t> pos(21);
    std::iota(pos.begin(), pos.end(), 0);
    CHECK(greedy_maximal_discrete(pos, 9) == std::vector<std::int64_t>{0, 10, 20});
    CHECK(greedy_maximal_discrete({0}, 4) == std::vector<std::int64_t>{0});
    CHECK_THROWS_AS(greedy_maximal_discrete(pos, 0), InputError);
    // maximal: every dropped position is within r of a kept one
    std::vector<std::int64_t> shuffled{13, 2, 40, 7, 25, 31, 19, 3, 36};
    auto kept = greedy_maximal_discrete(shuffled, 9);
    for (auto p : shuffled) {
        bool near = std::any_of(kept.begin(), kept.end(), [&](auto q) { return std::llabs(p - q) <= 9; });
        CHECK(near);
    }
    for (auto p : kept)
        for (auto q : kept)
            if (p != q) CHECK(std::llabs(p - q) > 9);
}

TEST_CASE("anchor colorings") {
    CHECK(anchor_coloring(3) == OrbitColoring{1, 2, 3});
    CHECK(anchor_coloring(3, 1) == OrbitColoring{3, 1, 2});
    CHECK(free_color(3, {1, 2, 3}) == 4);
    CHECK(free_color(3, {4, 2, 3}) == 1);
    CHECK_THROWS_AS(anchor_coloring(2), InputError);
}

TEST_CASE("transfer_schedule examples") {
    CHECK(transfer_schedule(3, {1, 2, 3}, {1, 2, 3}).empty());
    auto shifted = anchor_coloring(3, 1);
    auto steps = transfer_schedule(3, anchor_coloring(3), shifted);
    CHECK(steps.size() <= 9);
    check_schedule(3, anchor_coloring(3), shifted);
    CHECK_THROWS_AS(transfer_schedule(3, {1, 1, 2}, {1, 2, 3}), InputError);
    CHECK_THROWS_AS(transfer_schedule(3, {1, 2, 3}, {1, 2, 5}), InputError);
}

TEST_CASE("three-step swap through the spare color") {
    // k = 3, a0 = 1: send color 3 to the spare, color 1 to 3, the spare to 1
    const int k = 3;
    OrbitColoring e0{1, 2, 3};
    OrbitColoring e1{1, 2, 4};
    OrbitColoring e2{3, 2, 4};
    OrbitColoring e3{3, 2, 1};
    for (auto [p, n] : {std::pair{e0, e1}, std::pair{e1, e2}, std::pair{e2, e3}}) {
        CHECK(transfer_step_failure(k, p, n).empty());
        CHECK(adjacent_orbits_proper(k, p, n));
    }
    CHECK(free_color(k, e3) == 4);
    // the general schedule reaches the same target
    check_schedule(k, e0, e3);
    CHECK(transfer_step_failure(k, e0, e2) == "more than one column recolored");
    CHECK(transfer_step_failure(k, e0, {1, 3, 3}) == "recolored column did not take the free color");
}

TEST_CASE("transfer schedules for every pair of injections, k = 3 and 4") {
    for (int k : {3, 4}) {
        auto all = injections(k);
        CHECK(all.size() == static_cast<std::size_t>(k == 3 ? 24 : 120));
        std::size_t longest = 0;
        for (const auto& s : all)
            for (const auto& t : all) {
                auto steps = transfer_schedule(k, s, t);
                longest = std::max(longest, steps.size());
                REQUIRE(static_cast<int>(steps.size()) <= 3 * k);
                OrbitColoring prev = s;
                for (const auto& x : steps) {
                    REQUIRE(transfer_step_failure(k, prev, x).empty());
                    prev = x;
                }
                REQUIRE(prev == t);
            }
        CHECK(static_cast<int>(longest) <= k + k / 2);
    }
}

TEST_CASE("towers: single gap") {
    auto z = single_gap(3, 10, 0, 0);
    auto c = color_tower(z);
    CHECK(is_proper(tower_graph(z), c));
    CHECK(c.colors_used() == 3);
    auto s = single_gap(3, 10, 1, 0);
    auto d = color_tower(s);
    CHECK(is_proper(tower_graph(s), d));
    CHECK(d.colors_used() == 4);
    CHECK(d.palette == 4);
}

TEST_CASE("towers: cycle") {
    AnchoredTower t;
    t.k = 3;
    t.extent = 20;
    t.mode = LineMode::Cycle;
    t.anchors = {{0, 1, 0}, {10, 2, 0}};
    auto c = color_tower(t);
    CHECK(is_proper(tower_graph(t), c));
    CHECK(c.colors_used() <= 4);
}

TEST_CASE("towers: preconditions") {
    CHECK_THROWS_AS(color_tower(single_gap(3, 9, 1, 0)), InputError);
    AnchoredTower t;
    t.k = 3;
    t.extent = 19;
    t.mode = LineMode::Cycle;
    t.anchors = {{0, 0, 0}, {10, 0, 0}};  // wrap gap 9
    CHECK_THROWS_AS(color_tower(t), InputError);
    AnchoredTower none;
    none.extent = 5;
    CHECK_THROWS_AS(color_tower(none), InputError);
}

TEST_CASE("tower orbit colorings are injective and change one column at a time") {
    for (int k : {3, 4, 5})
        for (auto mode : {LineMode::Segment, LineMode::Cycle})
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                auto t = random_tower(k, seed, mode);
                auto orbits = color_tower_orbits(t);
                for (std::size_t i = 0; i < orbits.size(); ++i) {
                    std::set<int> distinct(orbits[i].begin(), orbits[i].end());
                    CHECK(distinct.size() == static_cast<std::size_t>(k));
                    if (i + 1 < orbits.size() || mode == LineMode::Cycle) {
                        const auto& next = orbits[(i + 1) % orbits.size()];
                        CHECK(transfer_step_failure(k, orbits[i], next).empty());
                    }
                }
            }
}

TEST_CASE("random towers are deterministic in the seed") {
    auto a = random_tower(4, 99, LineMode::Segment);
    auto b = random_tower(4, 99, LineMode::Segment);
    CHECK(a.extent == b.extent);
    CHECK(a.anchors.size() == b.anchors.size());
    CHECK(color_tower(a) == color_tower(b));
    validate_tower(a);
}

TEST_CASE("witness_k_insufficient examples") {
    CHECK(witness_k_insufficient(single_gap(3, 10, 1, 0)));
    CHECK_FALSE(witness_k_insufficient(single_gap(3, 10, 0, 0)));
    CHECK_FALSE(witness_k_insufficient(single_gap(3, 10, 0, 1)));
    AnchoredTower three = single_gap(3, 10, 1, 0);
    three.extent = 21;
    three.anchors.push_back({20, 1, 0});
    CHECK_THROWS_AS(witness_k_insufficient(three), InputError);
}
