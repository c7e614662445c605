#include <doctest.h>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"
#include "shadowchi/line.hpp"
#include "shadowchi/two_ended.hpp"

using namespace shadowchi;

namespace {

std::vector<VertexSet> singletons(const std::vector<int>& vs) {
    std::vector<VertexSet> out;
    for (int v : vs) out.push_back({v});
    return out;
}

void check_two_ended_result(const LineInstance& inst, const TwoEndedColoringResult& r, int bound) {
    CHECK(is_proper(inst.graph(), r.coloring));
    CHECK(r.colors_used <= bound);
    CHECK(r.coloring.palette == 2 * r.chi - 1);
    // the dropped class is independent
    auto dropped = set_difference(r.b_star, r.b);
    CHECK(is_independent(inst.graph(), dropped));
    // complement colored from the upper colors, away from B
    for (int v = 0; v < inst.graph().vertex_count(); ++v) {
        if (r.b.contains(v)) CHECK(r.coloring.color(v) < r.chi);
        else CHECK(r.coloring.color(v) >= r.chi);
    }
}

}  // namespace

TEST_CASE("find_separators on a path") {
    auto line = path_line(10, LineMode::Segment);
    auto s = find_separators(line, 1, 1);
    CHECK(s == singletons({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK_THROWS_AS(find_separators(line, 0, 1), InputError);
}

TEST_CASE("find_separators on Cay(Delta_3) blocks") {
    auto inst = cayley_line(MarkedGroupSpec::delta(3), 6, LineMode::Segment);
    auto s = find_separators(inst, 1, 9);
    // only whole interior orbits
    REQUIRE(s.size() == 4);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == inst.block(static_cast<int>(i) + 1));
}

TEST_CASE("find_separators on a ladder") {
    auto inst = ladder_line(8, LineMode::Segment);
    auto s = find_separators(inst, 1, 2);
    REQUIRE(s.size() == 6);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == inst.block(static_cast<int>(i) + 1));
}

TEST_CASE("separators all divide, are connected and respect the cap") {
    for (auto inst : {ladder_line(12, LineMode::Cycle), path_line(12, LineMode::Cycle),
                      cayley_line(MarkedGroupSpec::gamma(3), 12, LineMode::Cycle)}) {
        const int cap = 2 * inst.max_block_size();
        auto s = find_separators(inst, 2, cap);
        CHECK_FALSE(s.empty());
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(static_cast<int>(s[i].size()) <= cap);
            CHECK(is_connected(inst.graph(), s[i]));
            CHECK(divides_into_two(inst, s[i]));
            if (i > 0) CHECK(s[i] != s[i - 1]);
        }
    }
}

TEST_CASE("build_psi greedy on a path") {
    auto line = path_line(14, LineMode::Segment);
    auto psi = build_psi(line, find_separators(line, 1, 1));
    CHECK(psi.members == singletons({1, 5, 9}));
    CHECK(psi.t_degrees() == std::vector<int>{1, 2, 1});
    CHECK_THROWS_AS(build_psi(line, {}), InputError);
}

TEST_CASE("build_psi on the 12-orbit Delta_3 cycle") {
    auto inst = cayley_line(MarkedGroupSpec::delta(3), 12, LineMode::Cycle);
    std::vector<VertexSet> orbits(inst.blocks().begin(), inst.blocks().end());
    auto psi = build_psi(inst, orbits);
    REQUIRE(psi.members.size() == 3);
    CHECK(psi.members[0] == inst.block(0));
    CHECK(psi.members[1] == inst.block(4));
    CHECK(psi.members[2] == inst.block(8));
    CHECK(psi.t_edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    auto fc = check_family(inst, psi);
    CHECK(fc.ok());
    CHECK(fc.min_pairwise_distance == 4);
}

TEST_CASE("complement components") {
    auto line = path_line(13, LineMode::Cycle);
    SeparatorFamily psi;
    psi.members = singletons({0, 4, 8});
    psi.t_edges = {{0, 1}, {0, 2}, {1, 2}};
    auto r = check_complement_components(line, psi);
    CHECK(r.ok);
    CHECK(r.max_component_size <= 4);
    CHECK(r.largest_gap == 5);

    auto seg = path_line(13, LineMode::Segment);
    SeparatorFamily every4;
    every4.members = singletons({1, 5, 9});
    every4.t_edges = {{0, 1}, {1, 2}};
    auto s = check_complement_components(seg, every4);
    CHECK(s.ok);
    CHECK(s.max_component_size == 3);

    auto cay = cayley_line(MarkedGroupSpec::delta(3), 12, LineMode::Cycle);
    SeparatorFamily orbits;
    orbits.members = {cay.block(0), cay.block(4), cay.block(8)};
    orbits.t_edges = {{0, 1}, {0, 2}, {1, 2}};
    auto c = check_complement_components(cay, orbits);
    CHECK(c.ok);
    CHECK(c.max_component_span == 3);
    CHECK(c.component_count == 3);

    SeparatorFamily single;
    single.members = {cay.block(0)};
    auto d = check_complement_components(cay, single);
    CHECK(d.degenerate);
    CHECK_FALSE(d.ok);
    CHECK(d.component_count == 1);
}

TEST_CASE("two-ended coloring of the instance suite") {
    struct Case {
        LineInstance inst;
        int bound;
    };
    std::vector<Case> suite{{path_line(12, LineMode::Cycle), 3},
                            {ladder_line(12, LineMode::Cycle), 3},
                            {cayley_line(MarkedGroupSpec::delta(3), 12, LineMode::Cycle), 5},
                            {cayley_line(MarkedGroupSpec::gamma(3), 12, LineMode::Cycle), 5}};
    for (const auto& c : suite) {
        auto r = color_two_ended(c.inst);
        check_two_ended_result(c.inst, r, c.bound);
        auto fc = check_family(c.inst, r.psi);
        CHECK(fc.ok());
        CHECK(fc.min_pairwise_distance >= 4);
        for (int d : r.psi.t_degrees()) CHECK(d == 2);
        auto cc = check_complement_components(c.inst, r.psi);
        CHECK(cc.ok);
        CHECK_FALSE(cc.degenerate);
    }
}

TEST_CASE("two-ended coloring in segment mode") {
    for (auto inst : {path_line(15, LineMode::Segment), ladder_line(15, LineMode::Segment),
                      cayley_line(MarkedGroupSpec::gamma(3), 10, LineMode::Segment)}) {
        auto r = color_two_ended(inst);
        check_two_ended_result(inst, r, 2 * r.chi - 1);
        CHECK(check_family(inst, r.psi).ok());
    }
}

TEST_CASE("two-ended coloring on the twisted odd quotient and k=4") {
    auto odd = cayley_line(MarkedGroupSpec::gamma(3), 13, LineMode::Cycle).with_chi(5);
    TwoEndedParams p;
    p.window_blocks = 1;
    p.size_cap = 9;
    auto r = color_two_ended(odd, p);
    check_two_ended_result(odd, r, 9);

    auto d4 = cayley_line(MarkedGroupSpec::delta(4), 12, LineMode::Cycle);
    TwoEndedParams q;
    q.window_blocks = 1;
    q.size_cap = 16;
    auto r4 = color_two_ended(d4, q);
    check_two_ended_result(d4, r4, 7);
}

TEST_CASE("two-ended coloring is deterministic") {
    auto inst = cayley_line(MarkedGroupSpec::gamma(3), 12, LineMode::Cycle);
    auto a = color_two_ended(inst);
    auto b = color_two_ended(inst);
    CHECK(a.coloring == b.coloring);
    CHECK(a.psi.members == b.psi.members);
}
