#include "doctest.h"

#include <set>

#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/generate.hpp"

using namespace ilmt;

namespace {

std::set<std::pair<int, int>> arc_set(const Tournament& t) {
    auto v = arcs_of(t);
    return {v.begin(), v.end()};
}

std::set<std::pair<int, int>> arc_set(const OrientedGraph& g) {
    auto v = arcs_of(g);
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("sequence literals") {
    GeneratingSequence s = GeneratingSequence::parse("10");
    CHECK(s.bit(1) == 1);
    CHECK(s.bit(2) == 0);
    CHECK(GeneratingSequence::parse("10", 3).to_string() == "101010");
    CHECK_THROWS_AS(GeneratingSequence::parse(""), parse_error);
    CHECK_THROWS_AS(GeneratingSequence::parse("102"), parse_error);
    CHECK(GeneratingSequence::parse("0110").zeros_in_prefix(3) == 1);
    CHECK(GeneratingSequence::parse("0110").zeros_in_prefix(4) == 2);
    CHECK(GeneratingSequence::parse("0110").position_of_zero(2) == 4);
    CHECK(GeneratingSequence::parse("111").position_of_zero(1) == 0);
}

TEST_CASE("one-step on the single arc reproduces the known 4-node iterate") {
    auto [g1, cm] = ilmt_step(single_arc(), 1);
    CHECK(g1.order() == 4);
    CHECK(cm.parent_count == 2);
    CHECK(cm.clone_of(0) == 2);
    std::set<std::pair<int, int>> expect = {{0, 1}, {0, 3}, {2, 1}, {2, 0}, {3, 1}, {2, 3}};
    CHECK(arc_set(g1) == expect);
    // one source (a'), one sink (b), transitive
    auto [sources, sinks] = sources_and_sinks(g1);
    CHECK(sources == std::vector<int>{2});
    CHECK(sinks == std::vector<int>{1});
    CHECK(degree_profile(g1).out_degrees == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("two steps along 10 reproduce the known 8-node iterate") {
    Generated gen = generate(single_arc(), GeneratingSequence::parse("10"), 2);
    CHECK(gen.graph.order() == 8);
    std::set<std::pair<int, int>> expect = {
        {0, 1}, {0, 3}, {2, 1}, {2, 0}, {3, 1}, {2, 3},                    // parent block
        {0, 5}, {4, 1}, {0, 7}, {4, 3}, {2, 5}, {6, 1}, {2, 4}, {6, 0},
        {3, 5}, {7, 1}, {2, 7}, {6, 3},                                    // cross arcs
        {4, 0}, {5, 1}, {6, 2}, {7, 3},                                    // clone -> parent
        {5, 4}, {7, 4}, {5, 6}, {4, 6}, {5, 7}, {7, 6}};                   // reversed clones
    CHECK(arc_set(gen.graph) == expect);
    CHECK(gen.steps.size() == 2);
    CHECK(gen.steps[1].parent_count == 4);
}

TEST_CASE("step structure invariants") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Tournament t = random_tournament(5, seed);
        for (int bit : {0, 1}) {
            auto [g, cm] = ilmt_step(t, bit);
            CHECK(g.order() == 2 * t.order());
            g.validate();
            // parents embed exactly
            std::vector<int> parents;
            for (int v = 0; v < t.order(); ++v) parents.push_back(v);
            CHECK(induced(g, parents) == t);
            // clone block: copy on a 1-step, reversal on a 0-step
            std::vector<int> clones;
            for (int v = 0; v < t.order(); ++v) clones.push_back(cm.clone_of(v));
            Tournament block = induced(g, clones);
            CHECK(block == (bit == 1 ? t : reverse(t)));
            CHECK(is_isomorphic(block, bit == 1 ? t : reverse(t)));
            // clone -> parent arcs
            for (int v = 0; v < t.order(); ++v) CHECK(g.arc(cm.clone_of(v), v));
        }
    }
}

TEST_CASE("single node steps") {
    auto [g, cm] = ilmt_step(single_node(), 0);
    CHECK(g.order() == 2);
    CHECK(g.arc(1, 0));
    auto [g1, cm1] = ilmt_step(single_node(), 1);
    CHECK(g1.arc(1, 0));
}

TEST_CASE("generate preconditions and caps") {
    GeneratingSequence s = GeneratingSequence::parse("01");
    CHECK(generate(d3(), s, 0).graph == d3());
    CHECK_THROWS_AS(generate(d3(), s, 3), precondition_error);
    CHECK_THROWS_AS(generate(d3(), GeneratingSequence::zeros(12), 12, 1024), cap_error);
    // clone-induced subtournament of a 1-step is isomorphic to the base
    Generated gen = generate(d3(), GeneratingSequence::parse("1"), 1);
    std::vector<int> clones = {3, 4, 5};
    CHECK(is_isomorphic(induced(gen.graph, clones), d3()));
}

TEST_CASE("oriented steps reproduce the known sparse iterates") {
    OrientedGraph base = OrientedGraph::from_tournament(single_arc());
    auto [g1, cm1] = oriented_step(base, 1);
    CHECK(arc_set(g1) == std::set<std::pair<int, int>>{{0, 1}, {2, 0}, {3, 1}, {2, 1}});
    auto [g2, cm2] = oriented_step(g1, 0);
    std::set<std::pair<int, int>> expect = {{0, 1}, {2, 0}, {3, 1}, {2, 1},
                                            {4, 0}, {5, 1}, {6, 2}, {7, 3},
                                            {4, 2}, {5, 0}, {5, 2}, {5, 3}};
    CHECK(arc_set(g2) == expect);
    g2.validate();
}

TEST_CASE("oriented step invariants") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        OrientedGraph g = OrientedGraph::from_tournament(random_tournament(5, seed));
        for (int bit : {0, 1}) {
            auto [h, cm] = oriented_step(g, bit);
            CHECK(h.order() == 2 * g.order());
            h.validate();
            // clones form an independent set
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < g.order(); ++v)
                    if (u != v) CHECK_FALSE(h.arc(cm.clone_of(u), cm.clone_of(v)));
            // densification: arc count more than doubles
            CHECK(h.arc_count() == 2 * g.arc_count() + static_cast<std::size_t>(g.order()));
            // parents unchanged
            std::vector<int> parents;
            for (int v = 0; v < g.order(); ++v) parents.push_back(v);
            CHECK(induced(h, parents) == g);
        }
    }
}
