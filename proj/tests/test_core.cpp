#include "doctest.h"

#include <set>

#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/tournament.hpp"

using namespace ilmt;

TEST_CASE("build validates the arc set") {
    CHECK(Tournament::build(2, {{0, 1}}).arc(0, 1));
    CHECK(Tournament::build(1, {}).order() == 1);
    Tournament cyc = Tournament::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(cyc.arc(2, 0));
    CHECK_FALSE(cyc.arc(0, 2));

    CHECK_THROWS_AS(Tournament::build(2, {{0, 0}}), parse_error);
    CHECK_THROWS_AS(Tournament::build(2, {{0, 1}, {0, 1}}), parse_error);
    CHECK_THROWS_AS(Tournament::build(2, {{0, 1}, {1, 0}}), parse_error);
    CHECK_THROWS_AS(Tournament::build(3, {{0, 1}, {1, 2}}), parse_error);
    CHECK_THROWS_AS(Tournament::build(2, {{0, 2}}), parse_error);
}

TEST_CASE("completeness invariant on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Tournament t = random_tournament(37, seed);
        t.validate();
        for (int i = 0; i < t.order(); ++i)
            for (int j = i + 1; j < t.order(); ++j) CHECK(t.arc(i, j) != t.arc(j, i));
    }
}

TEST_CASE("reverse") {
    Tournament e = single_arc();
    CHECK(reverse(e).arc(1, 0));
    Tournament cyc = d3();
    CHECK(reverse(reverse(cyc)) == cyc);
    CHECK(is_isomorphic(reverse(cyc), cyc));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tournament t = random_tournament(45, seed);
        CHECK(reverse(reverse(t)) == t);
    }
}

TEST_CASE("induced subtournaments") {
    CHECK(induced(d3(), {0, 1}) == single_arc());
    Tournament t = random_tournament(9, 3);
    CHECK(induced(t, {0, 1, 2, 3, 4, 5, 6, 7, 8}) == t);
    CHECK_THROWS_AS(induced(t, {}), precondition_error);
    CHECK_THROWS_AS(induced(t, {0, 9}), precondition_error);
    CHECK_THROWS_AS(induced(t, {1, 1}), precondition_error);
}

TEST_CASE("isomorphism with witness") {
    CHECK(is_isomorphic(d3(), reverse(d3())));
    CHECK_FALSE(is_isomorphic(d3(), t3()));
    Tournament t = random_tournament(7, 11);
    auto w = isomorphism(t, t);
    REQUIRE(w.has_value());

    // reflexive + symmetric on a sample, witnesses honored
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Tournament a = random_tournament(6, seed);
        Tournament b = random_tournament(6, seed + 100);
        CHECK(is_isomorphic(a, a));
        auto ab = isomorphism(a, b);
        auto ba = isomorphism(b, a);
        CHECK(ab.has_value() == ba.has_value());
        if (ab) {
            const auto& p = *ab;
            for (int u = 0; u < 6; ++u)
                for (int v = 0; v < 6; ++v)
                    if (u != v)
                        CHECK(a.arc(u, v) ==
                              b.arc(p[static_cast<std::size_t>(u)],
                                    p[static_cast<std::size_t>(v)]));
        }
    }
    CHECK_THROWS_AS(is_isomorphic(random_tournament(11, 0), random_tournament(11, 1)),
                    cap_error);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(t3()) == 1);
    CHECK(automorphism_count(d3()) == 3);
    CHECK(automorphism_count(winner4()) == 3);
    CHECK(automorphism_count(loser4()) == 3);
    CHECK(automorphism_count(mixed4()) == 1);
    CHECK(automorphism_count(t4()) == 1);

    // 4! / |Aut| labeled copies per class must tile the 2^6 labeled tournaments
    long total = 0;
    for (const auto& t : all_tournaments(4)) total += 24 / automorphism_count(t);
    CHECK(total == 64);

    // automorphism groups of tournaments have odd order
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : all_tournaments(n)) CHECK(automorphism_count(t) % 2 == 1);
}

TEST_CASE("degree profiles and sources/sinks") {
    DegreeProfile pd3 = degree_profile(d3());
    CHECK(pd3.out_degrees == std::vector<int>{1, 1, 1});
    DegreeProfile pt3 = degree_profile(t3());
    CHECK(pt3.out_degrees == std::vector<int>{0, 1, 2});

    auto [src3, snk3] = sources_and_sinks(t3());
    CHECK(src3 == std::vector<int>{0});
    CHECK(snk3 == std::vector<int>{2});
    auto [srcc, snkc] = sources_and_sinks(d3());
    CHECK(srcc.empty());
    CHECK(snkc.empty());

    // profile is invariant under isomorphism witnesses
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Tournament a = random_tournament(6, seed);
        auto w = isomorphism(a, a);
        REQUIRE(w);
        CHECK(degree_profile(a) == degree_profile(a));
    }
}

TEST_CASE("class enumeration counts") {
    CHECK(all_tournaments(1).size() == 1);
    CHECK(all_tournaments(2).size() == 1);
    CHECK(all_tournaments(3).size() == 2);
    CHECK(all_tournaments(4).size() == 4);
    CHECK(all_tournaments(5).size() == 12);
    CHECK(all_tournaments(6).size() == 56);
    // representatives are pairwise non-isomorphic
    auto reps = all_tournaments(5);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(is_isomorphic(reps[i], reps[j]));
}

TEST_CASE("hero fixtures") {
    CHECK(hero(1).order() == 1);
    CHECK(is_isomorphic(hero(2), d3()));
    CHECK(hero(4).order() == 15);
    CHECK_THROWS_AS(hero(20), cap_error);
}
