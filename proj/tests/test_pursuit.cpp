#include "doctest.h"

#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/generate.hpp"
#include "ilmt/pursuit.hpp"

using namespace ilmt;

TEST_CASE("small game values") {
    // single arc: the cop sits on the source and walks over
    GameValue v = cops_win(single_arc(), 1);
    CHECK(v.cops_win);
    CHECK(v.winning_placement == std::vector<int>{0});

    CHECK_FALSE(cops_win(d3(), 1).cops_win);
    CHECK(cops_win(d3(), 2).cops_win);
    CHECK(cops_win(t3(), 1).cops_win);
    CHECK(cops_win(single_node(), 1).cops_win);
}

TEST_CASE("cop numbers") {
    CHECK(cop_number(single_node()).cop_number == 1);
    CHECK(cop_number(single_arc()).cop_number == 1);
    CHECK(cop_number(t3()).cop_number == 1);
    CHECK(cop_number(d3()).cop_number == 2);
    CHECK(cop_number(ilmt_step(d3(), 0).first).cop_number == 2);
    CHECK(cop_number(ilmt_step(d3(), 1).first).cop_number == 2);
    CHECK(cop_number(ilmt_step(single_arc(), 0).first).cop_number == 2);
}

TEST_CASE("value monotonicity in the cop count") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& t : all_tournaments(n))
            for (int k = 1; k < 3; ++k)
                if (cops_win(t, k).cops_win) CHECK(cops_win(t, k + 1).cops_win);
}

TEST_CASE("strategies capture under adversarial re-simulation") {
    for (const Tournament& t :
         {single_arc(), t3(), d3(), mixed4(), ilmt_step(d3(), 0).first}) {
        SolveResult s = cop_number(t);
        auto rounds = simulate_capture(t, s.value, s.strategy);
        REQUIRE(rounds.has_value());
        CHECK(*rounds <= static_cast<int>(s.value.level.size()));
    }
}

TEST_CASE("one cop wins exactly on source-bearing tournaments") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : all_tournaments(n)) {
            bool source = !sources_and_sinks(t).first.empty();
            CHECK(cops_win(t, 1).cops_win == source);
        }
}

TEST_CASE("step theorems on small bases") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& t : all_tournaments(n)) {
            CopStepReport rep = verify_cop_step_theorems(t);
            CHECK(rep.one_step_preserved);
            CHECK(rep.zero_step_in_band);
            CHECK(rep.source_iff_one_cop);
        }
    // a 5-node spot check (10-node games)
    CopStepReport rep = verify_cop_step_theorems(all_tournaments(5)[0]);
    CHECK(rep.one_step_preserved);
    CHECK(rep.zero_step_in_band);
}

TEST_CASE("state budget is enforced") {
    CHECK_THROWS_AS(cops_win(random_tournament(30, 1), 3, 1000), cap_error);
    CHECK_THROWS_AS(cop_number(random_tournament(30, 1), 1000), cap_error);
}
