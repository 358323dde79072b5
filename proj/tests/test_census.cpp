#include "doctest.h"

#include "ilmt/census.hpp"
#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/generate.hpp"
#include "oracles.hpp"

using namespace ilmt;

TEST_CASE("3-census basics") {
    Census3 c = census3_bruteforce(d3());
    CHECK(c.a == 1);
    CHECK(c.b == 0);
    c = census3_bruteforce(t3());
    CHECK(c.a == 0);
    CHECK(c.b == 1);

    // the 8-node iterate of the single arc along 10
    Tournament g2 = generate(single_arc(), GeneratingSequence::parse("10"), 2).graph;
    c = census3_bruteforce(g2);
    CHECK(c.a + c.b == 56);
    CHECK(c.a == oracle::count_d3(g2));
    CHECK(c.a == 10);
}

TEST_CASE("bit-parallel 3-census equals triple enumeration on random instances") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 3 + static_cast<int>(seed % 62);
        Tournament t = random_tournament(n, seed);
        Census3 c = census3_bruteforce(t);
        CHECK(c.a == oracle::count_d3(t));
        CHECK(c.a + c.b == binomial(n, 3));
    }
}

TEST_CASE("recurrence single steps") {
    RecurrenceCensus r = census3_recurrence(3, 1, GeneratingSequence::parse("1"), 1);
    CHECK(r.a == 8);
    r = census3_recurrence(3, 1, GeneratingSequence::parse("0"), 1);
    CHECK(r.a == 8);
    CHECK(r.b == 12);
    r = census3_recurrence(3, 1, GeneratingSequence::parse("01"), 0);
    CHECK(r.a == 1);
    CHECK(r.b == 0);
    CHECK_THROWS_AS(census3_recurrence(3, 2, GeneratingSequence::parse("1"), 2),
                    precondition_error);
    CHECK_THROWS_AS(census3_recurrence(3, 5, GeneratingSequence::parse("1"), 1),
                    precondition_error);
}

TEST_CASE("recurrence equals brute force exhaustively at small scale") {
    for (int n0 : {3, 4, 5}) {
        for (const auto& base : all_tournaments(n0)) {
            mpz_class a0(static_cast<unsigned long>(census3_bruteforce(base).a));
            for (int len = 1; len <= 4; ++len) {
                for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                    GeneratingSequence s;
                    for (int i = 0; i < len; ++i) s.bits.push_back((mask >> i) & 1);
                    Tournament g = base;
                    for (int t = 1; t <= len; ++t) {
                        g = ilmt_step(g, s.bit(t)).first;
                        Census3 brute = census3_bruteforce(g);
                        RecurrenceCensus rec = census3_recurrence(n0, a0, s, t);
                        REQUIRE(rec.a == static_cast<unsigned long>(brute.a));
                        REQUIRE(rec.b == static_cast<unsigned long>(brute.b));
                    }
                }
            }
        }
    }
}

TEST_CASE("recurrence stays exact far past 64-bit range") {
    RecurrenceCensus r = census3_recurrence(3, 1, GeneratingSequence::zeros(64), 64);
    CHECK(r.order == mpz_class(3) * (mpz_class(1) << 64));
    CHECK(r.a + r.b == binomial(r.order, 3));
    CHECK(r.a > 0);
}

TEST_CASE("proportion limits") {
    CHECK(d3_proportion_limit(3, 1, LimitRegime::all_ones) == mpq_class(2, 9));
    CHECK(d3_proportion_limit(3, 0, LimitRegime::all_ones) == 0);
    CHECK(d3_proportion_limit(7, 3, LimitRegime::infinite_support) == mpq_class(1, 4));
}

TEST_CASE("4-census type counts") {
    Census4 c = census4(t4());
    CHECK(c.t4 == 1);
    CHECK(c.winner == 0);
    c = census4(winner4());
    CHECK(c.winner == 1);
    c = census4(loser4());
    CHECK(c.loser == 1);
    c = census4(mixed4());
    CHECK(c.mixed == 1);
    c = census4(linear_order(5));
    CHECK(c.t4 == 5);
    CHECK(c.winner + c.loser + c.mixed == 0);
    CHECK_THROWS_AS(census4(t4(), 1, 3), cap_error);
}

TEST_CASE("4-type classifier splits the 64 labeled tournaments 24/8/8/24") {
    long counts[4] = {0, 0, 0, 0};
    for (const auto& t : all_labeled_tournaments(4)) ++counts[motif4_type(t)];
    CHECK(counts[0] == 24);
    CHECK(counts[1] == 8);
    CHECK(counts[2] == 8);
    CHECK(counts[3] == 24);
}

TEST_CASE("4-census equals subset enumeration on random instances") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 4 + static_cast<int>(seed * 3 % 27);
        Tournament t = random_tournament(n, seed + 500);
        Census4 fast = census4(t);
        auto naive = oracle::count_4types(t);
        CHECK(fast.t4 == naive[0]);
        CHECK(fast.winner == naive[1]);
        CHECK(fast.loser == naive[2]);
        CHECK(fast.mixed == naive[3]);
    }
    // thread count must not change results
    Tournament t = random_tournament(60, 99);
    CHECK(census4(t, 1).counts() == census4(t, 4).counts());
}

TEST_CASE("density reports") {
    DensityReport r = density(t4(), t4());
    CHECK(r.d_star == mpq_class(1, 24));
    CHECK(r.aut == 1);
    r = density(d3(), d3());
    CHECK(r.d_star == mpq_class(1, 2));
    CHECK(r.aut == 3);
    r = density(d3(), t3());
    CHECK(r.d_star == 0);
    // 5-node motif through the direct path: the host contains itself once
    Tournament r5 = random_tournament(5, 4);
    r = density(r5, r5);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), 5);
    CHECK(r.d_star == mpq_class(mpz_class(r.aut), fact));
    CHECK_THROWS_AS(density(random_tournament(8, 0), random_tournament(7, 1)), cap_error);
}

TEST_CASE("markov model") {
    MarkovModel m = markov_model();
    for (int j = 0; j < 4; ++j) {
        mpq_class col = 0;
        for (int i = 0; i < 4; ++i) col += m.transition[i][j];
        CHECK(col == 1);
    }
    CHECK(m.apply(m.stationary) == m.stationary);
    CHECK(m.transition[0][0] == mpq_class(11, 16));
    CHECK(m.transition[1][1] == mpq_class(9, 16));
    CHECK(m.transition[0][1] == mpq_class(3, 16));
    CHECK(m.transition[1][0] == mpq_class(1, 16));
}

TEST_CASE("trace rows carry counts, proportions and predictions") {
    Trace tr = quasirandom_trace(d3(), GeneratingSequence::zeros(4), 4);
    REQUIRE(tr.rows.size() == 5);
    CHECK(tr.rows[0].order == 3);
    CHECK(tr.rows[0].a == 1);
    CHECK(tr.rows[0].counts4.total() == 0);
    CHECK(tr.rows[1].order == 6);
    CHECK(tr.rows[1].counts4.total() == binomial(6, 4));
    // prediction is seeded at the first step with 4-subsets
    CHECK(tr.rows[1].predicted == tr.rows[1].sigma);
    CHECK(tr.rows[2].predicted == markov_model().apply(tr.rows[1].sigma));
    CHECK_FALSE(tr.truncated);

    // a 1-step leaves the prediction unchanged
    Trace tr2 = quasirandom_trace(t4(), GeneratingSequence::parse("10"), 2);
    CHECK(tr2.rows[0].predicted == tr2.rows[0].sigma);
    CHECK(tr2.rows[1].predicted == tr2.rows[0].sigma);
    CHECK(tr2.rows[2].predicted == markov_model().apply(tr2.rows[0].sigma));
}

TEST_CASE("trace truncates at the census cap") {
    Trace tr = quasirandom_trace(d3(), GeneratingSequence::zeros(12), 12);
    CHECK(tr.truncated);
    CHECK(tr.last_step == 9);  // 3 * 2^9 = 1536
    CHECK(tr.rows.back().order == 1536);
}

TEST_CASE("distinguishing sequences by degree profile") {
    // the regular base collides at the first step: both step kinds give
    // out-profile (2,2,2,3,3,3)
    auto r = distinguish_sequences(d3(), GeneratingSequence::parse("1"),
                                   GeneratingSequence::parse("0"), 1);
    CHECK_FALSE(r.has_value());
    // the two 6-node iterates are nevertheless non-isomorphic
    Tournament one = ilmt_step(d3(), 1).first;
    Tournament zero = ilmt_step(d3(), 0).first;
    CHECK(degree_profile(one) == degree_profile(zero));
    CHECK_FALSE(is_isomorphic(one, zero));

    // the single-arc base separates immediately
    r = distinguish_sequences(single_arc(), GeneratingSequence::parse("1"),
                              GeneratingSequence::parse("0"), 1);
    REQUIRE(r.has_value());
    CHECK(*r == 1);

    // equal prefixes never diverge
    r = distinguish_sequences(d3(), GeneratingSequence::parse("101"),
                              GeneratingSequence::parse("101"), 3);
    CHECK_FALSE(r.has_value());

    // difference at the second step over the single arc
    r = distinguish_sequences(single_arc(), GeneratingSequence::parse("10"),
                              GeneratingSequence::parse("11"), 2);
    REQUIRE(r.has_value());
    CHECK(*r == 2);

    CHECK_THROWS_AS(distinguish_sequences(d3(), GeneratingSequence::parse("1"),
                                          GeneratingSequence::parse("11"), 2),
                    precondition_error);
}
