#include "doctest.h"

#include "ilmt/embed.hpp"
#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"

using namespace ilmt;

TEST_CASE("3-cycle into iterates of the linear order") {
    EmbeddingMap e = embed(t3(), GeneratingSequence::zeros(3), d3());
    CHECK(e.host.order() == 24);
    CHECK(e.steps_total == 3);
    CHECK(e.zeros_used == 3);
    CHECK(verify_embedding(e));
    CHECK(e.image == std::vector<int>{3, 7, 17});  // deterministic construction
    // arc-exact: the induced copy equals the target under the map itself
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y) CHECK(d3().arc(x, y) == e.host.arc(e.image[x], e.image[y]));
}

TEST_CASE("linear order into iterates of the 3-cycle") {
    EmbeddingMap e = embed(d3(), GeneratingSequence::zeros(3), t3());
    CHECK(verify_embedding(e));
    CHECK(e.zeros_used == 3);
    CHECK(e.host.order() == 24);
}

TEST_CASE("interleaved 1-steps carry the image forward") {
    EmbeddingMap e = embed(t3(), GeneratingSequence::parse("10100"), d3());
    CHECK(e.steps_total == 5);
    CHECK(e.zeros_used == 3);
    CHECK(e.host.order() == 3 * 32);
    CHECK(verify_embedding(e));
}

TEST_CASE("identity fast path is opt-in") {
    EmbedOptions fast;
    fast.identity_fast_path = true;
    EmbeddingMap e = embed(d3(), GeneratingSequence::zeros(3), d3(), fast);
    CHECK(e.host.order() == 3);
    CHECK(e.trace.empty());
    CHECK(e.zeros_used == 0);
    CHECK(e.image == std::vector<int>{0, 1, 2});
    CHECK(verify_embedding(e));

    // default path always consumes one zero per node
    EmbeddingMap full = embed(d3(), GeneratingSequence::zeros(3), d3());
    CHECK(full.zeros_used == 3);
    CHECK(full.host.order() == 24);
    CHECK(verify_embedding(full));
}

TEST_CASE("order-1 target consumes exactly the first zero") {
    EmbeddingMap e = embed(d3(), GeneratingSequence::parse("1101"), single_node());
    CHECK(e.steps_total == 3);  // position of the first zero
    CHECK(e.zeros_used == 1);
    CHECK(e.host.order() == 24);
    CHECK(verify_embedding(e));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(embed(t3(), GeneratingSequence::zeros(3), t4()), precondition_error);
    CHECK_THROWS_AS(embed(t3(), GeneratingSequence::parse("110"), t3()), precondition_error);
    CHECK_THROWS_AS(universality_sweep(t3(), 5), precondition_error);
    CHECK_THROWS_AS(universality_sweep(single_arc(), 3), precondition_error);
}

TEST_CASE("a wrong map fails verification") {
    EmbeddingMap e = embed(t3(), GeneratingSequence::zeros(3), d3());
    // send the 3-cycle onto the host's parent copy of the transitive base
    e.image = {0, 1, 2};
    CHECK_FALSE(verify_embedding(e));
}

TEST_CASE("universality sweeps") {
    auto entries = universality_sweep(t3(), 3);
    CHECK(entries.size() == 2);
    for (const auto& entry : entries) {
        CHECK(entry.verified);
        CHECK(entry.zeros_used == 3);
        CHECK(entry.host_order == 24);
    }
    for (const auto& base : all_tournaments(4)) {
        for (const auto& entry : universality_sweep(base, 4)) {
            CHECK(entry.verified);
            CHECK(entry.zeros_used == 4);
            CHECK(entry.host_order == 64);
        }
    }
    auto tiny = universality_sweep(d3(), 1);
    CHECK(tiny.size() == 1);
    CHECK(tiny[0].verified);
}

TEST_CASE("determinism of the construction") {
    EmbeddingMap a = embed(mixed4(), GeneratingSequence::zeros(4), winner4());
    EmbeddingMap b = embed(mixed4(), GeneratingSequence::zeros(4), winner4());
    CHECK(a.image == b.image);
    CHECK(a.host == b.host);
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].processed == b.trace[i].processed);
        CHECK(a.trace[i].flipped == b.trace[i].flipped);
    }
}
