#ifndef ILMT_FIXTURES_HPP
#define ILMT_FIXTURES_HPP

#include <optional>
#include <string_view>

#include "ilmt/tournament.hpp"

namespace ilmt {

// Small named tournaments used across tests, verification suites and the CLI.

Tournament single_node();
Tournament single_arc();      // a -> b
Tournament d3();              // directed 3-cycle
Tournament t3();              // linear order on 3 nodes
Tournament t4();              // linear order on 4 nodes
Tournament winner4();         // node of out-degree 3 over a 3-cycle
Tournament loser4();          // node of in-degree 3 under a 3-cycle
Tournament mixed4();          // the strong 4-node tournament, out-degrees (1,1,2,2)
Tournament linear_order(int n);

// The three 2-chromatic tournaments whose chromatic number grows by 0, 1 and
// 2 under a single 0-step.
Tournament fig_g();           // 3 nodes
Tournament fig_h();           // 4 nodes
Tournament fig_t();           // 8 nodes

// Recursive hero construction: two copies of the previous stage plus an apex,
// wired S1 -> S2 -> v -> S1. Order 2^i - 1; chromatic number exactly i.
Tournament hero(int i, int max_index = 14);

// Builtin base lookup for the CLI: d3, t3, edge, node, t4, winner, loser,
// mixed, hero:<i>, fig2:G|H|T. Returns nullopt for unknown names.
std::optional<Tournament> builtin_base(std::string_view name);

} // namespace ilmt

#endif
