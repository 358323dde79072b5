#ifndef ILMT_GENERATE_HPP
#define ILMT_GENERATE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ilmt/sequence.hpp"
#include "ilmt/tournament.hpp"

namespace ilmt {

// Node-count ceiling for generated graphs. 2^17 nodes is a ~2 GiB adjacency
// matrix, the practical desk-scale limit.
inline constexpr std::size_t kDefaultMaxNodes = std::size_t{1} << 17;

// One doubling step. The output contains the input on indices 0..n-1, arcs
// (u,v') and (u',v) for every input arc (u,v), the arc (x',x) for every x,
// and the clone block oriented forward (bit=1) or reversed (bit=0).
std::pair<Tournament, CloneMap> ilmt_step(const Tournament& t, int bit,
                                          std::size_t max_nodes = kDefaultMaxNodes);

// Oriented-graph variant: each clone x' receives the arc (x',x) plus arcs to
// the out-neighbors (bit=1) or in-neighbors (bit=0) of its parent. Clones
// form an independent set.
std::pair<OrientedGraph, CloneMap> oriented_step(const OrientedGraph& g, int bit,
                                                 std::size_t max_nodes = kDefaultMaxNodes);

struct Generated {
    Tournament graph;
    std::vector<CloneMap> steps;
};

struct GeneratedOriented {
    OrientedGraph graph;
    std::vector<CloneMap> steps;
};

// Fold of ilmt_step over s(1..t). Throws if t exceeds the prefix or the
// node cap would be exceeded.
Generated generate(const Tournament& g0, const GeneratingSequence& s, int t,
                   std::size_t max_nodes = kDefaultMaxNodes);

GeneratedOriented oriented_generate(const OrientedGraph& g0, const GeneratingSequence& s, int t,
                                    std::size_t max_nodes = kDefaultMaxNodes);

} // namespace ilmt

#endif
