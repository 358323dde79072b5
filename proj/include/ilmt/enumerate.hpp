#ifndef ILMT_ENUMERATE_HPP
#define ILMT_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "ilmt/tournament.hpp"

namespace ilmt {

// All 2^C(n,2) labeled tournaments on n nodes, in arc-mask order; n <= 6.
std::vector<Tournament> all_labeled_tournaments(int n);

// One canonical representative per isomorphism class (minimum adjacency key
// over all relabelings), in key order; n <= 6. Class counts: 1,1,2,4,12,56.
std::vector<Tournament> all_tournaments(int n);

// Uniformly random orientation of each pair, deterministic in the seed.
Tournament random_tournament(int n, std::uint64_t seed);

} // namespace ilmt

#endif
