#ifndef ILMT_PROPS_HPP
#define ILMT_PROPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ilmt/tournament.hpp"

namespace ilmt {

// Max directed eccentricity, or nullopt when some ordered pair is unreachable
// (the tournament is not strong). BFS from every node over bit rows.
std::optional<int> diameter(const Tournament& t);

bool is_strong(const Tournament& t);

// Strongness of the subtournament with `removed` deleted (used to re-verify
// cut witnesses). A subtournament on <= 1 nodes counts as strong.
bool is_strong_without(const Tournament& t, const std::vector<int>& removed);

struct CutResult {
    int kappa = 0;
    std::vector<int> cut;  // witness: removal leaves a non-strong subtournament
};

// Minimum node set whose removal destroys strong connectivity; 0 with an
// empty witness when the input is already not strong (or has fewer than 3
// nodes). Vertex-split max-flow over ordered non-arc pairs.
CutResult connectivity(const Tournament& t);

enum class Direction { in, out };

bool is_in_dominating(const Tournament& t, const std::vector<int>& s);
bool is_out_dominating(const Tournament& t, const std::vector<int>& s);
bool is_minimal_in_dominating(const Tournament& t, const std::vector<int>& s);

struct DominationResult {
    int gamma = 0;
    std::vector<int> witness;
};

// Exact domination number: greedy upper bound, then subset search by
// increasing size below it.
DominationResult domination(const Tournament& t, Direction dir);

struct CloneLiftCheck {
    bool in_dominating = false;        // S in-dominates G0
    bool out_dominating = false;       // S out-dominates G0
    bool lifted_in_dominating = false; // S' = clones of S in-dominates the 0-step of G0
};

CloneLiftCheck check_indominating_clone_lift(const Tournament& g0, const std::vector<int>& s);

inline constexpr int kChromaticCap = 24;

struct ColoringResult {
    int chi = 0;
    std::vector<int> coloring;  // class index per node; every class is a linear order
    bool exact = true;
};

// Exact minimum number of classes each inducing a linear order (equivalently
// D3-free). Branch and bound seeded by a greedy coloring; n <= kChromaticCap.
ColoringResult chromatic_number(const Tournament& t);

// Greedy first-fit upper bound (no optimality claim), any order.
ColoringResult chromatic_upper_bound(const Tournament& t);

// Decision form: fills `coloring` when a k-coloring exists. n <= 64.
bool colorable_with(const Tournament& t, int k, std::vector<int>* coloring = nullptr);

bool coloring_is_valid(const Tournament& t, const std::vector<int>& coloring);

struct ChiStepTrial {
    std::string label;
    int chi_before = 0;
    int chi_after = 0;   // exact value, or heuristic class count when !exact
    bool exact = true;
    int bound = 0;       // asserted upper bound on chi_after
    bool within_bound = false;
};

enum class ChiStepMode { one_step, zero_pairs };

struct ChiStepReport {
    ChiStepMode mode;
    int chi0 = 0;
    std::vector<ChiStepTrial> trials;
    bool all_ok = false;
};

// one_step: chi is preserved by a 1-step (exact both sides).
// zero_pairs: chi(G_{2t}) <= (2^{t+1}-1) chi(G0) after 2t 0-steps; exact for
// t=1 when 4 n0 fits the solver cap, heuristic-certified for t=2.
ChiStepReport verify_chi_step_theorems(const Tournament& g0, ChiStepMode mode);

} // namespace ilmt

#endif
