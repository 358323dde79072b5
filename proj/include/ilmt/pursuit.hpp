#ifndef ILMT_PURSUIT_HPP
#define ILMT_PURSUIT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ilmt/tournament.hpp"

namespace ilmt {

inline constexpr std::uint64_t kDefaultStateBudget = 100'000'000;

// Game on a tournament: cops place first, the robber places with full
// information, then rounds alternate a cop-move phase (each cop follows an
// out-arc or passes, independently) and a robber-move phase. Capture is
// co-location, checked after every phase. Cops are an unordered multiset.
struct GameValue {
    bool cops_win = false;
    int cop_count = 0;
    std::vector<int> winning_placement;  // sorted multiset; empty if robber wins

    // Per (config, robber, turn) attractor level; 0 = capture already,
    // kUnsolved = robber-win region. Indexed cfg * n * 2 + robber * 2 + turn
    // with turn 0 = cop to move.
    std::vector<std::int32_t> level;
    std::vector<std::vector<int>> configs;  // sorted cop multisets, index order

    static constexpr std::int32_t kUnsolved = -1;
};

struct CopStrategy {
    // Winning joint move per cop-turn state, keyed "c1,c2,..|r"; the move is
    // the sorted destination multiset. Following it strictly decreases the
    // attractor level, so capture happens within level(start) phases.
    std::map<std::string, std::vector<int>> moves;
};

struct SolveResult {
    int cop_number = 0;
    GameValue value;      // for the certifying cop count
    CopStrategy strategy;
};

GameValue cops_win(const Tournament& t, int cops,
                   std::uint64_t state_budget = kDefaultStateBudget);

SolveResult cop_number(const Tournament& t, std::uint64_t state_budget = kDefaultStateBudget);

CopStrategy extract_strategy(const Tournament& t, const GameValue& value);

// Plays the strategy against a worst-case robber from every opening; returns
// the maximum number of rounds to capture, or nullopt if some play escapes
// the state bound (which would disprove the certificate).
std::optional<int> simulate_capture(const Tournament& t, const GameValue& value,
                                    const CopStrategy& strategy);

struct CopStepReport {
    int c0 = 0;
    int c_one_step = 0;
    bool one_step_preserved = false;
    int c_zero_step = 0;
    bool zero_step_in_band = false;  // 2 <= c <= 3, for bases of order >= 2
    bool source_iff_one_cop = false; // c(G0)=1 <=> G0 has a source
};

CopStepReport verify_cop_step_theorems(const Tournament& g0,
                                       std::uint64_t state_budget = kDefaultStateBudget);

} // namespace ilmt

#endif
