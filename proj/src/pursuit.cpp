#include "ilmt/pursuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "ilmt/census.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/generate.hpp"

namespace ilmt {

namespace {

struct GameSpace {
    const Tournament& t;
    int n;
    int cops;
    std::vector<std::vector<int>> configs;  // sorted multisets in lex order
    std::vector<std::vector<int>> out;      // out-neighbor lists

    GameSpace(const Tournament& tt, int k, std::uint64_t budget) : t(tt), n(tt.order()), cops(k) {
        mpz_class count = binomial(n + k - 1, static_cast<unsigned long>(k));
        mpz_class states = count * n * 2;
        if (states > static_cast<unsigned long>(budget))
            throw cap_error("pursuit state space " + states.get_str() + " exceeds budget " +
                            std::to_string(budget));
        std::vector<int> cur(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int pos, int minv) -> void {
            if (pos == k) {
                configs.push_back(cur);
                return;
            }
            for (int v = minv; v < n; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, v);
            }
        };
        rec(rec, 0, 0);
        out.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            for_each_bit(t.out_row(v), [&](int w) { out[static_cast<std::size_t>(v)].push_back(w); });
    }

    int config_index(const std::vector<int>& cfg) const {
        auto it = std::lower_bound(configs.begin(), configs.end(), cfg);
        return static_cast<int>(it - configs.begin());
    }

    std::size_t state(int cfg_idx, int robber, int turn) const {
        return (static_cast<std::size_t>(cfg_idx) * n + static_cast<std::size_t>(robber)) * 2 +
               static_cast<std::size_t>(turn);
    }

    bool occupied(const std::vector<int>& cfg, int r) const {
        return std::binary_search(cfg.begin(), cfg.end(), r);
    }

    // Enumerate joint cop moves (each cop passes or follows an out-arc);
    // fn receives the sorted destination multiset and may stop by returning
    // true.
    template <typename Fn>
    bool for_each_joint_move(const std::vector<int>& cfg, Fn&& fn) const {
        std::vector<int> dest(cfg.size());
        auto rec = [&](auto&& self, std::size_t pos) -> bool {
            if (pos == cfg.size()) {
                std::vector<int> sorted = dest;
                std::sort(sorted.begin(), sorted.end());
                return fn(sorted);
            }
            int c = cfg[pos];
            dest[pos] = c;  // pass
            if (self(self, pos + 1)) return true;
            for (int w : out[static_cast<std::size_t>(c)]) {
                dest[pos] = w;
                if (self(self, pos + 1)) return true;
            }
            return false;
        };
        return rec(rec, 0);
    }
};

// Synchronous attractor computation: level 0 states have the robber on a
// cop; a cop-turn state settles at round L when some joint move captures or
// reaches a robber-turn state settled before L; a robber-turn state settles
// when every move (pass included; moving onto a cop is capture) is settled
// before L.
GameValue solve(const Tournament& t, int k, std::uint64_t budget) {
    GameSpace gs(t, k, budget);
    const int n = gs.n;
    GameValue val;
    val.cop_count = k;
    val.configs = gs.configs;
    val.level.assign(gs.configs.size() * static_cast<std::size_t>(n) * 2, GameValue::kUnsolved);

    for (std::size_t ci = 0; ci < gs.configs.size(); ++ci)
        for (int r = 0; r < n; ++r)
            if (gs.occupied(gs.configs[ci], r))
                for (int turn = 0; turn < 2; ++turn)
                    val.level[gs.state(static_cast<int>(ci), r, turn)] = 0;

    auto settled_before = [&](std::size_t st, std::int32_t round) {
        std::int32_t l = val.level[st];
        return l != GameValue::kUnsolved && l < round;
    };

    for (std::int32_t round = 1;; ++round) {
        bool any = false;
        for (std::size_t ci = 0; ci < gs.configs.size(); ++ci) {
            const auto& cfg = gs.configs[ci];
            for (int r = 0; r < n; ++r) {
                if (gs.occupied(cfg, r)) continue;
                std::size_t cop_state = gs.state(static_cast<int>(ci), r, 0);
                if (val.level[cop_state] == GameValue::kUnsolved) {
                    bool win = gs.for_each_joint_move(cfg, [&](const std::vector<int>& dest) {
                        if (std::binary_search(dest.begin(), dest.end(), r)) return true;
                        int di = gs.config_index(dest);
                        return settled_before(gs.state(di, r, 1), round);
                    });
                    if (win) {
                        val.level[cop_state] = round;
                        any = true;
                    }
                }
                std::size_t rob_state = gs.state(static_cast<int>(ci), r, 1);
                if (val.level[rob_state] == GameValue::kUnsolved) {
                    bool all_lose = settled_before(gs.state(static_cast<int>(ci), r, 0), round);
                    if (all_lose)
                        for (int w : gs.out[static_cast<std::size_t>(r)]) {
                            if (gs.occupied(cfg, w)) continue;  // suicide, cop-win
                            if (!settled_before(gs.state(static_cast<int>(ci), w, 0), round)) {
                                all_lose = false;
                                break;
                            }
                        }
                    if (all_lose) {
                        val.level[rob_state] = round;
                        any = true;
                    }
                }
            }
        }
        if (!any) break;
    }

    for (std::size_t ci = 0; ci < gs.configs.size(); ++ci) {
        bool wins = true;
        for (int r = 0; r < n && wins; ++r)
            if (val.level[gs.state(static_cast<int>(ci), r, 0)] == GameValue::kUnsolved)
                wins = false;
        if (wins) {
            val.cops_win = true;
            val.winning_placement = gs.configs[ci];
            break;
        }
    }
    return val;
}

std::string state_key(const std::vector<int>& cfg, int r) {
    std::string key;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(cfg[i]);
    }
    key += '|';
    key += std::to_string(r);
    return key;
}

} // namespace

GameValue cops_win(const Tournament& t, int cops, std::uint64_t state_budget) {
    if (cops < 1) throw precondition_error("need at least one cop");
    return solve(t, cops, state_budget);
}

CopStrategy extract_strategy(const Tournament& t, const GameValue& value) {
    GameSpace gs(t, value.cop_count, kDefaultStateBudget);
    CopStrategy strat;
    for (std::size_t ci = 0; ci < gs.configs.size(); ++ci) {
        const auto& cfg = gs.configs[ci];
        for (int r = 0; r < gs.n; ++r) {
            if (gs.occupied(cfg, r)) continue;
            std::size_t st = gs.state(static_cast<int>(ci), r, 0);
            std::int32_t lv = value.level[st];
            if (lv == GameValue::kUnsolved) continue;
            std::vector<int> chosen;
            gs.for_each_joint_move(cfg, [&](const std::vector<int>& dest) {
                if (std::binary_search(dest.begin(), dest.end(), r)) {
                    chosen = dest;
                    return true;
                }
                int di = gs.config_index(dest);
                std::int32_t dl = value.level[gs.state(di, r, 1)];
                if (dl != GameValue::kUnsolved && dl < lv) {
                    chosen = dest;
                    return true;
                }
                return false;
            });
            if (chosen.empty()) throw std::logic_error("winning state without progress move");
            strat.moves[state_key(cfg, r)] = chosen;
        }
    }
    return strat;
}

std::optional<int> simulate_capture(const Tournament& t, const GameValue& value,
                                    const CopStrategy& strategy) {
    if (!value.cops_win) return std::nullopt;
    GameSpace gs(t, value.cop_count, kDefaultStateBudget);
    const std::size_t phase_bound = value.level.size() + 2;
    int worst = 0;
    for (int r0 = 0; r0 < gs.n; ++r0) {
        std::vector<int> cfg = value.winning_placement;
        int r = r0;
        if (gs.occupied(cfg, r)) continue;  // captured at placement
        int rounds = 0;
        bool captured = false;
        for (std::size_t phase = 0; phase < phase_bound; ++phase) {
            // cop phase
            auto it = strategy.moves.find(state_key(cfg, r));
            if (it == strategy.moves.end()) return std::nullopt;
            cfg = it->second;
            ++rounds;
            if (gs.occupied(cfg, r)) {
                captured = true;
                break;
            }
            // robber phase: adversarial — flee to the highest surviving level
            int ci = gs.config_index(cfg);
            int best_move = -1;
            std::int32_t best_level = -2;
            auto consider = [&](int w) {
                if (gs.occupied(cfg, w)) return;  // walking onto a cop loses
                std::int32_t l = value.level[gs.state(ci, w, 0)];
                std::int32_t score = l == GameValue::kUnsolved ? INT32_MAX : l;
                if (score > best_level) {
                    best_level = score;
                    best_move = w;
                }
            };
            consider(r);
            for (int w : gs.out[static_cast<std::size_t>(r)]) consider(w);
            if (best_move < 0) {
                captured = true;  // every move lands on a cop
                break;
            }
            r = best_move;
        }
        if (!captured) return std::nullopt;
        worst = std::max(worst, rounds);
    }
    return worst;
}

SolveResult cop_number(const Tournament& t, std::uint64_t state_budget) {
    int last_tried = 0;
    for (int k = 1; k <= t.order(); ++k) {
        last_tried = k;
        GameValue v;
        try {
            v = cops_win(t, k, state_budget);
        } catch (const cap_error& e) {
            throw cap_error(std::string(e.what()) + " (no winning cop count found up to k=" +
                            std::to_string(last_tried - 1) + ")");
        }
        if (v.cops_win) {
            SolveResult r;
            r.cop_number = k;
            r.strategy = extract_strategy(t, v);
            r.value = std::move(v);
            return r;
        }
    }
    throw std::logic_error("placing a cop on every node must win");
}

CopStepReport verify_cop_step_theorems(const Tournament& g0, std::uint64_t state_budget) {
    CopStepReport rep;
    rep.c0 = cop_number(g0, state_budget).cop_number;
    rep.c_one_step = cop_number(ilmt_step(g0, 1).first, state_budget).cop_number;
    rep.one_step_preserved = rep.c_one_step == rep.c0;
    rep.c_zero_step = cop_number(ilmt_step(g0, 0).first, state_budget).cop_number;
    rep.zero_step_in_band =
        g0.order() < 2 || (rep.c_zero_step >= 2 && rep.c_zero_step <= 3);
    bool has_source = !sources_and_sinks(g0).first.empty();
    rep.source_iff_one_cop = (rep.c0 == 1) == has_source;
    return rep;
}

} // namespace ilmt
