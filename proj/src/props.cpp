#include "ilmt/props.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ilmt/census.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/generate.hpp"

namespace ilmt {

namespace {

// BFS over bit rows from `src`, nodes in `alive` only. Returns eccentricity
// (max distance over reached alive nodes) and whether all alive nodes were
// reached. O(n m / w).
struct BfsResult {
    int ecc = 0;
    bool covers = false;
};

BfsResult bfs(const BitMatrix& adj, int src, const std::vector<std::uint64_t>& alive,
              std::size_t alive_count) {
    const int words = adj.words_per_row();
    std::vector<std::uint64_t> visited(static_cast<std::size_t>(words), 0);
    std::vector<std::uint64_t> frontier(static_cast<std::size_t>(words), 0);
    visited[static_cast<std::size_t>(src >> 6)] |= std::uint64_t{1} << (src & 63);
    frontier = visited;
    std::size_t seen = 1;
    int dist = 0;
    while (seen < alive_count) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(words), 0);
        for (int k = 0; k < words; ++k) {
            std::uint64_t f = frontier[static_cast<std::size_t>(k)];
            while (f) {
                int u = k * 64 + std::countr_zero(f);
                f &= f - 1;
                auto row = adj.row(u);
                for (int q = 0; q < words; ++q) next[static_cast<std::size_t>(q)] |= row[q];
            }
        }
        bool grew = false;
        for (int k = 0; k < words; ++k) {
            auto kk = static_cast<std::size_t>(k);
            next[kk] &= alive[kk] & ~visited[kk];
            if (next[kk]) grew = true;
            visited[kk] |= next[kk];
            seen += std::popcount(next[kk]);
        }
        if (!grew) return {dist, false};
        frontier = std::move(next);
        ++dist;
    }
    return {dist, true};
}

std::vector<std::uint64_t> all_alive(const BitMatrix& adj) {
    const int words = adj.words_per_row();
    std::vector<std::uint64_t> alive(static_cast<std::size_t>(words), ~std::uint64_t{0});
    alive.back() = adj.tail_mask();
    return alive;
}

} // namespace

std::optional<int> diameter(const Tournament& t) {
    const int n = t.order();
    auto alive = all_alive(t.matrix());
    int ecc_max = 0;
    for (int v = 0; v < n; ++v) {
        auto r = bfs(t.matrix(), v, alive, static_cast<std::size_t>(n));
        if (!r.covers) return std::nullopt;
        ecc_max = std::max(ecc_max, r.ecc);
    }
    return ecc_max;
}

bool is_strong(const Tournament& t) {
    const int n = t.order();
    if (n <= 1) return true;
    auto alive = all_alive(t.matrix());
    if (!bfs(t.matrix(), 0, alive, static_cast<std::size_t>(n)).covers) return false;
    BitMatrix back = t.matrix().transposed();
    return bfs(back, 0, alive, static_cast<std::size_t>(n)).covers;
}

bool is_strong_without(const Tournament& t, const std::vector<int>& removed) {
    const int n = t.order();
    auto alive = all_alive(t.matrix());
    std::size_t count = static_cast<std::size_t>(n);
    for (int v : removed) {
        auto& w = alive[static_cast<std::size_t>(v >> 6)];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (w & bit) {
            w &= ~bit;
            --count;
        }
    }
    if (count <= 1) return true;
    int src = -1;
    for (int v = 0; v < n && src < 0; ++v)
        if (alive[static_cast<std::size_t>(v >> 6)] >> (v & 63) & 1) src = v;
    if (!bfs(t.matrix(), src, alive, count).covers) return false;
    BitMatrix back = t.matrix().transposed();
    return bfs(back, src, alive, count).covers;
}

// ------------------------------------------------------------- connectivity

namespace {

// Dinic on the standard vertex-split network: w_in -> w_out capacity 1 for
// internal nodes, arcs x_out -> y_in with effectively infinite capacity.
class SplitFlow {
public:
    explicit SplitFlow(const Tournament& t) : t_(t), n_(t.order()) {}

    // Max flow (= min vertex cut) from s to v for a non-arc ordered pair,
    // stopping early once `limit` is exceeded. Fills `cut` when asked.
    int local_cut(int s, int v, int limit, std::vector<int>* cut) {
        build(s, v);
        int flow = 0;
        while (flow <= limit && bfs_levels()) {
            std::fill(it_.begin(), it_.end(), 0);
            while (int pushed = dfs(src_, sink_, 1 << 30)) flow += pushed;
        }
        if (cut && flow <= limit) {
            cut->clear();
            std::vector<bool> seen(nodes_, false);
            std::vector<int> stack{src_};
            seen[static_cast<std::size_t>(src_)] = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int e : graph_[static_cast<std::size_t>(u)]) {
                    const Edge& ed = edges_[static_cast<std::size_t>(e)];
                    if (ed.cap > 0 && !seen[static_cast<std::size_t>(ed.to)]) {
                        seen[static_cast<std::size_t>(ed.to)] = true;
                        stack.push_back(ed.to);
                    }
                }
            }
            for (int w = 0; w < n_; ++w)
                if (w != s && w != v && seen[static_cast<std::size_t>(in_of(w))] &&
                    !seen[static_cast<std::size_t>(out_of(w))])
                    cut->push_back(w);
        }
        return flow;
    }

private:
    struct Edge {
        int to;
        int cap;
        int rev;
    };

    int in_of(int w) const { return 2 * w; }
    int out_of(int w) const { return 2 * w + 1; }

    void add_edge(int a, int b, int cap) {
        graph_[static_cast<std::size_t>(a)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({b, cap, static_cast<int>(edges_.size()) + 1});
        graph_[static_cast<std::size_t>(b)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({a, 0, static_cast<int>(edges_.size()) - 1});
    }

    void build(int s, int v) {
        nodes_ = 2 * n_;
        graph_.assign(static_cast<std::size_t>(nodes_), {});
        edges_.clear();
        const int inf = 1 << 29;
        for (int w = 0; w < n_; ++w)
            add_edge(in_of(w), out_of(w), (w == s || w == v) ? inf : 1);
        for (int u = 0; u < n_; ++u)
            for_each_bit(t_.out_row(u), [&](int w) { add_edge(out_of(u), in_of(w), inf); });
        src_ = out_of(s);
        sink_ = in_of(v);
        level_.assign(static_cast<std::size_t>(nodes_), -1);
        it_.assign(static_cast<std::size_t>(nodes_), 0);
    }

    bool bfs_levels() {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> q{src_};
        level_[static_cast<std::size_t>(src_)] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int e : graph_[static_cast<std::size_t>(u)]) {
                const Edge& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] < 0) {
                    level_[static_cast<std::size_t>(ed.to)] =
                        level_[static_cast<std::size_t>(u)] + 1;
                    q.push_back(ed.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink_)] >= 0;
    }

    int dfs(int u, int goal, int pushed) {
        if (u == goal) return pushed;
        for (int& i = it_[static_cast<std::size_t>(u)];
             i < static_cast<int>(graph_[static_cast<std::size_t>(u)].size()); ++i) {
            int e = graph_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
            Edge& ed = edges_[static_cast<std::size_t>(e)];
            if (ed.cap <= 0 || level_[static_cast<std::size_t>(ed.to)] !=
                                   level_[static_cast<std::size_t>(u)] + 1)
                continue;
            int got = dfs(ed.to, goal, std::min(pushed, ed.cap));
            if (got > 0) {
                ed.cap -= got;
                edges_[static_cast<std::size_t>(ed.rev)].cap += got;
                return got;
            }
        }
        return 0;
    }

    const Tournament& t_;
    int n_;
    int nodes_ = 0;
    int src_ = 0, sink_ = 0;
    std::vector<std::vector<int>> graph_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<int> it_;
};

} // namespace

CutResult connectivity(const Tournament& t) {
    const int n = t.order();
    if (n < 3 || !is_strong(t)) return {0, {}};

    SplitFlow flow(t);
    int best = n - 2;  // removing all but two nodes always works
    std::vector<int> best_cut;
    std::vector<int> scratch;

    auto probe_pair = [&](int u, int v) {
        if (u == v || t.arc(u, v)) return;
        int f = flow.local_cut(u, v, best, &scratch);
        if (f < best || (f == best && best_cut.empty() && f < n - 2)) {
            best = f;
            best_cut = scratch;
        }
    };

    if (n <= 64) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) probe_pair(u, v);
    } else {
        // Pivot reduction: any min cut of size k misses one of the first k+1
        // pivots, so probing all pairs through pivots 0..best is exhaustive.
        for (int pivot = 0; pivot <= best && pivot < n; ++pivot) {
            for (int w = 0; w < n; ++w) {
                probe_pair(pivot, w);
                probe_pair(w, pivot);
            }
        }
    }

    if (best == n - 2 && best_cut.empty()) {
        for (int w = 2; w < n; ++w) best_cut.push_back(w);  // keep nodes {0,1}
    }
    if (is_strong_without(t, best_cut)) throw std::logic_error("connectivity witness failed");
    return {best, best_cut};
}

// --------------------------------------------------------------- domination

namespace {

std::vector<std::uint64_t> closed_out_row(const Tournament& t, int u) {
    std::vector<std::uint64_t> r(t.out_row(u).begin(), t.out_row(u).end());
    r[static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
    return r;
}

bool covers_all(const std::vector<std::uint64_t>& cov, const std::vector<std::uint64_t>& full) {
    for (std::size_t k = 0; k < cov.size(); ++k)
        if ((cov[k] & full[k]) != full[k]) return false;
    return true;
}

} // namespace

bool is_in_dominating(const Tournament& t, const std::vector<int>& s) {
    const int words = t.words_per_row();
    std::vector<std::uint64_t> cov(static_cast<std::size_t>(words), 0);
    for (int u : s) {
        if (u < 0 || u >= t.order()) throw precondition_error("set index out of range");
        auto r = closed_out_row(t, u);
        for (int k = 0; k < words; ++k) cov[static_cast<std::size_t>(k)] |= r[static_cast<std::size_t>(k)];
    }
    auto full = all_alive(t.matrix());
    return covers_all(cov, full);
}

bool is_out_dominating(const Tournament& t, const std::vector<int>& s) {
    // v has an out-neighbor in S  <=>  v has an in-neighbor in S in reverse(T).
    return is_in_dominating(reverse(t), s);
}

bool is_minimal_in_dominating(const Tournament& t, const std::vector<int>& s) {
    if (!is_in_dominating(t, s)) return false;
    // In-domination is monotone, so dropping single elements suffices.
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) sub.push_back(s[j]);
        if (is_in_dominating(t, sub)) return false;
    }
    return true;
}

namespace {

DominationResult in_domination(const Tournament& t) {
    const int n = t.order();
    const int words = t.words_per_row();
    auto full = all_alive(t.matrix());

    // Greedy: repeatedly take the node covering the most uncovered nodes.
    std::vector<int> greedy;
    {
        std::vector<std::uint64_t> cov(static_cast<std::size_t>(words), 0);
        while (!covers_all(cov, full)) {
            int best = -1;
            std::size_t best_gain = 0;
            for (int u = 0; u < n; ++u) {
                auto r = closed_out_row(t, u);
                std::size_t gain = 0;
                for (int k = 0; k < words; ++k)
                    gain += std::popcount(r[static_cast<std::size_t>(k)] &
                                          full[static_cast<std::size_t>(k)] &
                                          ~cov[static_cast<std::size_t>(k)]);
                if (best < 0 || gain > best_gain) {
                    best = u;
                    best_gain = gain;
                }
            }
            greedy.push_back(best);
            auto r = closed_out_row(t, best);
            for (int k = 0; k < words; ++k) cov[static_cast<std::size_t>(k)] |= r[static_cast<std::size_t>(k)];
        }
    }

    // Exact: try every size below the greedy bound, smallest first.
    std::vector<int> picked;
    std::vector<std::vector<std::uint64_t>> stack_cov;
    for (int k = 1; k < static_cast<int>(greedy.size()); ++k) {
        picked.clear();
        stack_cov.assign(1, std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
        std::vector<int> found;
        auto rec = [&](auto&& self, int start, int remaining) -> bool {
            if (remaining == 0) return covers_all(stack_cov.back(), full);
            for (int u = start; u <= n - remaining; ++u) {
                auto r = closed_out_row(t, u);
                auto next = stack_cov.back();
                for (int q = 0; q < words; ++q) next[static_cast<std::size_t>(q)] |= r[static_cast<std::size_t>(q)];
                picked.push_back(u);
                stack_cov.push_back(std::move(next));
                if (self(self, u + 1, remaining - 1)) return true;
                stack_cov.pop_back();
                picked.pop_back();
            }
            return false;
        };
        if (rec(rec, 0, k)) return {k, picked};
    }
    return {static_cast<int>(greedy.size()), greedy};
}

} // namespace

DominationResult domination(const Tournament& t, Direction dir) {
    if (dir == Direction::in) {
        auto r = in_domination(t);
        if (!is_in_dominating(t, r.witness)) throw std::logic_error("domination witness failed");
        return r;
    }
    auto r = in_domination(reverse(t));
    if (!is_out_dominating(t, r.witness)) throw std::logic_error("domination witness failed");
    return r;
}

CloneLiftCheck check_indominating_clone_lift(const Tournament& g0, const std::vector<int>& s) {
    CloneLiftCheck c;
    c.in_dominating = is_in_dominating(g0, s);
    c.out_dominating = is_out_dominating(g0, s);
    auto [g1, cm] = ilmt_step(g0, 0);
    std::vector<int> clones;
    clones.reserve(s.size());
    for (int x : s) clones.push_back(cm.clone_of(x));
    c.lifted_in_dominating = is_in_dominating(g1, clones);
    return c;
}

// ----------------------------------------------------------------- coloring

namespace {

// Single-word class masks; valid for n <= 64.
struct ColorSearch {
    const Tournament& t;
    int n;
    std::vector<std::uint64_t> out;  // out-rows as single words
    std::vector<std::uint64_t> in;

    explicit ColorSearch(const Tournament& tt) : t(tt), n(tt.order()) {
        out.resize(static_cast<std::size_t>(n));
        in.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::uint64_t o = 0;
            for_each_bit(t.out_row(v), [&](int w) { o |= std::uint64_t{1} << w; });
            out[static_cast<std::size_t>(v)] = o;
        }
        std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (int v = 0; v < n; ++v)
            in[static_cast<std::size_t>(v)] =
                full & ~out[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    }

    // Placing v into a class with member set `mask` creates a 3-cycle iff
    // some arc runs from N+(v) ∩ mask into N-(v) ∩ mask.
    bool conflict(int v, std::uint64_t mask) const {
        std::uint64_t heads = in[static_cast<std::size_t>(v)] & mask;
        if (!heads) return false;
        std::uint64_t tails = out[static_cast<std::size_t>(v)] & mask;
        while (tails) {
            int a = std::countr_zero(tails);
            tails &= tails - 1;
            if (out[static_cast<std::size_t>(a)] & heads) return true;
        }
        return false;
    }

    bool decide(int k, std::vector<int>* coloring) {
        std::vector<std::uint64_t> classes(static_cast<std::size_t>(k), 0);
        std::vector<int> assign(static_cast<std::size_t>(n), -1);
        auto rec = [&](auto&& self, int v, int used) -> bool {
            if (v == n) return true;
            int open = std::min(used + 1, k);
            for (int c = 0; c < open; ++c) {
                if (conflict(v, classes[static_cast<std::size_t>(c)])) continue;
                classes[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
                assign[static_cast<std::size_t>(v)] = c;
                if (self(self, v + 1, std::max(used, c + 1))) return true;
                classes[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << v);
                assign[static_cast<std::size_t>(v)] = -1;
            }
            return false;
        };
        if (!rec(rec, 0, 0)) return false;
        if (coloring) *coloring = assign;
        return true;
    }

    // First-fit along the given order.
    std::vector<int> greedy(const std::vector<int>& order) const {
        std::vector<std::uint64_t> classes;
        std::vector<int> assign(static_cast<std::size_t>(n), -1);
        for (int v : order) {
            bool placed = false;
            for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
                if (!conflict(v, classes[c])) {
                    classes[c] |= std::uint64_t{1} << v;
                    assign[static_cast<std::size_t>(v)] = static_cast<int>(c);
                    placed = true;
                }
            }
            if (!placed) {
                classes.push_back(std::uint64_t{1} << v);
                assign[static_cast<std::size_t>(v)] = static_cast<int>(classes.size()) - 1;
            }
        }
        return assign;
    }
};

std::vector<int> degree_order(const Tournament& t) {
    std::vector<int> order(static_cast<std::size_t>(t.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });
    return order;
}

} // namespace

bool coloring_is_valid(const Tournament& t, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != t.order()) return false;
    int k = 0;
    for (int c : coloring) {
        if (c < 0) return false;
        k = std::max(k, c + 1);
    }
    for (int c = 0; c < k; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < t.order(); ++v)
            if (coloring[static_cast<std::size_t>(v)] == c) cls.push_back(v);
        // The class must induce a linear order: no directed 3-cycle.
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                for (std::size_t l = j + 1; l < cls.size(); ++l) {
                    int x = cls[i], y = cls[j], z = cls[l];
                    int od_x = (t.arc(x, y) ? 1 : 0) + (t.arc(x, z) ? 1 : 0);
                    int od_y = (t.arc(y, x) ? 1 : 0) + (t.arc(y, z) ? 1 : 0);
                    int od_z = (t.arc(z, x) ? 1 : 0) + (t.arc(z, y) ? 1 : 0);
                    if (od_x == 1 && od_y == 1 && od_z == 1) return false;
                }
    }
    return true;
}

bool colorable_with(const Tournament& t, int k, std::vector<int>* coloring) {
    if (t.order() > 64) throw cap_error("coloring decision capped at 64 nodes");
    if (k < 1) return false;
    ColorSearch cs(t);
    return cs.decide(k, coloring);
}

ColoringResult chromatic_upper_bound(const Tournament& t) {
    if (t.order() > 64) throw cap_error("greedy coloring capped at 64 nodes");
    ColorSearch cs(t);
    auto assign = cs.greedy(degree_order(t));
    ColoringResult r;
    r.coloring = assign;
    r.chi = *std::max_element(assign.begin(), assign.end()) + 1;
    r.exact = false;
    if (!coloring_is_valid(t, r.coloring)) throw std::logic_error("greedy coloring invalid");
    return r;
}

ColoringResult chromatic_number(const Tournament& t) {
    if (t.order() > kChromaticCap)
        throw cap_error("exact chromatic number capped at " + std::to_string(kChromaticCap) +
                        " nodes, got " + std::to_string(t.order()));
    ColoringResult ub = chromatic_upper_bound(t);
    int lb = census3_bruteforce(t).a == 0 ? 1 : 2;
    ColoringResult best = ub;
    best.exact = true;
    for (int k = lb; k < ub.chi; ++k) {
        std::vector<int> coloring;
        if (colorable_with(t, k, &coloring)) {
            best.chi = k;
            best.coloring = coloring;
            break;
        }
    }
    if (best.chi == ub.chi) best.coloring = ub.coloring;
    if (!coloring_is_valid(t, best.coloring)) throw std::logic_error("chromatic witness invalid");
    return best;
}

ChiStepReport verify_chi_step_theorems(const Tournament& g0, ChiStepMode mode) {
    ChiStepReport rep;
    rep.mode = mode;
    rep.chi0 = chromatic_number(g0).chi;
    rep.all_ok = true;

    auto add_exact = [&](const std::string& label, const Tournament& g, int bound) {
        ChiStepTrial trial;
        trial.label = label;
        trial.chi_before = rep.chi0;
        trial.chi_after = chromatic_number(g).chi;
        trial.exact = true;
        trial.bound = bound;
        trial.within_bound = trial.chi_after <= bound;
        rep.all_ok = rep.all_ok && trial.within_bound;
        rep.trials.push_back(trial);
    };

    if (mode == ChiStepMode::one_step) {
        auto [g1, cm] = ilmt_step(g0, 1);
        ChiStepTrial trial;
        trial.label = "1-step";
        trial.chi_before = rep.chi0;
        trial.chi_after = chromatic_number(g1).chi;
        trial.exact = true;
        trial.bound = rep.chi0;
        trial.within_bound = trial.chi_after == rep.chi0;
        rep.all_ok = trial.within_bound;
        rep.trials.push_back(trial);
        return rep;
    }

    // 2t zero-steps must satisfy chi <= (2^{t+1}-1) chi0.
    Tournament g = g0;
    for (int i = 0; i < 2; ++i) g = ilmt_step(g, 0).first;
    if (g.order() <= kChromaticCap) {
        add_exact("2 zero-steps", g, 3 * rep.chi0);
    }
    if (static_cast<long>(g0.order()) * 16 <= 64) {
        Tournament g4 = g;
        for (int i = 0; i < 2; ++i) g4 = ilmt_step(g4, 0).first;
        ChiStepTrial trial;
        trial.label = "4 zero-steps (heuristic)";
        trial.chi_before = rep.chi0;
        ColoringResult ub = chromatic_upper_bound(g4);
        trial.chi_after = ub.chi;
        trial.exact = false;
        trial.bound = 7 * rep.chi0;
        // A heuristic coloring within the bound certifies the inequality;
        // beyond it the trial is inconclusive rather than failed.
        trial.within_bound = ub.chi <= trial.bound;
        rep.trials.push_back(trial);
    }
    return rep;
}

} // namespace ilmt
