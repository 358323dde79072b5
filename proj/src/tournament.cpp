#include "ilmt/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ilmt/errors.hpp"

namespace ilmt {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_indices(int n, const std::vector<int>& nodes) {
    if (nodes.empty()) throw precondition_error("node subset is empty");
    for (int v : nodes)
        if (v < 0 || v >= n)
            throw precondition_error("node index " + std::to_string(v) + " out of range");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i] == nodes[i - 1])
            throw precondition_error("duplicate node index " + std::to_string(nodes[i]));
}

BitMatrix induced_matrix(const BitMatrix& adj, const std::vector<int>& sorted_nodes) {
    int m = static_cast<int>(sorted_nodes.size());
    BitMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && adj.get(sorted_nodes[i], sorted_nodes[j])) out.set(i, j);
    return out;
}

BitMatrix arcs_to_matrix(int n, const std::vector<std::pair<int, int>>& arcs,
                         bool require_complete) {
    if (n <= 0) throw precondition_error("order must be positive");
    BitMatrix adj(n);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("arc " + pair_str(u, v) + " out of range for order " +
                              std::to_string(n));
        if (u == v) throw parse_error("self-loop " + pair_str(u, v));
        if (adj.get(u, v)) throw parse_error("duplicate arc " + pair_str(u, v));
        if (adj.get(v, u)) throw parse_error("antiparallel pair " + pair_str(u, v));
        adj.set(u, v);
    }
    if (require_complete) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!adj.get(i, j) && !adj.get(j, i))
                    throw parse_error("missing arc for pair " + pair_str(i, j));
    }
    return adj;
}

} // namespace

Tournament Tournament::build(int n, const std::vector<std::pair<int, int>>& arcs) {
    return Tournament(arcs_to_matrix(n, arcs, /*require_complete=*/true));
}

Tournament Tournament::adopt(BitMatrix adj, bool validate) {
    Tournament t{std::move(adj)};
    if (validate) t.validate();
#ifndef NDEBUG
    t.validate();
#endif
    return t;
}

void Tournament::in_row(int u, std::span<std::uint64_t> dst) const {
    auto out = adj_.row(u);
    for (std::size_t k = 0; k < out.size(); ++k) dst[k] = ~out[k];
    dst[out.size() - 1] &= adj_.tail_mask();
    dst[static_cast<std::size_t>(u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

void Tournament::validate() const {
    int n = order();
    if (n <= 0) throw parse_error("tournament has no nodes");
    for (int i = 0; i < n; ++i) {
        auto r = adj_.row(i);
        if ((r[r.size() - 1] & ~adj_.tail_mask()) != 0)
            throw parse_error("row " + std::to_string(i) + " has bits past the order");
        if (adj_.get(i, i)) throw parse_error("self-loop at node " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj_.get(i, j) == adj_.get(j, i))
                throw parse_error("pair " + pair_str(i, j) +
                                  (adj_.get(i, j) ? " has both arcs" : " has no arc"));
}

OrientedGraph OrientedGraph::build(int n, const std::vector<std::pair<int, int>>& arcs) {
    return OrientedGraph(arcs_to_matrix(n, arcs, /*require_complete=*/false));
}

OrientedGraph OrientedGraph::adopt(BitMatrix adj, bool validate) {
    OrientedGraph g{std::move(adj)};
    if (validate) g.validate();
    return g;
}

std::size_t OrientedGraph::arc_count() const {
    std::size_t m = 0;
    for (int i = 0; i < order(); ++i) m += popcount_row(adj_.row(i));
    return m;
}

void OrientedGraph::validate() const {
    int n = order();
    if (n <= 0) throw parse_error("graph has no nodes");
    for (int i = 0; i < n; ++i) {
        auto r = adj_.row(i);
        if ((r[r.size() - 1] & ~adj_.tail_mask()) != 0)
            throw parse_error("row " + std::to_string(i) + " has bits past the order");
        if (adj_.get(i, i)) throw parse_error("self-loop at node " + std::to_string(i));
        for (int j = i + 1; j < n; ++j)
            if (adj_.get(i, j) && adj_.get(j, i))
                throw parse_error("pair " + pair_str(i, j) + " has both arcs");
    }
}

Tournament reverse(const Tournament& t) {
    return Tournament::adopt(t.matrix().transposed());
}

OrientedGraph reverse(const OrientedGraph& g) {
    return OrientedGraph::adopt(g.matrix().transposed());
}

Tournament induced(const Tournament& t, const std::vector<int>& nodes) {
    std::vector<int> s = nodes;
    std::sort(s.begin(), s.end());
    check_indices(t.order(), s);
    return Tournament::adopt(induced_matrix(t.matrix(), s));
}

OrientedGraph induced(const OrientedGraph& g, const std::vector<int>& nodes) {
    std::vector<int> s = nodes;
    std::sort(s.begin(), s.end());
    check_indices(g.order(), s);
    return OrientedGraph::adopt(induced_matrix(g.matrix(), s));
}

namespace {

constexpr int kIsoCap = 10;

// Backtracking arc-preserving extension; candidates restricted to equal
// out-degree. Calls fn(perm) for every completed mapping; stops when fn
// returns false.
template <typename Fn>
void for_each_isomorphism(const Tournament& a, const Tournament& b, Fn&& fn) {
    int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) da[v] = a.out_degree(v), db[v] = b.out_degree(v);
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    bool stop = false;
    auto rec = [&](auto&& self, int u) -> void {
        if (stop) return;
        if (u == n) {
            if (!fn(perm)) stop = true;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[u] != db[w]) continue;
            bool ok = true;
            for (int v = 0; v < u && ok; ++v)
                if (a.arc(u, v) != b.arc(w, perm[v]) || a.arc(v, u) != b.arc(perm[v], w))
                    ok = false;
            if (!ok) continue;
            perm[u] = w;
            used[w] = true;
            self(self, u + 1);
            used[w] = false;
            perm[u] = -1;
            if (stop) return;
        }
    };
    rec(rec, 0);
}

} // namespace

std::optional<std::vector<int>> isomorphism(const Tournament& a, const Tournament& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.order() > kIsoCap)
        throw cap_error("isomorphism search capped at " + std::to_string(kIsoCap) + " nodes");
    std::optional<std::vector<int>> witness;
    for_each_isomorphism(a, b, [&](const std::vector<int>& p) {
        witness = p;
        return false;
    });
    return witness;
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
    return isomorphism(a, b).has_value();
}

long automorphism_count(const Tournament& t) {
    if (t.order() > kIsoCap)
        throw cap_error("automorphism count capped at " + std::to_string(kIsoCap) + " nodes");
    long count = 0;
    for_each_isomorphism(t, t, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

DegreeProfile degree_profile(const Tournament& t) {
    int n = t.order();
    DegreeProfile p;
    p.out_degrees.reserve(n);
    for (int v = 0; v < n; ++v) p.out_degrees.push_back(t.out_degree(v));
    p.in_degrees.reserve(n);
    for (int d : p.out_degrees) p.in_degrees.push_back(n - 1 - d);
    std::sort(p.out_degrees.begin(), p.out_degrees.end());
    std::sort(p.in_degrees.begin(), p.in_degrees.end());
    return p;
}

DegreeProfile degree_profile(const OrientedGraph& g) {
    int n = g.order();
    DegreeProfile p;
    p.out_degrees.reserve(n);
    for (int v = 0; v < n; ++v)
        p.out_degrees.push_back(static_cast<int>(popcount_row(g.out_row(v))));
    BitMatrix tr = g.matrix().transposed();
    p.in_degrees.reserve(n);
    for (int v = 0; v < n; ++v) p.in_degrees.push_back(static_cast<int>(popcount_row(tr.row(v))));
    std::sort(p.out_degrees.begin(), p.out_degrees.end());
    std::sort(p.in_degrees.begin(), p.in_degrees.end());
    return p;
}

std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(const Tournament& t) {
    std::vector<int> sources, sinks;
    int n = t.order();
    for (int v = 0; v < n; ++v) {
        int d = t.out_degree(v);
        if (d == n - 1) sources.push_back(v);
        if (d == 0) sinks.push_back(v);
    }
    return {sources, sinks};
}

std::vector<std::pair<int, int>> arcs_of(const Tournament& t) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(t.order()) * (t.order() - 1) / 2);
    for (int u = 0; u < t.order(); ++u)
        for_each_bit(t.out_row(u), [&](int v) { arcs.emplace_back(u, v); });
    return arcs;
}

std::vector<std::pair<int, int>> arcs_of(const OrientedGraph& g) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.out_row(u), [&](int v) { arcs.emplace_back(u, v); });
    return arcs;
}

} // namespace ilmt
