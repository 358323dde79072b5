#ifndef ILMT_TOURNAMENT_HPP
#define ILMT_TOURNAMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilmt/bitmatrix.hpp"

namespace ilmt {

// Sorted in/out degree multisets. For a tournament the two determine each
// other (in = n-1-out), but both are kept so oriented graphs can reuse this.
struct DegreeProfile {
    std::vector<int> out_degrees;
    std::vector<int> in_degrees;
    bool operator==(const DegreeProfile&) const = default;
};

// Dense tournament on nodes 0..n-1: exactly one arc per unordered pair,
// no self-loops. Immutable after construction.
class Tournament {
public:
    Tournament() = default;

    // Validated constructor: arcs must form a complete orientation.
    // Reports the offending pair on duplicate/antiparallel/self-loop/missing.
    static Tournament build(int n, const std::vector<std::pair<int, int>>& arcs);

    // Adopts an already-complete adjacency matrix. Full validation only when
    // `validate` is set (steps construct rows that are complete by
    // construction and assert in debug builds).
    static Tournament adopt(BitMatrix adj, bool validate = false);

    int order() const { return adj_.order(); }
    bool arc(int u, int v) const { return adj_.get(u, v); }
    std::span<const std::uint64_t> out_row(int u) const { return adj_.row(u); }
    int words_per_row() const { return adj_.words_per_row(); }
    std::uint64_t tail_mask() const { return adj_.tail_mask(); }

    // In-row of u into caller-provided scratch: complement of the out-row
    // minus the diagonal bit (valid because the orientation is complete).
    void in_row(int u, std::span<std::uint64_t> dst) const;

    int out_degree(int u) const { return static_cast<int>(popcount_row(adj_.row(u))); }
    int in_degree(int u) const { return order() - 1 - out_degree(u); }

    const BitMatrix& matrix() const { return adj_; }

    // Checks no self-loops, completeness and clean trailing bits; throws
    // parse_error describing the first violation.
    void validate() const;

    bool operator==(const Tournament&) const = default;

private:
    explicit Tournament(BitMatrix adj) : adj_(std::move(adj)) {}
    BitMatrix adj_;
};

// Directed graph with at most one arc per pair and no self-loops;
// completeness is not required.
class OrientedGraph {
public:
    OrientedGraph() = default;
    static OrientedGraph build(int n, const std::vector<std::pair<int, int>>& arcs);
    static OrientedGraph adopt(BitMatrix adj, bool validate = false);
    static OrientedGraph from_tournament(const Tournament& t) {
        return OrientedGraph(t.matrix());
    }

    int order() const { return adj_.order(); }
    bool arc(int u, int v) const { return adj_.get(u, v); }
    std::span<const std::uint64_t> out_row(int u) const { return adj_.row(u); }
    std::size_t arc_count() const;
    const BitMatrix& matrix() const { return adj_; }
    void validate() const;

    bool operator==(const OrientedGraph&) const = default;

private:
    explicit OrientedGraph(BitMatrix adj) : adj_(std::move(adj)) {}
    BitMatrix adj_;
};

// Arc-reversal (an involution). For tournaments the result is again a
// tournament.
Tournament reverse(const Tournament& t);
OrientedGraph reverse(const OrientedGraph& g);

// Subtournament induced by `nodes`, relabeled 0..|nodes|-1 in ascending node
// order. Throws on empty set, out-of-range or duplicate indices.
Tournament induced(const Tournament& t, const std::vector<int>& nodes);
OrientedGraph induced(const OrientedGraph& g, const std::vector<int>& nodes);

// Brute-force isomorphism with out-degree pruning; intended for n <= 10
// (throws cap_error beyond). Returns a witness permutation p with
// arc(u,v) in a  <=>  arc(p[u],p[v]) in b.
std::optional<std::vector<int>> isomorphism(const Tournament& a, const Tournament& b);
bool is_isomorphic(const Tournament& a, const Tournament& b);

// Number of arc-preserving permutations; n <= 10.
long automorphism_count(const Tournament& t);

DegreeProfile degree_profile(const Tournament& t);
DegreeProfile degree_profile(const OrientedGraph& g);

// Exact source/sink sets (each has size 0 or 1 for a tournament).
std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(const Tournament& t);

std::vector<std::pair<int, int>> arcs_of(const Tournament& t);
std::vector<std::pair<int, int>> arcs_of(const OrientedGraph& g);

} // namespace ilmt

#endif
