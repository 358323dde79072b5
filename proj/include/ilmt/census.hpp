#ifndef ILMT_CENSUS_HPP
#define ILMT_CENSUS_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilmt/generate.hpp"
#include "ilmt/sequence.hpp"
#include "ilmt/tournament.hpp"

namespace ilmt {

// Exact 3-node motif counts: a = directed 3-cycles (D3), b = transitive
// triples (T3); a + b = C(n,3).
struct Census3 {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    int order = 0;
};

// Recurrence output in exact big integers (counts overflow 64 bits near
// t ~ 20 already for n0 = 3).
struct RecurrenceCensus {
    mpz_class a;
    mpz_class b;
    mpz_class order;
};

// Exact 4-node motif counts by isomorphism type. The four types are
// distinguished by out-degree multiset: (0,1,2,3) linear order, (1,1,1,3)
// Winner, (0,2,2,2) Loser, (1,1,2,2) Mixed.
struct Census4 {
    std::uint64_t t4 = 0;
    std::uint64_t winner = 0;
    std::uint64_t loser = 0;
    std::uint64_t mixed = 0;
    int order = 0;

    std::uint64_t total() const { return t4 + winner + loser + mixed; }
    std::array<std::uint64_t, 4> counts() const { return {t4, winner, loser, mixed}; }
};

// Automorphism-corrected motif density
//   d*(H in G) = |Aut(H)| n(H,G) / (|V(H)|! C(|V(G)|,|V(H)|)),
// exact rational.
struct DensityReport {
    std::string motif;
    mpq_class d_star;
    long aut = 0;
    mpz_class copies;  // n(H,G): node subsets inducing a copy of H
    int motif_order = 0;
    int host_order = 0;
};

// 0-step transition on 4-type proportion vectors (P, W, L, M order) and its
// stationary distribution. Column-stochastic: sigma_t = T sigma_{t-1}.
struct MarkovModel {
    std::array<std::array<mpq_class, 4>, 4> transition;
    std::array<mpq_class, 4> stationary;

    std::array<mpq_class, 4> apply(const std::array<mpq_class, 4>& sigma) const;
};

struct TraceRow {
    int t = 0;
    int order = 0;
    std::uint64_t a = 0;  // D3 triples
    std::uint64_t b = 0;  // T3 triples
    Census4 counts4;
    std::array<mpq_class, 4> sigma;      // measured 4-type proportions
    mpq_class d_star_t4;                 // = sigma[0] / 24
    std::array<mpq_class, 4> predicted;  // Markov iterate (identity on 1-steps)
};

struct Trace {
    std::vector<TraceRow> rows;
    bool truncated = false;   // census cap reached before t_max
    int last_step = 0;
};

inline constexpr int kCensus4Cap = 1536;

mpz_class binomial(const mpz_class& n, unsigned long k);

// 4-node type of a 4-node tournament by out-degree multiset: 0 = linear
// order, 1 = Winner, 2 = Loser, 3 = Mixed.
int motif4_type(const Tournament& t);
const char* motif4_name(int type);

// Bit-parallel count over row intersections: the D3 count is
// (1/3) sum over arcs (u,v) of |N+(v) ∩ N-(u)|.
Census3 census3_bruteforce(const Tournament& t);

// Exact fold of the step recurrence
//   a_t = 2^(s(t)+2) a_{t-1} + (1 - s(t)) C(2^(t-1) n0 + 1, 3).
RecurrenceCensus census3_recurrence(int n0, const mpz_class& a0, const GeneratingSequence& s,
                                    int t);

enum class LimitRegime { all_ones, infinite_support };

// Limit of the D3 proportion: n0(n0-1)(n0-2) mu / n0^3 for the all-ones
// sequence (mu = a0 / C(n0,3)), 1/4 for infinite support.
mpq_class d3_proportion_limit(int n0, const mpz_class& a0, LimitRegime regime);

// Exact 4-type census. Counted per distinguished vertex: a linear order by
// its source over a transitive triple, Winner/Loser by the vertex dominating
// (dominated by) a 3-cycle, Mixed from the D3-extension identity
// W + L + 2M = a (n-3). Throws cap_error above kCensus4Cap.
Census4 census4(const Tournament& t, int threads = 1, int cap = kCensus4Cap);

DensityReport density(const Tournament& g, const Tournament& h);

MarkovModel markov_model();

Trace quasirandom_trace(const Tournament& g0, const GeneratingSequence& s, int t_max,
                        int threads = 1, std::size_t max_nodes = kDefaultMaxNodes);

// First step 1 <= t <= t_max at which the two generated tournaments have
// different degree profiles, or nullopt if none is found.
std::optional<int> distinguish_sequences(const Tournament& g0, const GeneratingSequence& s,
                                         const GeneratingSequence& s_prime, int t_max,
                                         std::size_t max_nodes = kDefaultMaxNodes);

} // namespace ilmt

#endif
