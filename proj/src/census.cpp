#include "ilmt/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ilmt/errors.hpp"

namespace ilmt {

mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

namespace {

std::uint64_t binom_u64(std::uint64_t n, int k) {
    mpz_class b = binomial(mpz_class(static_cast<unsigned long>(n)), static_cast<unsigned long>(k));
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial exceeds 64 bits");
    return b.get_ui();
}

// Work-stealing row loop: fn(lo, hi) is summed over small blocks handed out
// by an atomic counter. uint64 addition is commutative, so the result does
// not depend on the worker count or scheduling.
template <typename Fn>
std::vector<std::array<std::uint64_t, 2>> chunked(int n, int threads, Fn&& fn) {
    threads = std::max(1, std::min(threads, n));
    std::vector<std::array<std::uint64_t, 2>> acc(static_cast<std::size_t>(threads), {{0, 0}});
    if (threads == 1) {
        acc[0] = fn(0, n);
        return acc;
    }
    const int block = std::max(1, n / (threads * 16));
    std::atomic<int> next{0};
    auto worker = [&](int w) {
        std::array<std::uint64_t, 2> local{0, 0};
        for (;;) {
            int lo = next.fetch_add(block);
            if (lo >= n) break;
            auto part = fn(lo, std::min(n, lo + block));
            local[0] += part[0];
            local[1] += part[1];
        }
        acc[static_cast<std::size_t>(w)] = local;
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
    return acc;
}

} // namespace

Census3 census3_bruteforce(const Tournament& t) {
    const int n = t.order();
    const int words = t.words_per_row();
    std::uint64_t triple_sum = 0;  // each 3-cycle contributes once per arc
    std::vector<std::uint64_t> in_u(static_cast<std::size_t>(words));
    for (int u = 0; u < n; ++u) {
        t.in_row(u, in_u);
        std::uint64_t local = 0;
        for_each_bit(t.out_row(u), [&](int v) { local += popcount_and(t.out_row(v), in_u); });
        triple_sum += local;
    }
    Census3 c;
    c.order = n;
    c.a = triple_sum / 3;
    c.b = (n >= 3 ? binom_u64(static_cast<std::uint64_t>(n), 3) : 0) - c.a;
    return c;
}

RecurrenceCensus census3_recurrence(int n0, const mpz_class& a0, const GeneratingSequence& s,
                                    int t) {
    if (n0 < 1) throw precondition_error("base order must be positive");
    if (t < 0 || t > s.length())
        throw precondition_error("step count outside the sequence prefix");
    if (a0 < 0 || a0 > binomial(n0, 3)) throw precondition_error("initial D3 count out of range");
    mpz_class a = a0;
    mpz_class order = n0;
    for (int i = 1; i <= t; ++i) {
        int bit = s.bit(i);
        a = (mpz_class(1) << (bit + 2)) * a + (1 - bit) * binomial(order + 1, 3);
        order *= 2;
    }
    return {a, binomial(order, 3) - a, order};
}

mpq_class d3_proportion_limit(int n0, const mpz_class& a0, LimitRegime regime) {
    if (regime == LimitRegime::infinite_support) return mpq_class(1, 4);
    if (n0 < 3) throw precondition_error("all-ones limit needs n0 >= 3");
    mpq_class mu(a0, binomial(n0, 3));
    mu.canonicalize();
    mpq_class factor(mpz_class(n0) * (n0 - 1) * (n0 - 2), mpz_class(n0) * n0 * n0);
    factor.canonicalize();
    return factor * mu;
}

Census4 census4(const Tournament& t, int threads, int cap) {
    const int n = t.order();
    if (n > cap)
        throw cap_error("4-motif census capped at " + std::to_string(cap) + " nodes, got " +
                        std::to_string(n));
    if (n < 4) {
        Census4 empty;
        empty.order = n;
        return empty;
    }
    const int words = t.words_per_row();
    const std::uint64_t tail = t.tail_mask();

    // One pass over cyclic triples (u the minimum node, u -> v -> w -> u):
    // Winner adds the common in-neighbors of the triple, Loser the common
    // out-neighbors. The self bits are excluded automatically because each
    // triple node lies in another's out-row.
    auto body = [&](int lo, int hi) -> std::array<std::uint64_t, 2> {
        std::uint64_t wcount = 0, lcount = 0;
        std::vector<std::uint64_t> in_u(static_cast<std::size_t>(words));
        std::vector<std::uint64_t> ge_mask(static_cast<std::size_t>(words));
        for (int u = lo; u < hi; ++u) {
            t.in_row(u, in_u);
            // nodes strictly above u
            for (int k = 0; k < words; ++k) ge_mask[static_cast<std::size_t>(k)] = 0;
            for (int k = (u + 1) >> 6; k < words; ++k)
                ge_mask[static_cast<std::size_t>(k)] = ~std::uint64_t{0};
            if (((u + 1) & 63) != 0)
                ge_mask[static_cast<std::size_t>((u + 1) >> 6)] =
                    ~((std::uint64_t{1} << ((u + 1) & 63)) - 1);
            ge_mask.back() &= tail;

            auto out_u = t.out_row(u);
            for (int k = 0; k < words; ++k) {
                std::uint64_t vb = out_u[k] & ge_mask[static_cast<std::size_t>(k)];
                while (vb) {
                    int v = k * 64 + std::countr_zero(vb);
                    vb &= vb - 1;
                    auto out_v = t.out_row(v);
                    for (int kw = 0; kw < words; ++kw) {
                        std::uint64_t wb = out_v[kw] & in_u[static_cast<std::size_t>(kw)] &
                                           ge_mask[static_cast<std::size_t>(kw)];
                        while (wb) {
                            int w = kw * 64 + std::countr_zero(wb);
                            wb &= wb - 1;
                            auto out_w = t.out_row(w);
                            for (int q = 0; q < words; ++q) {
                                std::uint64_t outs = out_u[q] | out_v[q] | out_w[q];
                                lcount += std::popcount(out_u[q] & out_v[q] & out_w[q]);
                                std::uint64_t m = (q == words - 1) ? tail : ~std::uint64_t{0};
                                wcount += std::popcount(~outs & m);
                            }
                        }
                    }
                }
            }
        }
        return {wcount, lcount};
    };

    std::uint64_t wcount = 0, lcount = 0;
    for (auto& part : chunked(n, threads, body)) {
        wcount += part[0];
        lcount += part[1];
    }

    std::uint64_t sum_c3 = 0;
    for (int v = 0; v < n; ++v) {
        int d = t.out_degree(v);
        if (d >= 3) sum_c3 += binom_u64(static_cast<std::uint64_t>(d), 3);
    }

    Census3 c3 = census3_bruteforce(t);

    Census4 c;
    c.order = n;
    c.winner = wcount;
    c.loser = lcount;
    c.t4 = sum_c3 - wcount;
    std::uint64_t mixed2 = c3.a * static_cast<std::uint64_t>(n - 3) - wcount - lcount;
    if (mixed2 % 2 != 0) throw std::logic_error("4-census parity check failed");
    c.mixed = mixed2 / 2;
    std::uint64_t expect = n >= 4 ? binom_u64(static_cast<std::uint64_t>(n), 4) : 0;
    if (c.total() != expect) throw std::logic_error("4-census total check failed");
    return c;
}

int motif4_type(const Tournament& t) {
    if (t.order() != 4) throw precondition_error("4-type classification needs order 4");
    std::array<int, 4> d;
    for (int v = 0; v < 4; ++v) d[static_cast<std::size_t>(v)] = t.out_degree(v);
    std::sort(d.begin(), d.end());
    if (d == std::array<int, 4>{0, 1, 2, 3}) return 0;
    if (d == std::array<int, 4>{1, 1, 1, 3}) return 1;
    if (d == std::array<int, 4>{0, 2, 2, 2}) return 2;
    return 3;  // (1,1,2,2) is the only remaining multiset for a tournament
}

const char* motif4_name(int type) {
    static const char* names[4] = {"T4", "Winner", "Loser", "Mixed"};
    return names[type];
}

DensityReport density(const Tournament& g, const Tournament& h) {
    const int hn = h.order();
    const int gn = g.order();
    if (hn < 3 || hn > 6) throw cap_error("density supports motifs on 3..6 nodes");
    if (hn > gn) throw precondition_error("motif larger than host");

    DensityReport r;
    r.motif_order = hn;
    r.host_order = gn;
    r.aut = automorphism_count(h);

    if (hn == 3) {
        Census3 c = census3_bruteforce(h);
        bool cyclic = c.a == 1;
        r.motif = cyclic ? "D3" : "T3";
        Census3 cg = census3_bruteforce(g);
        r.copies = mpz_class(static_cast<unsigned long>(cyclic ? cg.a : cg.b));
    } else if (hn == 4) {
        int ty = motif4_type(h);
        r.motif = motif4_name(ty);
        Census4 cg = census4(g);
        r.copies = mpz_class(static_cast<unsigned long>(cg.counts()[static_cast<std::size_t>(ty)]));
    } else {
        mpz_class subsets = binomial(gn, static_cast<unsigned long>(hn));
        if (subsets > 20'000'000)
            throw cap_error("direct subset classification too large: C(" + std::to_string(gn) +
                            "," + std::to_string(hn) + ")");
        r.motif = "order-" + std::to_string(hn);
        DegreeProfile hp = degree_profile(h);
        std::uint64_t copies = 0;
        std::vector<int> pick(static_cast<std::size_t>(hn));
        auto rec = [&](auto&& self, int idx, int next) -> void {
            if (idx == hn) {
                Tournament sub = induced(g, pick);
                if (degree_profile(sub) == hp && is_isomorphic(sub, h)) ++copies;
                return;
            }
            for (int v = next; v <= gn - (hn - idx); ++v) {
                pick[static_cast<std::size_t>(idx)] = v;
                self(self, idx + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
        r.copies = mpz_class(static_cast<unsigned long>(copies));
    }

    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(hn));
    mpq_class denom(fact * binomial(gn, static_cast<unsigned long>(hn)));
    r.d_star = mpq_class(r.aut * r.copies) / denom;
    r.d_star.canonicalize();
    return r;
}

std::array<mpq_class, 4> MarkovModel::apply(const std::array<mpq_class, 4>& sigma) const {
    std::array<mpq_class, 4> out;
    for (int i = 0; i < 4; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < 4; ++j)
            s += transition[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 sigma[static_cast<std::size_t>(j)];
        s.canonicalize();
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

MarkovModel markov_model() {
    MarkovModel m;
    const int num[4][4] = {{11, 3, 3, 3}, {1, 9, 1, 1}, {1, 1, 9, 1}, {3, 3, 3, 11}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m.transition[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mpq_class(num[i][j], 16);
    m.stationary = {mpq_class(3, 8), mpq_class(1, 8), mpq_class(1, 8), mpq_class(3, 8)};
    for (int j = 0; j < 4; ++j) {
        mpq_class col = 0;
        for (int i = 0; i < 4; ++i)
            col += m.transition[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (col != 1) throw std::logic_error("transition column does not sum to 1");
    }
    auto fixed = m.apply(m.stationary);
    for (int i = 0; i < 4; ++i)
        if (fixed[static_cast<std::size_t>(i)] != m.stationary[static_cast<std::size_t>(i)])
            throw std::logic_error("stationary vector is not fixed");
    return m;
}

Trace quasirandom_trace(const Tournament& g0, const GeneratingSequence& s, int t_max,
                        int threads, std::size_t max_nodes) {
    if (t_max < 0 || t_max > s.length())
        throw precondition_error("trace horizon outside the sequence prefix");
    Trace trace;
    MarkovModel model = markov_model();

    Tournament g = g0;
    std::array<mpq_class, 4> predicted{};
    bool seeded = false;
    for (int t = 0; t <= t_max; ++t) {
        if (t > 0) g = ilmt_step(g, s.bit(t), max_nodes).first;
        if (g.order() > kCensus4Cap) {
            trace.truncated = true;
            break;
        }
        TraceRow row;
        row.t = t;
        row.order = g.order();
        Census3 c3 = census3_bruteforce(g);
        row.a = c3.a;
        row.b = c3.b;
        row.counts4 = census4(g, threads);
        if (row.counts4.total() > 0) {
            mpz_class total(static_cast<unsigned long>(row.counts4.total()));
            auto counts = row.counts4.counts();
            for (int i = 0; i < 4; ++i) {
                auto& q = row.sigma[static_cast<std::size_t>(i)];
                q = mpq_class(
                    mpz_class(static_cast<unsigned long>(counts[static_cast<std::size_t>(i)])),
                    total);
                q.canonicalize();
            }
            row.d_star_t4 = row.sigma[0] / 24;
            row.d_star_t4.canonicalize();
        }
        // Markov iterate: seeded with the first measured proportions, then one
        // matrix application per 0-step (1-steps preserve 4-types exactly).
        if (seeded && t > 0 && s.bit(t) == 0) predicted = model.apply(predicted);
        if (!seeded && row.counts4.total() > 0) {
            predicted = row.sigma;
            seeded = true;
        }
        row.predicted = predicted;
        trace.rows.push_back(std::move(row));
        trace.last_step = t;
    }
    return trace;
}

std::optional<int> distinguish_sequences(const Tournament& g0, const GeneratingSequence& s,
                                         const GeneratingSequence& s_prime, int t_max,
                                         std::size_t max_nodes) {
    if (s.length() < t_max || s_prime.length() < t_max)
        throw precondition_error("both prefixes must cover the comparison horizon");
    Tournament a = g0, b = g0;
    for (int t = 1; t <= t_max; ++t) {
        a = ilmt_step(a, s.bit(t), max_nodes).first;
        b = ilmt_step(b, s_prime.bit(t), max_nodes).first;
        if (degree_profile(a) != degree_profile(b)) return t;
    }
    return std::nullopt;
}

} // namespace ilmt
