#include "ilmt/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "ilmt/census.hpp"
#include "ilmt/embed.hpp"
#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/generate.hpp"
#include "ilmt/props.hpp"
#include "ilmt/pursuit.hpp"

namespace ilmt {

namespace {

using Clock = std::chrono::steady_clock;

struct Collector {
    VerifyReport report;

    template <typename Fn>
    void check(const std::string& id, int criterion, Fn&& fn) {
        CheckResult r;
        r.id = id;
        r.criterion = criterion;
        auto t0 = Clock::now();
        fn(r);
        r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (r.pass)
            ++report.passed;
        else
            ++report.failed;
        report.checks.push_back(std::move(r));
    }
};

std::vector<GeneratingSequence> prefixes_of_length(int len) {
    std::vector<GeneratingSequence> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        GeneratingSequence s;
        for (int t = 0; t < len; ++t) s.bits.push_back((mask >> t) & 1);
        out.push_back(std::move(s));
    }
    return out;
}

std::string frac(const mpq_class& q) { return q.get_str(); }

bool within(const mpq_class& value, const mpq_class& target, const mpq_class& tol) {
    mpq_class diff = value - target;
    if (diff < 0) diff = -diff;
    return diff <= tol;
}

// ------------------------------------------------------------------- motifs

VerifyReport suite_motifs(int /*threads*/) {
    Collector c;
    c.report.suite = "motifs";

    for (int n0 : {3, 4, 5}) {
        c.check("recurrence-equals-census-n" + std::to_string(n0), 1, [&](CheckResult& r) {
            auto reps = all_tournaments(n0);
            long comparisons = 0, mismatches = 0;
            for (const auto& base : reps) {
                mpz_class a0(static_cast<unsigned long>(census3_bruteforce(base).a));
                for (int len = 1; len <= 4; ++len) {
                    for (const auto& s : prefixes_of_length(len)) {
                        Tournament g = base;
                        for (int t = 1; t <= len; ++t) {
                            g = ilmt_step(g, s.bit(t)).first;
                            Census3 brute = census3_bruteforce(g);
                            RecurrenceCensus rec = census3_recurrence(n0, a0, s, t);
                            ++comparisons;
                            if (rec.a != static_cast<unsigned long>(brute.a) ||
                                rec.b != static_cast<unsigned long>(brute.b))
                                ++mismatches;
                        }
                    }
                }
            }
            r.instance = std::to_string(reps.size()) + " classes x prefixes up to length 4";
            r.expected = "0 mismatches";
            r.observed = std::to_string(mismatches) + " mismatches in " +
                         std::to_string(comparisons) + " comparisons";
            r.pass = mismatches == 0;
        });
    }

    c.check("d3-proportion-all-ones", 2, [&](CheckResult& r) {
        const int t = 12;
        RecurrenceCensus rc = census3_recurrence(3, 1, GeneratingSequence::ones(t), t);
        mpq_class ratio(rc.a, binomial(rc.order, 3));
        ratio.canonicalize();
        mpq_class target = d3_proportion_limit(3, 1, LimitRegime::all_ones);
        r.instance = "base D3, all-ones prefix, t=12";
        r.expected = "within 1% of " + frac(target);
        r.observed = frac(ratio);
        r.pass = target == mpq_class(2, 9) && within(ratio, target, target / 100);
    });

    c.check("d3-proportion-alternating", 2, [&](CheckResult& r) {
        const int t = 14;
        GeneratingSequence s = GeneratingSequence::parse("01", 7);
        RecurrenceCensus rc = census3_recurrence(3, 1, s, t);
        mpq_class ratio(rc.a, binomial(rc.order, 3));
        ratio.canonicalize();
        mpq_class target = d3_proportion_limit(3, 1, LimitRegime::infinite_support);
        r.instance = "base D3, alternating 0101.., t=14";
        r.expected = "within 1% of " + frac(target);
        r.observed = frac(ratio);
        r.pass = target == mpq_class(1, 4) && within(ratio, target, target / 100);
    });

    c.check("pure-one-steps-scale-by-8", 2, [&](CheckResult& r) {
        bool ok = true;
        for (int t = 1; t <= 20 && ok; ++t) {
            RecurrenceCensus rc = census3_recurrence(3, 1, GeneratingSequence::ones(t), t);
            mpz_class expect = 1;
            mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(),
                         static_cast<mp_bitcnt_t>(3 * t));
            ok = rc.a == expect;
        }
        r.instance = "base D3, all-ones, t <= 20";
        r.expected = "a_t = 8^t a_0";
        r.observed = ok ? "holds" : "violated";
        r.pass = ok;
    });

    return c.report;
}

// -------------------------------------------------------------- quasirandom

VerifyReport suite_quasirandom(int threads) {
    Collector c;
    c.report.suite = "quasirandom";

    c.check("all-zeros-proportions-band", 3, [&](CheckResult& r) {
        const int t_max = 9;  // 3 * 2^9 = 1536 nodes, the census cap
        Trace trace = quasirandom_trace(d3(), GeneratingSequence::zeros(t_max), t_max, threads);
        const TraceRow& last = trace.rows.back();
        mpq_class band(8, last.order);
        band.canonicalize();
        std::array<mpq_class, 4> pi = markov_model().stationary;
        bool ok = last.t == t_max;
        mpq_class worst = 0;
        for (int i = 0; i < 4; ++i) {
            mpq_class dev = last.sigma[static_cast<std::size_t>(i)] -
                            pi[static_cast<std::size_t>(i)];
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
            ok = ok && dev <= band;
        }
        mpq_class dstar_dev = last.d_star_t4 - mpq_class(1, 64);
        if (dstar_dev < 0) dstar_dev = -dstar_dev;
        ok = ok && dstar_dev <= band;
        r.instance = "base D3, all-zeros, t=" + std::to_string(last.t) + ", n=" +
                     std::to_string(last.order);
        r.expected = "|sigma - pi| and |d*(T4) - 1/64| <= 8/n = " + frac(band);
        r.observed = "max coordinate deviation " + frac(worst) + ", d* deviation " +
                     frac(dstar_dev);
        r.pass = ok;
    });

    c.check("markov-fixed-point", 4, [&](CheckResult& r) {
        MarkovModel m = markov_model();
        bool cols = true;
        for (int j = 0; j < 4; ++j) {
            mpq_class sum = 0;
            for (int i = 0; i < 4; ++i)
                sum += m.transition[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            cols = cols && sum == 1;
        }
        auto img = m.apply(m.stationary);
        bool fixed = img == m.stationary;
        r.instance = "constant transition matrix";
        r.expected = "columns sum to 1 and T*pi = pi with pi = (3/8,1/8,1/8,3/8)";
        r.observed = std::string(cols ? "columns ok" : "columns wrong") + ", " +
                     (fixed ? "fixed point ok" : "fixed point wrong");
        r.pass = cols && fixed &&
                 m.stationary == std::array<mpq_class, 4>{mpq_class(3, 8), mpq_class(1, 8),
                                                          mpq_class(1, 8), mpq_class(3, 8)};
    });

    c.check("markov-matrix-from-lifts", 4, [&](CheckResult& r) {
        // Re-derive the matrix: every labeled 4-tournament, every clone subset
        // of its 0-step, classified by type.
        long hits[4][4] = {};
        long seen[4] = {};
        for (const auto& t : all_labeled_tournaments(4)) {
            int src = motif4_type(t);
            ++seen[src];
            Tournament g1 = ilmt_step(t, 0).first;
            for (int mask = 0; mask < 16; ++mask) {
                std::vector<int> pick;
                for (int v = 0; v < 4; ++v) pick.push_back((mask >> v) & 1 ? v + 4 : v);
                ++hits[motif4_type(induced(g1, pick))][src];
            }
        }
        MarkovModel m = markov_model();
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                mpq_class q(hits[i][j], seen[j] * 16);
                q.canonicalize();
                ok = ok &&
                     q == m.transition[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        r.instance = "64 labeled 4-tournaments x 16 clone subsets";
        r.expected = "empirical lift distribution equals the constant matrix";
        r.observed = ok ? "equal" : "different";
        r.pass = ok;
    });

    c.check("markov-power-iteration", 4, [&](CheckResult& r) {
        MarkovModel m = markov_model();
        int worst_iters = 0;
        bool ok = true;
        for (int start = 0; start < 4; ++start) {
            std::array<mpq_class, 4> v{};
            v[static_cast<std::size_t>(start)] = 1;
            int it = 0;
            for (; it <= 80; ++it) {
                double dev = 0;
                for (int i = 0; i < 4; ++i) {
                    mpq_class diff = v[static_cast<std::size_t>(i)] -
                                     m.stationary[static_cast<std::size_t>(i)];
                    dev = std::max(dev, std::abs(diff.get_d()));
                }
                if (dev <= 1e-9) break;
                v = m.apply(v);
            }
            worst_iters = std::max(worst_iters, it);
            ok = ok && it <= 80;
        }
        r.instance = "power iteration from each vertex distribution";
        r.expected = "within 1e-9 of pi in <= 80 iterations";
        r.observed = std::to_string(worst_iters) + " iterations worst case";
        r.pass = ok;
    });

    return c.report;
}

// ----------------------------------------------------------------- diameter

VerifyReport suite_diameter() {
    Collector c;
    c.report.suite = "diameter";
    for (int n0 : {3, 4, 5}) {
        c.check("diameter-after-zero-step-n" + std::to_string(n0), 5, [&](CheckResult& r) {
            long cases = 0, violations = 0, sinkfree = 0;
            for (const auto& base : all_tournaments(n0)) {
                if (!sources_and_sinks(base).second.empty()) continue;  // has a sink
                ++sinkfree;
                for (const auto& s : prefixes_of_length(3)) {
                    if (s.zeros_in_prefix(3) == 0) continue;
                    Tournament g = base;
                    bool past_zero = false;
                    for (int t = 1; t <= 3; ++t) {
                        g = ilmt_step(g, s.bit(t)).first;
                        if (s.bit(t) == 0) past_zero = true;
                        if (past_zero) {
                            ++cases;
                            auto d = diameter(g);
                            if (!d.has_value() || *d > 3) ++violations;
                        }
                    }
                }
            }
            r.instance = std::to_string(sinkfree) + " sink-free classes, prefixes of length 3 " +
                         "with a zero";
            r.expected = "diameter <= 3 from the first 0-step onward";
            r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                         " cases";
            r.pass = violations == 0;
        });
    }
    return c.report;
}

// ------------------------------------------------------------- connectivity

VerifyReport suite_connectivity() {
    Collector c;
    c.report.suite = "connectivity";
    for (int n0 = 1; n0 <= 6; ++n0) {
        if (n0 == 2) continue;  // the single arc is not strong
        c.check("kappa-doubles-n" + std::to_string(n0), 6, [&](CheckResult& r) {
            long cases = 0, violations = 0, strong = 0;
            for (const auto& base : all_tournaments(n0)) {
                if (!is_strong(base)) continue;
                ++strong;
                int k0 = connectivity(base).kappa;
                for (int bit : {0, 1}) {
                    ++cases;
                    int k1 = connectivity(ilmt_step(base, bit).first).kappa;
                    if (k1 < 2 * k0) ++violations;
                }
            }
            r.instance = std::to_string(strong) + " strong classes, both step kinds";
            r.expected = "kappa(step) >= 2 kappa(base)";
            r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                         " cases";
            r.pass = violations == 0;
        });
    }
    return c.report;
}

// --------------------------------------------------------------- domination

VerifyReport suite_domination() {
    Collector c;
    c.report.suite = "domination";

    c.check("gamma-out-invariant", 7, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                int g0 = domination(base, Direction::out).gamma;
                for (int len = 1; len <= 3; ++len) {
                    for (const auto& s : prefixes_of_length(len)) {
                        Tournament g = base;
                        for (int t = 1; t <= len; ++t) {
                            g = ilmt_step(g, s.bit(t)).first;
                            ++cases;
                            if (domination(g, Direction::out).gamma != g0) ++violations;
                        }
                    }
                }
            }
        }
        r.instance = "all classes n0 <= 5, prefixes <= 3";
        r.expected = "gamma+ constant across steps";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    c.check("gamma-in-invariant-sourceless", 7, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        std::string first;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                if (!sources_and_sinks(base).first.empty()) continue;
                int g0 = domination(base, Direction::in).gamma;
                for (int len = 1; len <= 3; ++len) {
                    for (const auto& s : prefixes_of_length(len)) {
                        Tournament g = base;
                        for (int t = 1; t <= len; ++t) {
                            g = ilmt_step(g, s.bit(t)).first;
                            ++cases;
                            int gt = domination(g, Direction::in).gamma;
                            if (gt != g0) {
                                ++violations;
                                if (first.empty())
                                    first = "n0=" + std::to_string(n0) + " s=" + s.to_string() +
                                            " t=" + std::to_string(t) + ": " +
                                            std::to_string(g0) + "->" + std::to_string(gt);
                            }
                        }
                    }
                }
            }
        }
        r.instance = "sourceless classes n0 <= 5, prefixes <= 3";
        r.expected = "gamma- constant across steps";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases" + (first.empty() ? "" : "; first: " + first);
        r.pass = violations == 0;
    });

    c.check("gamma-in-two-from-first-zero", 7, [&](CheckResult& r) {
        // Needs order >= 2 at the 0-step: the clone of a lone source is again
        // a source, so the single-node base reaches 2 only one 0-step later.
        long cases = 0, violations = 0;
        for (int n0 = 2; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                if (sources_and_sinks(base).first.empty()) continue;
                for (int len = 1; len <= 3; ++len) {
                    for (const auto& s : prefixes_of_length(len)) {
                        Tournament g = base;
                        bool past_zero = false;
                        for (int t = 1; t <= len; ++t) {
                            g = ilmt_step(g, s.bit(t)).first;
                            if (s.bit(t) == 0) past_zero = true;
                            if (past_zero) {
                                ++cases;
                                if (domination(g, Direction::in).gamma != 2) ++violations;
                            }
                        }
                    }
                }
            }
        }
        r.instance = "source-bearing classes 2 <= n0 <= 5, prefixes <= 3";
        r.expected = "gamma- = 2 from the first 0-step onward";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    c.check("indominating-lift-iff", 8, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                for (std::uint32_t mask = 0; mask < (1u << n0); ++mask) {
                    std::vector<int> s;
                    for (int v = 0; v < n0; ++v)
                        if ((mask >> v) & 1) s.push_back(v);
                    CloneLiftCheck lc = check_indominating_clone_lift(base, s);
                    ++cases;
                    if (lc.lifted_in_dominating != (lc.in_dominating && lc.out_dominating))
                        ++violations;
                }
            }
        }
        r.instance = "all classes n0 <= 5, all subsets";
        r.expected = "S' in-dominates the 0-step iff S in- and out-dominates the base";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    c.check("minimal-indominating-lift-iff", 8, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                auto [g1, cm] = ilmt_step(base, 0);
                for (std::uint32_t mask = 0; mask < (1u << n0); ++mask) {
                    std::vector<int> s, clones;
                    for (int v = 0; v < n0; ++v)
                        if ((mask >> v) & 1) {
                            s.push_back(v);
                            clones.push_back(cm.clone_of(v));
                        }
                    if (s.size() <= 1) continue;
                    ++cases;
                    if (is_minimal_in_dominating(g1, clones) !=
                        is_minimal_in_dominating(base, s))
                        ++violations;
                }
            }
        }
        r.instance = "all classes n0 <= 5, all subsets with |S| > 1";
        r.expected = "S' minimal in-dominating iff S minimal in-dominating";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    return c.report;
}

// --------------------------------------------------------------------- cops

VerifyReport suite_cops() {
    Collector c;
    c.report.suite = "cops";

    c.check("one-step-preserves-cop-number", 9, [&](CheckResult& r) {
        long cases = 0, violations = 0, sims = 0;
        for (int n0 = 1; n0 <= 4; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                Tournament stepped = ilmt_step(base, 1).first;
                SolveResult before = cop_number(base);
                SolveResult after = cop_number(stepped);
                ++cases;
                if (before.cop_number != after.cop_number) ++violations;
                ++sims;
                if (!simulate_capture(base, before.value, before.strategy).has_value())
                    ++violations;
                ++sims;
                if (!simulate_capture(stepped, after.value, after.strategy).has_value())
                    ++violations;
            }
        }
        r.instance = "all classes n0 <= 4";
        r.expected = "c(1-step) = c(base), strategies capture in simulation";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases, " + std::to_string(sims) + " strategy simulations";
        r.pass = violations == 0;
    });

    c.check("zero-step-band", 9, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 2; n0 <= 4; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                Tournament stepped = ilmt_step(base, 0).first;
                SolveResult s = cop_number(stepped);
                ++cases;
                if (s.cop_number < 2 || s.cop_number > 3) ++violations;
                if (!simulate_capture(stepped, s.value, s.strategy).has_value()) ++violations;
            }
        }
        r.instance = "all classes 2 <= n0 <= 4";
        r.expected = "2 <= c(0-step) <= 3";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    c.check("one-cop-iff-source", 9, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                ++cases;
                bool one_cop = cops_win(base, 1).cops_win;
                bool source = !sources_and_sinks(base).first.empty();
                if (one_cop != source) ++violations;
            }
        }
        r.instance = "all classes n0 <= 5";
        r.expected = "one cop wins iff the tournament has a source";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    return c.report;
}

// ----------------------------------------------------------------- coloring

VerifyReport suite_coloring() {
    Collector c;
    c.report.suite = "coloring";

    c.check("one-step-chi-equal", 10, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                ++cases;
                if (!verify_chi_step_theorems(base, ChiStepMode::one_step).all_ok) ++violations;
            }
        }
        r.instance = "all classes n0 <= 5";
        r.expected = "chi(1-step) = chi(base)";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    c.check("fixture-zero-step-deltas", 10, [&](CheckResult& r) {
        int cg0 = chromatic_number(fig_g()).chi;
        int ch0 = chromatic_number(fig_h()).chi;
        int ct0 = chromatic_number(fig_t()).chi;
        int cg1 = chromatic_number(ilmt_step(fig_g(), 0).first).chi;
        int ch1 = chromatic_number(ilmt_step(fig_h(), 0).first).chi;
        int ct1 = chromatic_number(ilmt_step(fig_t(), 0).first).chi;
        std::ostringstream obs;
        obs << "G: " << cg0 << "->" << cg1 << ", H: " << ch0 << "->" << ch1 << ", T: " << ct0
            << "->" << ct1;
        r.instance = "fixtures G (3 nodes), H (4 nodes), T (8 nodes), one 0-step";
        r.expected = "2->2, 2->3, 2->4";
        r.observed = obs.str();
        r.pass = cg0 == 2 && ch0 == 2 && ct0 == 2 && cg1 == 2 && ch1 == 3 && ct1 == 4;
    });

    c.check("hero-chromatic-lower-bound", 10, [&](CheckResult& r) {
        std::ostringstream obs;
        bool ok = true;
        for (int i = 1; i <= 4; ++i) {
            int chi = chromatic_number(hero(i)).chi;
            if (i > 1) obs << ", ";
            obs << "chi(S_" << i << ")=" << chi;
            ok = ok && chi >= i;
        }
        r.instance = "hero tournaments S_1..S_4 (S_4 has 15 nodes)";
        r.expected = "chi(S_i) >= i, exactly computed";
        r.observed = obs.str();
        r.pass = ok;
    });

    c.check("two-zero-steps-bound", 10, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (int n0 = 1; n0 <= 5; ++n0) {
            for (const auto& base : all_tournaments(n0)) {
                ChiStepReport rep = verify_chi_step_theorems(base, ChiStepMode::zero_pairs);
                for (const auto& trial : rep.trials) {
                    if (!trial.exact) continue;
                    ++cases;
                    if (!trial.within_bound) ++violations;
                }
            }
        }
        r.instance = "all classes n0 <= 5, two 0-steps, exact chi";
        r.expected = "chi(G_2) <= 3 chi(G_0)";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " cases";
        r.pass = violations == 0;
    });

    return c.report;
}

// ------------------------------------------------------------- universality

VerifyReport suite_universality() {
    Collector c;
    c.report.suite = "universality";

    c.check("sweep-order-3-into-t3", 11, [&](CheckResult& r) {
        auto entries = universality_sweep(t3(), 3);
        bool ok = entries.size() == 2;
        for (const auto& e : entries) ok = ok && e.verified && e.zeros_used == 3;
        r.instance = "both 3-node types into iterates of T3";
        r.expected = "verified embeddings, 3 zeros each";
        r.observed = std::to_string(entries.size()) + " targets";
        r.pass = ok;
    });

    c.check("sweep-order-4-into-all-bases", 11, [&](CheckResult& r) {
        long cases = 0, violations = 0;
        for (const auto& base : all_tournaments(4)) {
            for (const auto& e : universality_sweep(base, 4)) {
                ++cases;
                if (!e.verified || e.zeros_used != 4 || e.host_order != 64) ++violations;
            }
        }
        r.instance = "all four 4-node types into every 4-node base";
        r.expected = "verified embeddings, 4 zeros each, host order 64";
        r.observed = std::to_string(violations) + " violations in " + std::to_string(cases) +
                     " embeddings";
        r.pass = violations == 0 && cases == 16;
    });

    c.check("order-1-trivial-embedding", 11, [&](CheckResult& r) {
        EmbeddingMap e = embed(d3(), GeneratingSequence::parse("101"), single_node());
        r.instance = "single node into D3 along 101";
        r.expected = "r = position of the first zero = 2, verified";
        r.observed = "r = " + std::to_string(e.steps_total) + ", " +
                     (verify_embedding(e) ? "verified" : "broken");
        r.pass = e.steps_total == 2 && e.zeros_used == 1 && verify_embedding(e);
    });

    return c.report;
}

// -------------------------------------------------------------- distinguish

VerifyReport suite_distinguish() {
    Collector c;
    c.report.suite = "distinguish";

    struct Base {
        const char* name;
        Tournament t;
    };
    for (auto& [name, base] : {Base{"D3", d3()}, Base{"single-arc", single_arc()}}) {
        c.check(std::string("profiles-diverge-") + name, 12, [&](CheckResult& r) {
            long pairs = 0, diverged = 0;
            std::vector<std::string> impossible;
            for (int len = 1; len <= 3; ++len) {
                auto prefs = prefixes_of_length(len);
                for (std::size_t i = 0; i < prefs.size(); ++i) {
                    for (std::size_t j = i + 1; j < prefs.size(); ++j) {
                        ++pairs;
                        auto div = distinguish_sequences(base, prefs[i], prefs[j], len);
                        if (div.has_value())
                            ++diverged;
                        else
                            impossible.push_back(prefs[i].to_string() + " vs " +
                                                 prefs[j].to_string());
                    }
                }
            }
            r.instance = std::string("base ") + name +
                         ", all distinct same-length prefixes, lengths 1..3";
            r.expected = "degree profiles diverge at some t <= 3 for every pair";
            std::ostringstream obs;
            obs << diverged << "/" << pairs << " pairs diverge";
            if (!impossible.empty()) {
                obs << "; no divergence for:";
                for (const auto& p : impossible) obs << " [" << p << "]";
            }
            r.observed = obs.str();
            r.pass = diverged == pairs;
        });
    }

    return c.report;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "motifs",     "quasirandom", "diameter",     "connectivity", "domination",
        "cops",       "coloring",    "universality", "distinguish"};
    return names;
}

VerifyReport run_suite(const std::string& suite, int threads) {
    if (suite == "motifs") return suite_motifs(threads);
    if (suite == "quasirandom") return suite_quasirandom(threads);
    if (suite == "diameter") return suite_diameter();
    if (suite == "connectivity") return suite_connectivity();
    if (suite == "domination") return suite_domination();
    if (suite == "cops") return suite_cops();
    if (suite == "coloring") return suite_coloring();
    if (suite == "universality") return suite_universality();
    if (suite == "distinguish") return suite_distinguish();
    if (suite == "all") {
        VerifyReport all;
        all.suite = "all";
        for (const auto& name : suite_names()) {
            VerifyReport part = run_suite(name, threads);
            all.passed += part.passed;
            all.failed += part.failed;
            for (auto& check : part.checks) all.checks.push_back(std::move(check));
        }
        return all;
    }
    throw parse_error("unknown suite '" + suite + "'");
}

nlohmann::json report_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"id", check.id},
                          {"criterion", check.criterion},
                          {"instance", check.instance},
                          {"expected", check.expected},
                          {"observed", check.observed},
                          {"pass", check.pass},
                          {"ms", check.ms}});
    }
    return {{"suite", report.suite},
            {"checks", checks},
            {"passed", report.passed},
            {"failed", report.failed}};
}

} // namespace ilmt
