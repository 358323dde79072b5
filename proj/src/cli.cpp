#include "ilmt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ilmt/census.hpp"
#include "ilmt/embed.hpp"
#include "ilmt/errors.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/generate.hpp"
#include "ilmt/io.hpp"
#include "ilmt/props.hpp"
#include "ilmt/pursuit.hpp"
#include "ilmt/verify.hpp"

namespace ilmt {

namespace {

struct CommonOpts {
    std::string base = "d3";
    std::string seq;
    int repeat = 1;
    int steps = 0;
    std::size_t max_nodes = kDefaultMaxNodes;
    int threads = 0;
    std::string out;

    int effective_threads() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_steps = true) {
    cmd->add_option("--base", o.base,
                    "builtin name (d3, t3, edge, node, t4, winner, loser, mixed, hero:i, "
                    "fig2:G|H|T) or edge-list file path");
    if (with_steps) {
        cmd->add_option("--seq", o.seq, "generating sequence literal over {0,1}");
        cmd->add_option("--repeat", o.repeat, "cycle the sequence literal this many times")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--steps", o.steps, "number of steps to apply")
            ->check(CLI::NonNegativeNumber);
    }
    cmd->add_option("--max-nodes", o.max_nodes, "node cap override (env ILMT_MAX_NODES)");
    cmd->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

Tournament load_base(const std::string& spec) {
    if (auto t = builtin_base(spec)) return *t;
    return read_tournament_file(spec);
}

GeneratingSequence sequence_for(const CommonOpts& o) {
    if (o.seq.empty()) {
        if (o.steps > 0) throw parse_error("--steps > 0 requires --seq");
        return GeneratingSequence{};
    }
    return GeneratingSequence::parse(o.seq, o.repeat);
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw parse_error("cannot write '" + o.out + "'");
    f << text;
}

std::array<nlohmann::json, 4> sigma_json(const std::array<mpq_class, 4>& sigma) {
    return {rational_json(sigma[0]), rational_json(sigma[1]), rational_json(sigma[2]),
            rational_json(sigma[3])};
}

int cmd_generate(const CommonOpts& o, bool oriented, const std::string& format) {
    GeneratingSequence s = sequence_for(o);
    std::ostringstream text;
    if (oriented) {
        GeneratedOriented gen =
            oriented_generate(OrientedGraph::from_tournament(load_base(o.base)), s, o.steps,
                              o.max_nodes);
        if (format == "edgelist")
            write_edge_list(text, gen.graph);
        else if (format == "dot")
            text << dot_export(gen.graph, gen.steps);
        else
            text << graph_json(gen.graph).dump(2) << "\n";
    } else {
        Generated gen = generate(load_base(o.base), s, o.steps, o.max_nodes);
        if (format == "edgelist")
            write_edge_list(text, gen.graph);
        else if (format == "dot")
            text << dot_export(gen.graph, gen.steps);
        else
            text << graph_json(gen.graph).dump(2) << "\n";
    }
    emit(o, text.str());
    return 0;
}

int cmd_census(const CommonOpts& o, int k, bool trace) {
    GeneratingSequence s = sequence_for(o);
    Tournament base = load_base(o.base);
    nlohmann::json j;
    if (trace) {
        Trace tr = quasirandom_trace(base, s, o.steps, o.effective_threads(), o.max_nodes);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : tr.rows) {
            rows.push_back({{"t", row.t},
                            {"n", row.order},
                            {"a", row.a},
                            {"b", row.b},
                            {"counts4",
                             {{"T4", row.counts4.t4},
                              {"Winner", row.counts4.winner},
                              {"Loser", row.counts4.loser},
                              {"Mixed", row.counts4.mixed}}},
                            {"sigma", sigma_json(row.sigma)},
                            {"d_star_T4", rational_json(row.d_star_t4)},
                            {"predicted_sigma", sigma_json(row.predicted)}});
        }
        j = {{"kind", "trace"}, {"rows", rows}, {"truncated", tr.truncated}};
    } else {
        Tournament g = generate(base, s, o.steps, o.max_nodes).graph;
        if (k == 3) {
            Census3 c = census3_bruteforce(g);
            j = {{"kind", "census3"}, {"n", c.order}, {"a", c.a}, {"b", c.b}};
        } else {
            Census4 c = census4(g, o.effective_threads());
            j = {{"kind", "census4"},
                 {"n", c.order},
                 {"T4", c.t4},
                 {"Winner", c.winner},
                 {"Loser", c.loser},
                 {"Mixed", c.mixed}};
            if (c.total() > 0) {
                mpz_class total(static_cast<unsigned long>(c.total()));
                std::array<mpq_class, 4> sigma;
                auto counts = c.counts();
                for (int i = 0; i < 4; ++i) {
                    sigma[static_cast<std::size_t>(i)] = mpq_class(
                        mpz_class(static_cast<unsigned long>(counts[static_cast<std::size_t>(i)])),
                        total);
                    sigma[static_cast<std::size_t>(i)].canonicalize();
                }
                j["sigma"] = sigma_json(sigma);
                mpq_class d = sigma[0] / 24;
                d.canonicalize();
                j["d_star_T4"] = rational_json(d);
            }
        }
    }
    emit(o, j.dump(2));
    return 0;
}

int cmd_analyze(const CommonOpts& o, bool with_chi, bool with_cop) {
    GeneratingSequence s = sequence_for(o);
    Tournament g = generate(load_base(o.base), s, o.steps, o.max_nodes).graph;
    nlohmann::json j;
    j["n"] = g.order();
    bool strong = is_strong(g);
    j["strong"] = strong;
    if (auto d = diameter(g)) j["diameter"] = *d;
    CutResult cut = connectivity(g);
    j["kappa"] = cut.kappa;
    j["kappa_cut"] = cut.cut;
    DominationResult din = domination(g, Direction::in);
    DominationResult dout = domination(g, Direction::out);
    j["gamma_in"] = din.gamma;
    j["gamma_in_set"] = din.witness;
    j["gamma_out"] = dout.gamma;
    j["gamma_out_set"] = dout.witness;
    auto [sources, sinks] = sources_and_sinks(g);
    j["sources"] = sources;
    j["sinks"] = sinks;
    if (with_chi) {
        if (g.order() <= kChromaticCap) {
            ColoringResult chi = chromatic_number(g);
            j["chi"] = chi.chi;
            j["chi_exact"] = true;
            j["coloring"] = chi.coloring;
        } else {
            ColoringResult chi = chromatic_upper_bound(g);
            j["chi_upper_bound"] = chi.chi;
            j["chi_exact"] = false;
            j["coloring"] = chi.coloring;
        }
    }
    if (with_cop) {
        SolveResult cop = cop_number(g);
        j["cop_number"] = cop.cop_number;
        j["cop_placement"] = cop.value.winning_placement;
    }
    emit(o, j.dump(2));
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    VerifyReport report = run_suite(suite, o.effective_threads());
    nlohmann::json j = report_json(report);
    emit(o, j.dump(2));
    std::ostringstream line;
    line << "suite " << report.suite << ": " << report.passed << " passed, " << report.failed
         << " failed";
    std::cerr << line.str() << "\n";
    return report.failed == 0 ? 0 : 3;
}

int cmd_embed(const CommonOpts& o, const std::string& target_spec) {
    GeneratingSequence s = sequence_for(o);
    Tournament base = load_base(o.base);
    Tournament target = load_base(target_spec);
    EmbeddingMap e = embed(base, s, target, EmbedOptions{false, o.max_nodes});
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& st : e.trace)
        trace.push_back({{"step", st.step},
                         {"processed", st.processed},
                         {"flipped", st.flipped},
                         {"image_after", st.image_after}});
    nlohmann::json j = {{"target_order", e.target.order()},
                        {"host_order", e.host.order()},
                        {"steps_total", e.steps_total},
                        {"zeros_used", e.zeros_used},
                        {"image", e.image},
                        {"trace", trace},
                        {"verified", verify_embedding(e)}};
    emit(o, j.dump(2));
    return 0;
}

int cmd_solve_cops(const CommonOpts& o, int k, std::uint64_t budget) {
    GeneratingSequence s = sequence_for(o);
    Tournament g = generate(load_base(o.base), s, o.steps, o.max_nodes).graph;
    nlohmann::json j;
    if (k > 0) {
        GameValue v = cops_win(g, k, budget);
        j = {{"k", k}, {"cops_win", v.cops_win}};
        if (v.cops_win) j["placement"] = v.winning_placement;
    } else {
        SolveResult sr = cop_number(g, budget);
        nlohmann::json strategy = nlohmann::json::object();
        for (const auto& [key, move] : sr.strategy.moves) strategy[key] = move;
        j = {{"cop_number", sr.cop_number},
             {"placement", sr.value.winning_placement},
             {"states", sr.value.level.size()},
             {"strategy", strategy}};
    }
    emit(o, j.dump(2));
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"iterated local tournament model: generation, motif census, invariants"};
    app.require_subcommand(1);

    CommonOpts o;
    if (const char* env = std::getenv("ILMT_MAX_NODES")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && cap > 0) o.max_nodes = static_cast<std::size_t>(cap);
    }

    auto* gen = app.add_subcommand("generate", "generate an iterate and print it");
    bool oriented = false;
    std::string format = "edgelist";
    add_common(gen, o);
    gen->add_flag("--oriented", oriented, "use the oriented-graph step rules");
    gen->add_option("--format", format, "edgelist | json | dot")
        ->check(CLI::IsMember({"edgelist", "json", "dot"}));

    auto* cen = app.add_subcommand("census", "exact 3- or 4-motif census of an iterate");
    int k = 3;
    bool trace = false;
    add_common(cen, o);
    cen->add_option("--k", k, "motif order (3 or 4)")->check(CLI::IsMember({3, 4}));
    cen->add_flag("--trace", trace, "per-step 4-type proportions with Markov prediction");

    auto* ana = app.add_subcommand("analyze", "diameter, strongness, connectivity, domination");
    bool with_chi = false, with_cop = false;
    add_common(ana, o);
    ana->add_flag("--chi", with_chi, "also run the exponential coloring solver");
    ana->add_flag("--cop", with_cop, "also run the pursuit solver");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    ver->add_option("suite", suite, "motifs|quasirandom|diameter|connectivity|domination|"
                                    "cops|coloring|universality|distinguish|all");
    ver->add_option("--threads", o.threads, "worker threads");
    ver->add_option("--out", o.out, "write the JSON report to this file");

    auto* emb = app.add_subcommand("embed", "embed a target tournament into an iterate");
    std::string target;
    add_common(emb, o);
    emb->add_option("--target", target, "target tournament (builtin or file)")->required();

    auto* cops = app.add_subcommand("solve-cops", "pursuit game solver");
    int cop_k = 0;
    std::uint64_t budget = kDefaultStateBudget;
    add_common(cops, o);
    cops->add_option("--k", cop_k, "test a fixed cop count instead of minimizing");
    cops->add_option("--budget", budget, "state budget");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, oriented, format);
        if (cen->parsed()) return cmd_census(o, k, trace);
        if (ana->parsed()) return cmd_analyze(o, with_chi, with_cop);
        if (ver->parsed()) return cmd_verify(o, suite);
        if (emb->parsed()) return cmd_embed(o, target);
        if (cops->parsed()) return cmd_solve_cops(o, cop_k, budget);
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace ilmt
