#include "ilmt/generate.hpp"

#include <string>

#include "ilmt/errors.hpp"

namespace ilmt {

namespace {

void check_cap(int n, std::size_t max_nodes) {
    if (static_cast<std::size_t>(n) * 2 > max_nodes)
        throw cap_error("step would produce " + std::to_string(2 * static_cast<long long>(n)) +
                        " nodes, above the cap of " + std::to_string(max_nodes));
}

} // namespace

std::pair<Tournament, CloneMap> ilmt_step(const Tournament& t, int bit, std::size_t max_nodes) {
    if (bit != 0 && bit != 1) throw precondition_error("step bit must be 0 or 1");
    const int n = t.order();
    if (n == 0) throw precondition_error("cannot step an empty tournament");
    check_cap(n, max_nodes);

    BitMatrix out(2 * n);
    const int in_words = t.words_per_row();
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(in_words));
    for (int u = 0; u < n; ++u) {
        auto src = t.out_row(u);
        // Parent row: old arcs, plus (u, v') for each out-neighbor v.
        auto prow = out.row(u);
        or_shifted(src, prow, 0);
        or_shifted(src, prow, n);
        // Clone row: (u', v) for each out-neighbor v, the arc (u', u), and the
        // clone block (forward copy on a 1-step, reversed on a 0-step).
        auto crow = out.row(u + n);
        or_shifted(src, crow, 0);
        crow[static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
        if (bit == 1) {
            or_shifted(src, crow, n);
        } else {
            t.in_row(u, scratch);
            or_shifted(scratch, crow, n);
        }
    }
    return {Tournament::adopt(std::move(out)), CloneMap{0, n}};
}

std::pair<OrientedGraph, CloneMap> oriented_step(const OrientedGraph& g, int bit,
                                                 std::size_t max_nodes) {
    if (bit != 0 && bit != 1) throw precondition_error("step bit must be 0 or 1");
    const int n = g.order();
    if (n == 0) throw precondition_error("cannot step an empty graph");
    check_cap(n, max_nodes);

    BitMatrix tr;
    if (bit == 0) tr = g.matrix().transposed();

    BitMatrix out(2 * n);
    for (int u = 0; u < n; ++u) {
        or_shifted(g.out_row(u), out.row(u), 0);
        auto crow = out.row(u + n);
        // (x', x) plus arcs to the parent's out-neighbors (1-step) or
        // in-neighbors (0-step); no arcs among clones.
        crow[static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
        or_shifted(bit == 1 ? g.out_row(u) : std::span<const std::uint64_t>(tr.row(u)), crow, 0);
    }
    return {OrientedGraph::adopt(std::move(out)), CloneMap{0, n}};
}

Generated generate(const Tournament& g0, const GeneratingSequence& s, int t,
                   std::size_t max_nodes) {
    if (t < 0) throw precondition_error("step count must be nonnegative");
    if (t > s.length())
        throw precondition_error("step count " + std::to_string(t) +
                                 " exceeds sequence prefix length " + std::to_string(s.length()));
    Generated out{g0, {}};
    out.steps.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) {
        auto [next, cm] = ilmt_step(out.graph, s.bit(i), max_nodes);
        cm.step = i;
        out.graph = std::move(next);
        out.steps.push_back(cm);
    }
    return out;
}

GeneratedOriented oriented_generate(const OrientedGraph& g0, const GeneratingSequence& s, int t,
                                    std::size_t max_nodes) {
    if (t < 0) throw precondition_error("step count must be nonnegative");
    if (t > s.length())
        throw precondition_error("step count " + std::to_string(t) +
                                 " exceeds sequence prefix length " + std::to_string(s.length()));
    GeneratedOriented out{g0, {}};
    for (int i = 1; i <= t; ++i) {
        auto [next, cm] = oriented_step(out.graph, s.bit(i), max_nodes);
        cm.step = i;
        out.graph = std::move(next);
        out.steps.push_back(cm);
    }
    return out;
}

} // namespace ilmt
