#include "ilmt/embed.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "ilmt/enumerate.hpp"
#include "ilmt/errors.hpp"

namespace ilmt {

namespace {

bool identity_matches(const Tournament& g0, const Tournament& h) {
    for (int u = 0; u < h.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            if (u != v && g0.arc(u, v) != h.arc(u, v)) return false;
    return true;
}

} // namespace

EmbeddingMap embed(const Tournament& g0, const GeneratingSequence& s, const Tournament& h,
                   const EmbedOptions& opts) {
    const int n = h.order();
    if (n > g0.order())
        throw precondition_error("target order " + std::to_string(n) +
                                 " exceeds base order " + std::to_string(g0.order()));

    EmbeddingMap e;
    e.target = h;
    e.image.resize(static_cast<std::size_t>(n));
    std::iota(e.image.begin(), e.image.end(), 0);

    if (opts.identity_fast_path && identity_matches(g0, h)) {
        e.host = g0;
        return e;
    }

    const int r = s.position_of_zero(n);
    if (r == 0)
        throw precondition_error("sequence prefix has fewer than " + std::to_string(n) +
                                 " zeros");

    Tournament g = g0;
    int processed = 0;
    for (int t = 1; t <= r; ++t) {
        if (s.bit(t) == 1) {
            g = ilmt_step(g, 1, opts.max_nodes).first;  // parents persist unchanged
            continue;
        }
        const int u = processed;
        const int u_host = e.image[static_cast<std::size_t>(u)];
        // Every pre-image whose current arc with u's pre-image points the
        // wrong way relative to the target gets cloned together with it; the
        // reversed clone block flips exactly those pairs.
        EmbedStage stage;
        stage.step = t;
        stage.processed = u;
        for (int j = 0; j < n; ++j) {
            if (j == u) continue;
            if (g.arc(u_host, e.image[static_cast<std::size_t>(j)]) != h.arc(u, j))
                stage.flipped.push_back(j);
        }
        const int m = g.order();
        g = ilmt_step(g, 0, opts.max_nodes).first;
        e.image[static_cast<std::size_t>(u)] += m;
        for (int j : stage.flipped) e.image[static_cast<std::size_t>(j)] += m;
        ++processed;
        stage.image_after = e.image;
        e.trace.push_back(std::move(stage));
    }

    e.host = std::move(g);
    e.steps_total = r;
    e.zeros_used = processed;
    if (!verify_embedding(e))
        throw std::logic_error("embedding construction failed its own arc check");
    return e;
}

bool verify_embedding(const EmbeddingMap& e) {
    const int n = e.target.order();
    for (int x = 0; x < n; ++x) {
        int ix = e.image[static_cast<std::size_t>(x)];
        if (ix < 0 || ix >= e.host.order()) return false;
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (e.image[static_cast<std::size_t>(y)] == ix) return false;  // not injective
            if (e.target.arc(x, y) &&
                !e.host.arc(ix, e.image[static_cast<std::size_t>(y)]))
                return false;
        }
    }
    return true;
}

std::vector<SweepEntry> universality_sweep(const Tournament& g0, int n,
                                           const EmbedOptions& opts) {
    if (n < 1 || n > 4) throw precondition_error("sweep supports motif orders 1..4");
    if (n > g0.order()) throw precondition_error("motif order exceeds base order");
    std::vector<SweepEntry> out;
    GeneratingSequence zeros = GeneratingSequence::zeros(n);
    for (const Tournament& h : all_tournaments(n)) {
        EmbeddingMap e = embed(g0, zeros, h, opts);
        SweepEntry entry;
        entry.target = h;
        entry.verified = verify_embedding(e);
        entry.zeros_used = e.zeros_used;
        entry.host_order = e.host.order();
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace ilmt
