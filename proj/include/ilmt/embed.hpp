#ifndef ILMT_EMBED_HPP
#define ILMT_EMBED_HPP

#include <vector>

#include "ilmt/generate.hpp"
#include "ilmt/sequence.hpp"
#include "ilmt/tournament.hpp"

namespace ilmt {

struct EmbedStage {
    int step = 0;            // 1-based step index of the 0-step
    int processed = 0;       // target node fixed at this stage
    std::vector<int> flipped;      // target nodes whose pre-images were cloned alongside
    std::vector<int> image_after;  // full image after the stage
};

// Arc-exact injection of the target into an iterate of the base: the induced
// subtournament on the image equals the target under the image map itself.
struct EmbeddingMap {
    Tournament target;
    Tournament host;
    std::vector<int> image;         // image[h] = host node for target node h
    std::vector<EmbedStage> trace;  // one entry per consumed 0-step
    int steps_total = 0;            // r: host = generate(G0, s, r)
    int zeros_used = 0;
};

struct EmbedOptions {
    // When set and the target is already arc-exactly induced on {0..n-1} of
    // the base, return the identity map with an empty trace instead of
    // running the construction.
    bool identity_fast_path = false;
    std::size_t max_nodes = kDefaultMaxNodes;
};

// Iterative construction: target nodes are processed in ascending index
// order, one per 0-step. At its 0-step, the processed node's pre-image and
// every currently mismatched pre-image are replaced by their clones, which
// reverses exactly the wrong-way arcs (the clone block of a 0-step is the
// reversed parent block). 1-steps carry the image forward unchanged.
// Requires |V(H)| <= |V(G0)| and at least |V(H)| zeros in s.
EmbeddingMap embed(const Tournament& g0, const GeneratingSequence& s, const Tournament& h,
                   const EmbedOptions& opts = {});

// True iff every target arc maps to a host arc under the image.
bool verify_embedding(const EmbeddingMap& e);

struct SweepEntry {
    Tournament target;
    bool verified = false;
    int zeros_used = 0;
    int host_order = 0;
};

// Embeds every tournament on n nodes (one per isomorphism class) into
// iterates of the base, using the all-zeros sequence of length n; n <= 4.
std::vector<SweepEntry> universality_sweep(const Tournament& g0, int n,
                                           const EmbedOptions& opts = {});

} // namespace ilmt

#endif
