#ifndef ILMT_SEQUENCE_HPP
#define ILMT_SEQUENCE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "ilmt/errors.hpp"

namespace ilmt {

// Finite prefix s(1), s(2), ..., s(len) of a binary generating sequence.
// Position 0 in `bits` is s(1).
struct GeneratingSequence {
    std::vector<std::uint8_t> bits;

    // Literal over {0,1}, read left to right; `repeat` cycles it.
    static GeneratingSequence parse(std::string_view literal, int repeat = 1);
    static GeneratingSequence zeros(int len);
    static GeneratingSequence ones(int len);

    int length() const { return static_cast<int>(bits.size()); }

    // 1-based step index.
    int bit(int t) const {
        if (t < 1 || t > length())
            throw precondition_error("sequence prefix has no entry s(" + std::to_string(t) + ")");
        return bits[static_cast<std::size_t>(t) - 1];
    }

    // Support = positions with value 0.
    int zeros_in_prefix(int prefix_len) const;
    std::vector<int> zero_positions(int prefix_len) const;

    // 1-based position of the k-th zero, or 0 if the prefix has fewer.
    int position_of_zero(int k) const;

    std::string to_string() const;
};

// Bookkeeping for one doubling step: the first `parent_count` nodes of the
// output are the input nodes, clone of i is i + parent_count.
struct CloneMap {
    int step = 0;          // 1-based step index t
    int parent_count = 0;  // order of the input graph

    int clone_of(int parent) const { return parent + parent_count; }
    int parent_of(int clone) const { return clone - parent_count; }
    bool is_clone(int v) const { return v >= parent_count; }
};

} // namespace ilmt

#endif
