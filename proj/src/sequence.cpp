#include "ilmt/sequence.hpp"

#include <string>

namespace ilmt {

GeneratingSequence GeneratingSequence::parse(std::string_view literal, int repeat) {
    if (literal.empty()) throw parse_error("empty sequence literal");
    if (repeat < 1) throw parse_error("repeat count must be positive");
    GeneratingSequence s;
    s.bits.reserve(literal.size() * static_cast<std::size_t>(repeat));
    for (int r = 0; r < repeat; ++r) {
        for (char c : literal) {
            if (c == '0')
                s.bits.push_back(0);
            else if (c == '1')
                s.bits.push_back(1);
            else
                throw parse_error(std::string("sequence literal contains '") + c +
                                  "'; only 0 and 1 are allowed");
        }
    }
    return s;
}

GeneratingSequence GeneratingSequence::zeros(int len) {
    GeneratingSequence s;
    s.bits.assign(static_cast<std::size_t>(len), 0);
    return s;
}

GeneratingSequence GeneratingSequence::ones(int len) {
    GeneratingSequence s;
    s.bits.assign(static_cast<std::size_t>(len), 1);
    return s;
}

int GeneratingSequence::zeros_in_prefix(int prefix_len) const {
    int z = 0;
    for (int t = 1; t <= prefix_len && t <= length(); ++t)
        if (bits[static_cast<std::size_t>(t) - 1] == 0) ++z;
    return z;
}

std::vector<int> GeneratingSequence::zero_positions(int prefix_len) const {
    std::vector<int> pos;
    for (int t = 1; t <= prefix_len && t <= length(); ++t)
        if (bits[static_cast<std::size_t>(t) - 1] == 0) pos.push_back(t);
    return pos;
}

int GeneratingSequence::position_of_zero(int k) const {
    int seen = 0;
    for (int t = 1; t <= length(); ++t)
        if (bits[static_cast<std::size_t>(t) - 1] == 0 && ++seen == k) return t;
    return 0;
}

std::string GeneratingSequence::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

} // namespace ilmt
