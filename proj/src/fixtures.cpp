#include "ilmt/fixtures.hpp"

#include <charconv>
#include <string>

#include "ilmt/errors.hpp"

namespace ilmt {

Tournament single_node() { return Tournament::build(1, {}); }

Tournament single_arc() { return Tournament::build(2, {{0, 1}}); }

Tournament d3() { return Tournament::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

Tournament t3() { return linear_order(3); }

Tournament t4() { return linear_order(4); }

Tournament linear_order(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    return Tournament::build(n, arcs);
}

Tournament winner4() {
    return Tournament::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

Tournament loser4() { return reverse(winner4()); }

Tournament mixed4() {
    return Tournament::build(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {1, 3}, {2, 3}});
}

Tournament fig_g() { return Tournament::build(3, {{0, 2}, {1, 0}, {2, 1}}); }

Tournament fig_h() {
    return Tournament::build(4, {{2, 0}, {0, 1}, {3, 1}, {3, 2}, {2, 1}, {0, 3}});
}

Tournament fig_t() {
    return Tournament::build(8, {{0, 1}, {2, 0}, {3, 0}, {4, 0}, {0, 5}, {6, 0}, {7, 0},
                                 {1, 2}, {3, 1}, {4, 1}, {5, 1}, {1, 6}, {7, 1},
                                 {3, 2}, {2, 4}, {5, 2}, {6, 2}, {7, 2},
                                 {3, 5}, {3, 4}, {3, 6}, {7, 3},
                                 {5, 4}, {4, 6}, {4, 7},
                                 {5, 7}, {6, 5}, {6, 7}});
}

Tournament hero(int i, int max_index) {
    if (i < 1) throw precondition_error("hero index must be positive");
    if (i > max_index)
        throw cap_error("hero index " + std::to_string(i) + " above cap " +
                        std::to_string(max_index));
    if (i == 1) return single_node();
    Tournament prev = hero(i - 1, max_index);
    const int m = prev.order();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(2 * m + 1) * (2 * m) / 2);
    for (auto [u, v] : arcs_of(prev)) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(u + m, v + m);
    }
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) arcs.emplace_back(u, v + m);  // S1 -> S2
    for (int u = 0; u < m; ++u) {
        arcs.emplace_back(u + m, 2 * m);  // S2 -> apex
        arcs.emplace_back(2 * m, u);      // apex -> S1
    }
    return Tournament::build(2 * m + 1, arcs);
}

std::optional<Tournament> builtin_base(std::string_view name) {
    if (name == "d3") return d3();
    if (name == "t3") return t3();
    if (name == "t4") return t4();
    if (name == "edge") return single_arc();
    if (name == "node") return single_node();
    if (name == "winner") return winner4();
    if (name == "loser") return loser4();
    if (name == "mixed") return mixed4();
    if (name == "fig2:G") return fig_g();
    if (name == "fig2:H") return fig_h();
    if (name == "fig2:T") return fig_t();
    if (name.starts_with("hero:")) {
        auto digits = name.substr(5);
        int i = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec != std::errc{} || p != digits.data() + digits.size())
            throw parse_error("bad hero index in '" + std::string(name) + "'");
        return hero(i);
    }
    return std::nullopt;
}

} // namespace ilmt
