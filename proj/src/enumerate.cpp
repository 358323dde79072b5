#include "ilmt/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "ilmt/errors.hpp"

namespace ilmt {

namespace {

constexpr int kEnumCap = 6;

std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

// Adjacency encoded as bits over ordered pairs under a relabeling.
std::uint64_t key_under(const Tournament& t, const std::vector<int>& perm) {
    std::uint64_t key = 0;
    int bit = 0;
    int n = t.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (t.arc(perm[i], perm[j])) key |= std::uint64_t{1} << bit;
    return key;
}

std::uint64_t canonical_key(const Tournament& t) {
    int n = t.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, key_under(t, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<Tournament> all_labeled_tournaments(int n) {
    if (n < 1 || n > kEnumCap)
        throw cap_error("labeled enumeration supports 1 <= n <= " + std::to_string(kEnumCap));
    auto pairs = pair_list(n);
    std::vector<Tournament> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        arcs.reserve(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            arcs.emplace_back((mask >> k) & 1 ? std::pair{i, j} : std::pair{j, i});
        }
        out.push_back(Tournament::build(n, arcs));
    }
    return out;
}

std::vector<Tournament> all_tournaments(int n) {
    if (n < 1 || n > kEnumCap)
        throw cap_error("isomorphism-class enumeration supports 1 <= n <= " +
                        std::to_string(kEnumCap));
    std::map<std::uint64_t, Tournament> reps;
    for (auto& t : all_labeled_tournaments(n)) reps.try_emplace(canonical_key(t), t);
    std::vector<Tournament> out;
    out.reserve(reps.size());
    for (auto& [key, t] : reps) out.push_back(std::move(t));
    return out;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            arcs.emplace_back(rng() & 1 ? std::pair{i, j} : std::pair{j, i});
    return Tournament::build(n, arcs);
}

} // namespace ilmt
