#include "ilmt/io.hpp"

#include <fstream>
#include <sstream>

#include "ilmt/errors.hpp"

namespace ilmt {

namespace {

struct Parsed {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

Parsed parse_edge_list(std::istream& in) {
    Parsed p;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            if (!(ls >> tag)) continue;  // blank
            long long n = 0;
            if (tag != "n" || !(ls >> n) || n <= 0)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected header 'n <count>'");
            p.n = static_cast<int>(n);
            have_header = true;
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v))
            throw parse_error("line " + std::to_string(lineno) + ": expected 'u v'");
        std::string extra;
        if (ls >> extra)
            throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
        p.arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) throw parse_error("missing 'n <count>' header line");
    return p;
}

} // namespace

Tournament read_tournament(std::istream& in) {
    Parsed p = parse_edge_list(in);
    return Tournament::build(p.n, p.arcs);
}

OrientedGraph read_oriented(std::istream& in) {
    Parsed p = parse_edge_list(in);
    return OrientedGraph::build(p.n, p.arcs);
}

Tournament read_tournament_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return read_tournament(f);
}

OrientedGraph read_oriented_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return read_oriented(f);
}

namespace {

template <typename Graph>
void write_edges(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << "\n";
    for (auto [u, v] : arcs_of(g)) out << u << " " << v << "\n";
}

} // namespace

void write_edge_list(std::ostream& out, const Tournament& t) { write_edges(out, t); }
void write_edge_list(std::ostream& out, const OrientedGraph& g) { write_edges(out, g); }

std::vector<std::string> genealogy_labels(int order, const std::vector<CloneMap>& steps) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(order));
    const int base = steps.empty() ? order : steps.front().parent_count;
    for (int v = 0; v < base && v < order; ++v) {
        if (base <= 26)
            labels.push_back(std::string(1, static_cast<char>('a' + v)));
        else
            labels.push_back("v" + std::to_string(v));
    }
    std::vector<int> clones_made(labels.size(), 0);
    for (const auto& cm : steps) {
        int m = cm.parent_count;
        if (static_cast<int>(labels.size()) < m) break;
        for (int parent = 0; parent < m && static_cast<int>(labels.size()) < order; ++parent) {
            std::string pl = labels[static_cast<std::size_t>(parent)];
            int primes = ++clones_made[static_cast<std::size_t>(parent)];
            std::string label = pl.find('\'') != std::string::npos ? "(" + pl + ")" : pl;
            label.append(static_cast<std::size_t>(primes), '\'');
            labels.push_back(label);
            clones_made.push_back(0);
        }
    }
    while (static_cast<int>(labels.size()) < order)
        labels.push_back("v" + std::to_string(labels.size()));
    return labels;
}

namespace {

template <typename Graph>
std::string dot_of(const Graph& g, const std::vector<CloneMap>& steps) {
    auto labels = genealogy_labels(g.order(), steps);
    std::ostringstream out;
    out << "digraph tournament {\n";
    for (int v = 0; v < g.order(); ++v)
        out << "  n" << v << " [label=\"" << labels[static_cast<std::size_t>(v)] << "\"];\n";
    for (auto [u, v] : arcs_of(g)) out << "  n" << u << " -> n" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

std::string dot_export(const Tournament& t, const std::vector<CloneMap>& steps) {
    return dot_of(t, steps);
}

std::string dot_export(const OrientedGraph& g, const std::vector<CloneMap>& steps) {
    return dot_of(g, steps);
}

nlohmann::json rational_json(const mpq_class& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

namespace {

template <typename Graph>
nlohmann::json graph_json_of(const Graph& g) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [u, v] : arcs_of(g)) arcs.push_back({u, v});
    return {{"order", g.order()}, {"arcs", arcs}};
}

} // namespace

nlohmann::json graph_json(const Tournament& t) { return graph_json_of(t); }
nlohmann::json graph_json(const OrientedGraph& g) { return graph_json_of(g); }

} // namespace ilmt
