#ifndef ILMT_IO_HPP
#define ILMT_IO_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "ilmt/sequence.hpp"
#include "ilmt/tournament.hpp"
#include "vendor_json.hpp"

namespace ilmt {

// Text edge-list interchange format: first line "n <count>", then one
// "u v" line per arc u->v. Blank lines and '#' comments are ignored.

Tournament read_tournament(std::istream& in);
OrientedGraph read_oriented(std::istream& in);
Tournament read_tournament_file(const std::string& path);
OrientedGraph read_oriented_file(const std::string& path);

void write_edge_list(std::ostream& out, const Tournament& t);
void write_edge_list(std::ostream& out, const OrientedGraph& g);

// DOT export for visualization. When the clone-map chain of the generation is
// given, nodes are labeled by genealogy: base letters, then one prime per
// cloning of the same node, parenthesized when the parent label is itself
// primed (a, a', a'', (a')', ...).
std::string dot_export(const Tournament& t, const std::vector<CloneMap>& steps = {});
std::string dot_export(const OrientedGraph& g, const std::vector<CloneMap>& steps = {});

// Node labels used by the DOT export, exposed for reuse in reports.
std::vector<std::string> genealogy_labels(int order, const std::vector<CloneMap>& steps);

nlohmann::json rational_json(const mpq_class& q);
nlohmann::json graph_json(const Tournament& t);
nlohmann::json graph_json(const OrientedGraph& g);

} // namespace ilmt

#endif
