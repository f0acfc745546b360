#ifndef HFDIAM_IO_HPP
#define HFDIAM_IO_HPP

#include <iosfwd>
#include <string>

#include "hfdiam/graph.hpp"
#include "hfdiam/hardness.hpp"

namespace hfdiam {

// Edge-list format: first line "n m", then m lines "u v" with 0-based ids.
// Blank lines and '#' comments are ignored. ParseError carries the line
// number of the offending line; self-loops and out-of-range endpoints are
// reported as ParseError too.
Graph parse_edge_list(std::istream& in);
Graph parse_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

// gen-hard output: the edge list followed by "# role <v> <tag>" comment
// lines and a "# meta ..." line, so the file still parses as a graph.
void write_hard_instance(std::ostream& out, const HardInstance& inst);

// DIMACS cnf: "p cnf <vars> <clauses>" header, clauses as 0-terminated
// literal runs, 'c' comment lines ignored.
CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_cnf_file(const std::string& path);

// OV format: one 0/1 string per line for set A, a blank line, then set B.
OvInstance parse_ov(std::istream& in);
OvInstance parse_ov_file(const std::string& path);

}  // namespace hfdiam

#endif
