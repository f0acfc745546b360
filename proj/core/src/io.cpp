#include "hfdiam/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hfdiam/errors.hpp"

namespace hfdiam {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

// Strips comments and reports whether anything meaningful remains.
bool content_line(std::string& line) {
  if (auto hash = line.find('#'); hash != std::string::npos)
    line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!content_line(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        fail(line_no, "expected header \"n m\"");
      std::string extra;
      if (fields >> extra) fail(line_no, "trailing junk after header");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v)) fail(line_no, "expected edge \"u v\"");
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing junk after edge");
    if (static_cast<long long>(edges.size()) == m)
      fail(line_no, "more edge lines than the header announced");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(line_no, "edge endpoint out of range");
    if (u == v) fail(line_no, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("empty graph file");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header announced " + std::to_string(m) +
                     " edges but the file has " +
                     std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_hard_instance(std::ostream& out, const HardInstance& inst) {
  write_edge_list(out, inst.graph);
  for (int v = 0; v < inst.graph.vertex_count(); ++v)
    out << "# role " << v << ' ' << role_name(inst.roles[v]) << '\n';
  out << "# meta hash " << inst.source_hash << " diam-if-positive "
      << inst.diameter_if_positive << " diam-if-negative "
      << inst.diameter_if_negative << '\n';
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
  std::string line;
  int line_no = 0;
  CnfFormula f;
  long long declared_clauses = -1;
  bool saw_header = false;
  std::vector<int> current;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    if (!saw_header) {
      std::string p, kind;
      long long vars;
      if (!(fields >> p >> kind >> vars >> declared_clauses) || p != "p" ||
          kind != "cnf" || vars < 0 || declared_clauses < 0)
        fail(line_no, "expected DIMACS header \"p cnf <vars> <clauses>\"");
      f.num_vars = static_cast<int>(vars);
      saw_header = true;
      continue;
    }
    long long lit;
    while (fields >> lit) {
      if (lit == 0) {
        if (current.empty()) fail(line_no, "empty clause");
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > f.num_vars)
          fail(line_no, "literal out of range: " + std::to_string(lit));
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!fields.eof()) fail(line_no, "unexpected token in clause data");
  }
  if (!saw_header) throw ParseError("missing DIMACS header");
  if (!current.empty())
    throw ParseError("last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses)
    throw ParseError("header announced " + std::to_string(declared_clauses) +
                     " clauses but the file has " +
                     std::to_string(f.clauses.size()));
  f.validate();
  return f;
}

CnfFormula parse_cnf_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_dimacs_cnf(in);
}

OvInstance parse_ov(std::istream& in) {
  OvInstance ov;
  std::string line;
  int line_no = 0;
  bool in_second = false;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) {
      if (!ov.set_a.empty() && !in_second) in_second = true;
      continue;
    }
    std::vector<std::uint8_t> vec;
    vec.reserve(line.size());
    for (char ch : line) {
      if (ch != '0' && ch != '1')
        fail(line_no, "expected a 0/1 string");
      vec.push_back(ch == '1');
    }
    if (ov.dim == 0)
      ov.dim = static_cast<int>(vec.size());
    else if (static_cast<int>(vec.size()) != ov.dim)
      fail(line_no, "vector length differs from the first vector");
    (in_second ? ov.set_b : ov.set_a).push_back(std::move(vec));
  }
  if (ov.set_a.empty() || ov.set_b.empty())
    throw ParseError("OV file needs two blank-line separated vector blocks");
  ov.validate();
  return ov;
}

OvInstance parse_ov_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_ov(in);
}

}  // namespace hfdiam
