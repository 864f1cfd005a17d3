#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dgc/graph.hpp"

namespace dgc {

Graph read_graph(std::istream& in) {
  std::string line;
  int node_count = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    char tag;
    fields >> tag;
    if (tag == 'p') {
      if (node_count >= 0) {
        throw std::runtime_error("duplicate 'p' line at line " +
                                 std::to_string(line_no));
      }
      if (!(fields >> node_count) || node_count < 1) {
        throw std::runtime_error("bad node count at line " +
                                 std::to_string(line_no));
      }
    } else if (tag == 'e') {
      int u, v;
      if (node_count < 0) {
        throw std::runtime_error("edge before 'p' line at line " +
                                 std::to_string(line_no));
      }
      if (!(fields >> u >> v)) {
        throw std::runtime_error("bad edge at line " + std::to_string(line_no));
      }
      edges.emplace_back(u, v);
    } else {
      throw std::runtime_error("unknown line tag at line " +
                               std::to_string(line_no));
    }
  }
  if (node_count < 0) throw std::runtime_error("missing 'p' line");
  return Graph(node_count, edges);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "p " << g.node_count() << "\n";
  for (auto [u, v] : g.edges()) {
    out << "e " << u << " " << v << "\n";
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph(g, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace dgc
