#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgc {

// Sorted, duplicate-free set of node ids.
using NodeSet = std::vector<int>;

struct InducedSubgraph;

// Immutable undirected graph over dense integer node ids [0, node_count).
// Adjacency lists are kept sorted; all queries are pure and safe for
// concurrent readers.
class Graph {
 public:
  // Marker returned by distance() when no path exists. It compares larger
  // than any real hop count, so `distance(v, w) <= delta` stays meaningful
  // on disconnected graphs.
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  Graph() = default;
  Graph(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;

  // Edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // Hop count of a shortest path, kUnreachable if none.
  int distance(int v, int w) const;

  // Distances from v to every node; kUnreachable marks unreachable nodes.
  std::vector<int> bfs_distances(int v) const;

  // { v' : d(v, v') <= delta }; always contains v.
  NodeSet delta_neighborhood(int v, int delta) const;

  // {v} plus the nodes adjacent to v.
  NodeSet closed_neighborhood(int v) const;

  bool is_connected() const;

  // Largest one-sided delta-neighborhood difference across any edge,
  // taking both orientations of every edge. Requires at least one edge.
  int nu(int delta) const;

  InducedSubgraph induced_subgraph(const NodeSet& nodes) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_node(int v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct InducedSubgraph {
  Graph graph;
  // original_ids[new_id] = old id; new ids follow the sorted order of the
  // selected node set.
  NodeSet original_ids;

  int to_local(int original_id) const;
};

// Lazily memoized delta-neighborhood lookups for one (graph, delta) pair.
// Internal optimization for simulation loops; results are identical to
// Graph::delta_neighborhood.
class NeighborhoodTable {
 public:
  NeighborhoodTable(const Graph& g, int delta);

  const NodeSet& of(int v) const;
  // d(v, w) <= delta?
  bool within(int v, int w) const;
  const Graph& graph() const { return *g_; }
  int delta() const { return delta_; }

 private:
  const Graph* g_;
  int delta_;
  mutable std::vector<std::optional<NodeSet>> cache_;
};

// Fixture generators.
Graph make_path(int n);
Graph make_star(int n);  // n nodes total, hub is node 0
Graph make_cycle(int n);

// n points uniform in the unit square, edge iff Euclidean distance <= radius.
// Resamples (up to 100 attempts) until connected; deterministic for fixed
// (n, radius, seed). Throws std::runtime_error if the retry budget runs out.
Graph generate_random_geometric(int n, double radius, std::uint64_t seed);

struct TrapInstance {
  Graph graph;
  std::vector<int> profile;  // agent positions
  int covered;               // coverage at the trap
  int optimum;               // brute-force maximum on the same graph
};

// Searches a fixed catalog of small graphs (paths, stars, double stars,
// paths with a pendant) for a profile that no single-agent move within the
// closed neighborhood can improve, yet sits strictly below the global
// maximum coverage. Returns nullopt if the catalog holds no such instance.
std::optional<TrapInstance> find_greedy_trap(int max_nodes, int agent_count,
                                             int delta);

// Edge-list text format: "p <node_count>" then "e <u> <v>" lines, 0-based
// ids, '#' comment lines ignored. The writer emits edges sorted with u < v.
Graph read_graph(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace dgc
