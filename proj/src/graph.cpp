#include "dgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "dgc/rng.hpp"

namespace dgc {

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges)
    : n_(node_count) {
  if (node_count < 1) {
    throw std::invalid_argument("graph needs at least one node");
  }
  adj_.resize(n_);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

void Graph::check_node(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("invalid node id " + std::to_string(v));
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_node(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::bfs_distances(int v) const {
  check_node(v);
  std::vector<int> dist(n_, kUnreachable);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int nbr : adj_[cur]) {
      if (dist[nbr] == kUnreachable) {
        dist[nbr] = dist[cur] + 1;
        queue.push_back(nbr);
      }
    }
  }
  return dist;
}

int Graph::distance(int v, int w) const {
  check_node(v);
  check_node(w);
  if (v == w) return 0;
  // bounded BFS from v, stopping as soon as w is reached
  std::vector<int> dist(n_, kUnreachable);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int nbr : adj_[cur]) {
      if (dist[nbr] == kUnreachable) {
        dist[nbr] = dist[cur] + 1;
        if (nbr == w) return dist[nbr];
        queue.push_back(nbr);
      }
    }
  }
  return kUnreachable;
}

NodeSet Graph::delta_neighborhood(int v, int delta) const {
  check_node(v);
  if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
  std::vector<int> dist(n_, kUnreachable);
  std::deque<int> queue{v};
  dist[v] = 0;
  NodeSet out{v};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (dist[cur] == delta) continue;
    for (int nbr : adj_[cur]) {
      if (dist[nbr] == kUnreachable) {
        dist[nbr] = dist[cur] + 1;
        out.push_back(nbr);
        queue.push_back(nbr);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeSet Graph::closed_neighborhood(int v) const {
  check_node(v);
  NodeSet out = adj_[v];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto dist = bfs_distances(0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

int Graph::nu(int delta) const {
  if (edge_count_ == 0) {
    throw std::invalid_argument("nu is undefined on an edgeless graph");
  }
  std::vector<NodeSet> hoods(n_);
  for (int v = 0; v < n_; ++v) hoods[v] = delta_neighborhood(v, delta);
  auto one_sided = [&](int v, int w) {
    NodeSet diff;
    std::set_difference(hoods[v].begin(), hoods[v].end(), hoods[w].begin(),
                        hoods[w].end(), std::back_inserter(diff));
    return static_cast<int>(diff.size());
  };
  int best = 0;
  for (auto [u, v] : edges()) {
    best = std::max({best, one_sided(u, v), one_sided(v, u)});
  }
  return best;
}

InducedSubgraph Graph::induced_subgraph(const NodeSet& nodes) const {
  NodeSet selected = nodes;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()),
                 selected.end());
  for (int v : selected) check_node(v);

  std::vector<std::pair<int, int>> sub_edges;
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(selected.begin(), selected.end(),
                                             v) -
                            selected.begin());
  };
  for (int v : selected) {
    for (int w : adj_[v]) {
      if (v < w && std::binary_search(selected.begin(), selected.end(), w)) {
        sub_edges.emplace_back(local(v), local(w));
      }
    }
  }
  return InducedSubgraph{
      Graph(static_cast<int>(selected.size()), sub_edges), selected};
}

int InducedSubgraph::to_local(int original_id) const {
  auto it = std::lower_bound(original_ids.begin(), original_ids.end(),
                             original_id);
  if (it == original_ids.end() || *it != original_id) {
    throw std::invalid_argument("node not in subgraph");
  }
  return static_cast<int>(it - original_ids.begin());
}

NeighborhoodTable::NeighborhoodTable(const Graph& g, int delta)
    : g_(&g), delta_(delta), cache_(g.node_count()) {
  if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
}

const NodeSet& NeighborhoodTable::of(int v) const {
  auto& slot = cache_.at(v);
  if (!slot) slot = g_->delta_neighborhood(v, delta_);
  return *slot;
}

bool NeighborhoodTable::within(int v, int w) const {
  const NodeSet& hood = of(v);
  return std::binary_search(hood.begin(), hood.end(), w);
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph generate_random_geometric(int n, double radius, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  // near the connectivity threshold most draws are disconnected, so the
  // retry budget has to be generous; each attempt is microseconds
  constexpr int kMaxAttempts = 10000;
  Rng rng(derive_seed(seed, "rgg"));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = rng.uniform_double();
      ys[i] = rng.uniform_double();
    }
    std::vector<std::pair<int, int>> edges;
    const double r2 = radius * radius;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double dx = xs[i] - xs[j];
        double dy = ys[i] - ys[j];
        if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
      }
    }
    Graph g(n, edges);
    if (g.is_connected()) return g;  // coordinates are discarded
  }
  throw std::runtime_error(
      "could not generate a connected geometric graph; radius too small?");
}

namespace {

// Coverage of a position multiset, |union of delta-neighborhoods|.
int coverage_of(const std::vector<NodeSet>& hoods, int n,
                const std::vector<int>& positions) {
  std::vector<char> covered(n, 0);
  int count = 0;
  for (int p : positions) {
    for (int v : hoods[p]) {
      if (!covered[v]) {
        covered[v] = 1;
        ++count;
      }
    }
  }
  return count;
}

// Enumerates nondecreasing position tuples (coverage is symmetric in the
// agents), calling fn on each.
template <typename Fn>
void for_each_multiset(int n, int m, Fn&& fn) {
  std::vector<int> positions(m, 0);
  while (true) {
    fn(positions);
    int i = m - 1;
    while (i >= 0 && positions[i] == n - 1) --i;
    if (i < 0) break;
    int next = positions[i] + 1;
    for (int j = i; j < m; ++j) positions[j] = next;
  }
}

std::vector<Graph> trap_catalog(int max_nodes) {
  std::vector<Graph> catalog;
  for (int n = 3; n <= max_nodes; ++n) {
    catalog.push_back(make_path(n));
    catalog.push_back(make_star(n));
  }
  // two hubs with p and q leaves, joined by a path with `sep` inner nodes
  for (int sep = 0; sep <= 2; ++sep) {
    for (int p = 1; p <= max_nodes; ++p) {
      for (int q = p; q <= max_nodes; ++q) {
        int n = 2 + sep + p + q;
        if (n > max_nodes) continue;
        std::vector<std::pair<int, int>> edges;
        int hub_a = 0;
        int hub_b = 1 + sep;
        int prev = hub_a;
        for (int k = 1; k <= sep; ++k) {
          edges.emplace_back(prev, k);
          prev = k;
        }
        edges.emplace_back(prev, hub_b);
        int next_id = hub_b + 1;
        for (int k = 0; k < p; ++k) edges.emplace_back(hub_a, next_id++);
        for (int k = 0; k < q; ++k) edges.emplace_back(hub_b, next_id++);
        catalog.emplace_back(n, edges);
      }
    }
  }
  // paths with one pendant node
  for (int n = 4; n <= max_nodes; ++n) {
    for (int at = 1; at + 2 < n; ++at) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(at, n - 1);
      catalog.emplace_back(n, edges);
    }
  }
  return catalog;
}

}  // namespace

std::optional<TrapInstance> find_greedy_trap(int max_nodes, int agent_count,
                                             int delta) {
  if (max_nodes < 1 || max_nodes > 10) {
    throw std::invalid_argument("max_nodes must be in [1, 10]");
  }
  if (agent_count < 1 || agent_count > 3) {
    throw std::invalid_argument("agent_count must be in [1, 3]");
  }
  for (const Graph& g : trap_catalog(max_nodes)) {
    const int n = g.node_count();
    std::vector<NodeSet> hoods(n);
    for (int v = 0; v < n; ++v) hoods[v] = g.delta_neighborhood(v, delta);

    int optimum = 0;
    for_each_multiset(n, agent_count, [&](const std::vector<int>& pos) {
      optimum = std::max(optimum, coverage_of(hoods, n, pos));
    });

    std::optional<TrapInstance> found;
    for_each_multiset(n, agent_count, [&](const std::vector<int>& pos) {
      if (found) return;
      int value = coverage_of(hoods, n, pos);
      if (value >= optimum) return;
      for (int i = 0; i < agent_count; ++i) {
        for (int cand : g.closed_neighborhood(pos[i])) {
          std::vector<int> moved = pos;
          moved[i] = cand;
          if (coverage_of(hoods, n, moved) > value) return;
        }
      }
      found = TrapInstance{g, pos, value, optimum};
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace dgc
