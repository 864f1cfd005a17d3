#include "dgc/game.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace dgc {

void validate_profile(const Graph& g, const ActionProfile& profile) {
  if (profile.positions.empty()) {
    throw std::invalid_argument("profile needs at least one agent");
  }
  if (profile.delta < 0) {
    throw std::invalid_argument("delta must be nonnegative");
  }
  for (int p : profile.positions) {
    if (p < 0 || p >= g.node_count()) {
      throw std::invalid_argument("agent position " + std::to_string(p) +
                                  " is not a node");
    }
  }
}

NodeSet covered_set(const Graph& g, const ActionProfile& profile) {
  validate_profile(g, profile);
  std::vector<char> covered(g.node_count(), 0);
  for (int p : profile.positions) {
    for (int v : g.delta_neighborhood(p, profile.delta)) covered[v] = 1;
  }
  NodeSet out;
  for (int v = 0; v < g.node_count(); ++v) {
    if (covered[v]) out.push_back(v);
  }
  return out;
}

int potential(const Graph& g, const ActionProfile& profile) {
  return static_cast<int>(covered_set(g, profile).size());
}

int utility(const Graph& g, int agent, const ActionProfile& profile) {
  validate_profile(g, profile);
  if (agent < 0 || agent >= profile.agent_count()) {
    throw std::invalid_argument("bad agent index");
  }
  std::vector<char> others(g.node_count(), 0);
  for (int j = 0; j < profile.agent_count(); ++j) {
    if (j == agent) continue;
    for (int v : g.delta_neighborhood(profile.positions[j], profile.delta)) {
      others[v] = 1;
    }
  }
  int count = 0;
  for (int v : g.delta_neighborhood(profile.positions[agent], profile.delta)) {
    if (!others[v]) ++count;
  }
  return count;
}

int partial_utility(const Graph& g, int agent, int node,
                    const ActionProfile& profile) {
  validate_profile(g, profile);
  if (agent < 0 || agent >= profile.agent_count()) {
    throw std::invalid_argument("bad agent index");
  }
  if (node < 0 || node >= g.node_count()) {
    throw std::invalid_argument("invalid node id");
  }
  auto dist = g.bfs_distances(node);
  for (int j = 0; j < profile.agent_count(); ++j) {
    if (j == agent) continue;
    if (dist[profile.positions[j]] <= profile.delta) return 0;
  }
  return 1;
}

NodeSet constrained_actions(const Graph& g, int node) {
  return g.closed_neighborhood(node);
}

ActionProfile parse_profile(std::string_view literal, int delta) {
  ActionProfile profile;
  profile.delta = delta;
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t end = literal.find(',', start);
    if (end == std::string_view::npos) end = literal.size();
    std::string_view token = literal.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad profile literal: '" +
                                  std::string(literal) + "'");
    }
    profile.positions.push_back(value);
    start = end + 1;
  }
  return profile;
}

std::string format_profile(const ActionProfile& profile) {
  std::ostringstream out;
  for (std::size_t i = 0; i < profile.positions.size(); ++i) {
    if (i) out << ',';
    out << profile.positions[i];
  }
  return out.str();
}

}  // namespace dgc
