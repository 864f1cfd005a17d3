#pragma once

#include <string>
#include <string_view>

#include "dgc/graph.hpp"

namespace dgc {

// Joint agent positions plus the sensing range shared by all agents.
// Multiple agents may occupy the same node.
struct ActionProfile {
  std::vector<int> positions;
  int delta = 1;

  int agent_count() const { return static_cast<int>(positions.size()); }
  bool operator==(const ActionProfile&) const = default;
};

void validate_profile(const Graph& g, const ActionProfile& profile);

// Union of the agents' delta-neighborhoods.
NodeSet covered_set(const Graph& g, const ActionProfile& profile);

// Number of covered nodes; the potential of the coverage game.
int potential(const Graph& g, const ActionProfile& profile);

// Nodes covered only by agent i.
int utility(const Graph& g, int agent, const ActionProfile& profile);

// 1 if no agent other than `agent` is within delta of `node`, else 0.
int partial_utility(const Graph& g, int agent, int node,
                    const ActionProfile& profile);

// Legal one-step moves: the closed neighborhood of the current node.
NodeSet constrained_actions(const Graph& g, int node);

// Parses a comma-separated profile literal such as "1,3".
ActionProfile parse_profile(std::string_view literal, int delta);
std::string format_profile(const ActionProfile& profile);

}  // namespace dgc
