// Copyright 2026 The Necklace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NECKLACE_NEIGHBORHOOD_HPP_
#define NECKLACE_NEIGHBORHOOD_HPP_

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "necklace/necklace.hpp"

namespace necklace {

/// Agents as vertices; u and v are adjacent iff they own adjacent beads.
class NeighborhoodGraph {
 public:
  explicit NeighborhoodGraph(std::size_t agents = 0) : adj_(agents) {}

  std::size_t agent_count() const { return adj_.size(); }
  const std::set<Agent>& neighbors(Agent a) const { return adj_.at(a); }
  bool has_edge(Agent u, Agent v) const { return adj_.at(u).contains(v); }
  std::size_t edge_count() const;
  /// Edges as (lo, hi) pairs in ascending order.
  std::vector<std::pair<Agent, Agent>> edges() const;

  void add_edge(Agent u, Agent v);
  void clear_agent(Agent a);

  /// Breadth-first distances from `from`; unreachable agents get SIZE_MAX.
  std::vector<std::size_t> distances(Agent from) const;
  bool connected() const;

 private:
  std::vector<std::set<Agent>> adj_;
};

/// Throws Errc::kUnassignedBead.
NeighborhoodGraph build_neighborhood_graph(const Necklace& necklace);

/// Drops every edge touching `agents` and re-derives those edges by walking
/// only the listed agents' beads.
void partial_rebuild(NeighborhoodGraph& graph, const Necklace& necklace,
                     const std::set<Agent>& agents);

/// Positions of an agent's first and last bead (0 when it owns nothing).
struct AgentSpan {
  std::size_t first = 0;
  std::size_t last = 0;
};

std::vector<AgentSpan> agent_spans(const Necklace& necklace);

}  // namespace necklace

#endif  // NECKLACE_NEIGHBORHOOD_HPP_
