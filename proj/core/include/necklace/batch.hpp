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

#ifndef NECKLACE_BATCH_HPP_
#define NECKLACE_BATCH_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "necklace/dynamic2.hpp"
#include "necklace/necklace.hpp"
#include "necklace/neighborhood.hpp"

namespace necklace {

/// Leveled spanning tree over the agents. An agent whose span of beads lies
/// inside another agent's span sits one level above the innermost such agent
/// and is joined to it; agents enclosed by nobody form level 1 and are joined
/// to their neighbours in left-to-right order.
struct NeighborhoodTree {
  std::vector<std::size_t> level;             // >= 1
  std::vector<Agent> parent;                  // kNoAgent on level 1
  std::vector<std::vector<Agent>> children;   // ascending
  std::vector<Agent> level_one;               // left to right

  std::size_t agent_count() const { return level.size(); }
  /// (lo, hi) pairs, ascending.
  std::vector<std::pair<Agent, Agent>> edges() const;
};

/// Throws Errc::kNotPeelable when agent spans are not nested.
NeighborhoodTree build_neighborhood_tree(const Necklace& necklace);

/// Per-agent signed imbalance (owned - quota) of one color.
std::vector<long> color_demands(const Necklace& necklace, Color color);

/// Interior nodes are agents. Agents with negative demand are fed from the
/// source with capacity -demand; agents with positive demand drain into the
/// sink with capacity demand. Interior edges are undirected and uncapped.
struct FlowNetwork {
  std::vector<long> demand;
  std::vector<std::pair<Agent, Agent>> edges;  // (lo, hi), ascending

  std::size_t node_count() const { return demand.size(); }
  long source_capacity(Agent u) const { return demand.at(u) < 0 ? -demand[u] : 0; }
  long sink_capacity(Agent u) const { return demand.at(u) > 0 ? demand[u] : 0; }
  /// Total source capacity, i.e. the beads that must change owner.
  long required_flow() const;
  bool has_edge(Agent u, Agent v) const;
};

/// Throw Errc::kZeroBatch when every demand is zero and Errc::kInfeasible
/// when the demands do not sum to zero.
FlowNetwork build_flow_network(const NeighborhoodGraph& graph, std::vector<long> demand);
FlowNetwork build_flow_network(const NeighborhoodTree& tree, std::vector<long> demand);

/// Flow on directed interior edges (only positive amounts are stored).
struct FlowSolution {
  std::map<std::pair<Agent, Agent>, long> flow;
  std::vector<Agent> active;  // ascending
  long value = 0;

  void add(Agent from, Agent to, long amount);
  long net_into(Agent u) const;
};

/// Nodes with non-zero demand plus nodes touched by positive flow.
std::vector<Agent> active_nodes(const FlowNetwork& network, const FlowSolution& solution);

/// Checks edge membership, non-negativity, conservation and saturation of
/// every source and sink edge.
bool is_feasible(const FlowNetwork& network, const FlowSolution& solution);

/// Two-phase solver: excess is pushed down the tree level by level (highest
/// level first), then swept left to right along level 1.
FlowSolution solve_tree_flow(const FlowNetwork& network, const NeighborhoodTree& tree);

/// Drops relay nodes (zero demand, flow only to their children in the tree)
/// whose flow-carrying children are connected in `graph`, routing the flow
/// through those children instead. Never increases the active count.
FlowSolution prune_active(const NeighborhoodGraph& graph, const NeighborhoodTree& tree,
                          const FlowNetwork& network, FlowSolution solution);

struct BatchOptions {
  bool prune = true;
};

struct BatchStats {
  std::size_t moved = 0;            // beads in the batch
  long must_move = 0;               // beads that must change owner
  std::size_t imbalanced = 0;       // agents with non-zero demand
  std::size_t active = 0;           // agents re-split
  std::size_t reruns = 0;
  bool zero_batch = false;
  std::vector<Agent> rerun_agents;
};

/// Applies the moves one after another (each pair refers to the necklace as
/// left by the previous move), each bead going to the owner of the bead it
/// lands on, then repairs fairness with one flow solve and re-splits every
/// flow-connected group of active agents. All moved beads must share a color
/// (Errc::kColorMismatch); validation precedes any mutation.
BatchStats batch_relocate(Necklace& necklace,
                          std::span<const std::pair<std::size_t, std::size_t>> moves,
                          BatchOptions options = {});
BatchStats batch_relocate(Necklace& necklace,
                          std::span<const std::pair<std::size_t, std::size_t>> moves,
                          const FencePolicy& policy, BatchOptions options = {});

/// Inserts beads of one color so that they occupy `positions` in the result
/// (any order, distinct). Each new bead starts with the owner of the bead
/// after it (the last bead's owner when appended). The count must be a
/// positive multiple of k (Errc::kCountNotMultipleOfK).
BatchStats insert_batch(Necklace& necklace, Color color, std::span<const std::size_t> positions,
                        BatchOptions options = {});

/// Deletes the beads at `positions` (distinct, one color, a positive multiple
/// of k many).
BatchStats delete_batch(Necklace& necklace, std::span<const std::size_t> positions,
                        BatchOptions options = {});

}  // namespace necklace

#endif  // NECKLACE_BATCH_HPP_
