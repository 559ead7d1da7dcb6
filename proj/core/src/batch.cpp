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

#include "necklace/batch.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "necklace/cuts.hpp"
#include "necklace/error.hpp"
#include "necklace/offline.hpp"

namespace necklace {
namespace {

void require_exact_two_colors(const Necklace& necklace) {
  if (necklace.color_count() > 2) throw Error(Errc::kNotTwoColors, "batch updates need two colors");
  if (necklace.mode() != Mode::kExact) {
    throw Error(Errc::kDivisibility, "batch updates need an exact-mode necklace");
  }
}

std::vector<std::pair<Agent, Agent>> sorted_unique(std::vector<std::pair<Agent, Agent>> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void check_demands(const std::vector<long>& demand) {
  if (std::accumulate(demand.begin(), demand.end(), 0L) != 0) {
    throw Error(Errc::kInfeasible, "demands do not balance");
  }
  if (std::all_of(demand.begin(), demand.end(), [](long d) { return d == 0; })) {
    throw Error(Errc::kZeroBatch, "no agent needs to change its holdings");
  }
}

// Solves the flow for the current state and re-splits each flow-connected
// group of active agents.
void repair(Necklace& necklace, Color color, BatchOptions options, BatchStats& stats) {
  std::vector<long> demand = color_demands(necklace, color);
  stats.imbalanced = static_cast<std::size_t>(
      std::count_if(demand.begin(), demand.end(), [](long d) { return d != 0; }));
  const NeighborhoodTree tree = build_neighborhood_tree(necklace);
  FlowNetwork network;
  try {
    network = build_flow_network(tree, std::move(demand));
  } catch (const Error& e) {
    if (e.code() != Errc::kZeroBatch) throw;
    stats.zero_batch = true;
    return;
  }
  stats.must_move = network.required_flow();
  FlowSolution solution = solve_tree_flow(network, tree);
  if (options.prune) {
    const NeighborhoodGraph graph = build_neighborhood_graph(necklace);
    solution = prune_active(graph, tree, network, std::move(solution));
  }
  stats.active = solution.active.size();

  // Union-find over flow edges.
  const std::size_t k = necklace.agent_count();
  std::vector<Agent> root(k);
  std::iota(root.begin(), root.end(), Agent{0});
  auto find = [&](Agent a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  for (const auto& [edge, amount] : solution.flow) {
    if (amount > 0) root[find(edge.first)] = find(edge.second);
  }
  std::map<Agent, std::vector<Agent>> groups;
  for (Agent a : solution.active) groups[find(a)].push_back(a);
  for (auto& [rep, agents] : groups) {
    std::sort(agents.begin(), agents.end());
    offline_split_range(necklace, agents);
    ++stats.reruns;
    stats.rerun_agents.insert(stats.rerun_agents.end(), agents.begin(), agents.end());
  }
  std::sort(stats.rerun_agents.begin(), stats.rerun_agents.end());
}

std::vector<std::size_t> checked_positions(std::span<const std::size_t> positions,
                                           std::size_t limit) {
  std::vector<std::size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] == 0 || sorted[i] > limit) {
      throw Error(Errc::kOutOfRange, "position " + std::to_string(sorted[i]) + " outside [1, " +
                                         std::to_string(limit) + "]");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw Error(Errc::kOutOfRange, "position " + std::to_string(sorted[i]) + " listed twice");
    }
  }
  return sorted;
}

}  // namespace

std::vector<std::pair<Agent, Agent>> NeighborhoodTree::edges() const {
  std::vector<std::pair<Agent, Agent>> out;
  for (Agent a = 0; a < parent.size(); ++a) {
    if (parent[a] != kNoAgent) out.emplace_back(a, parent[a]);
  }
  for (std::size_t i = 0; i + 1 < level_one.size(); ++i) {
    out.emplace_back(level_one[i], level_one[i + 1]);
  }
  return sorted_unique(std::move(out));
}

NeighborhoodTree build_neighborhood_tree(const Necklace& necklace) {
  if (!is_peelable(necklace)) {
    throw Error(Errc::kNotPeelable, "allocation is not nested; no neighborhood tree");
  }
  const std::size_t k = necklace.agent_count();
  const std::vector<AgentSpan> spans = agent_spans(necklace);
  NeighborhoodTree tree;
  tree.level.assign(k, 1);
  tree.parent.assign(k, kNoAgent);
  tree.children.assign(k, {});

  std::vector<Agent> order;
  std::vector<Agent> empty;
  for (Agent a = 0; a < k; ++a) {
    (spans[a].first == 0 ? empty : order).push_back(a);
  }
  std::sort(order.begin(), order.end(), [&](Agent x, Agent y) {
    return std::tie(spans[x].first, spans[y].last) < std::tie(spans[y].first, spans[x].last);
  });
  std::vector<Agent> open;
  for (Agent a : order) {
    while (!open.empty() && spans[open.back()].last < spans[a].first) open.pop_back();
    if (open.empty()) {
      tree.level_one.push_back(a);
    } else {
      const Agent p = open.back();
      if (spans[p].last < spans[a].last) {
        throw Error(Errc::kNotPeelable, "agent spans cross");
      }
      tree.parent[a] = p;
      tree.level[a] = tree.level[p] + 1;
      tree.children[p].push_back(a);
    }
    open.push_back(a);
  }
  // Agents holding nothing (transiently possible after deletions) hang off
  // the right end of level 1.
  for (Agent a : empty) tree.level_one.push_back(a);
  for (auto& c : tree.children) std::sort(c.begin(), c.end());
  return tree;
}

std::vector<long> color_demands(const Necklace& necklace, Color color) {
  std::vector<long> demand(necklace.agent_count());
  const long quota = static_cast<long>(necklace.quota(color));
  for (Agent a = 0; a < demand.size(); ++a) {
    demand[a] = static_cast<long>(necklace.owned(a, color)) - quota;
  }
  return demand;
}

long FlowNetwork::required_flow() const {
  long total = 0;
  for (long d : demand) total += d < 0 ? -d : 0;
  return total;
}

bool FlowNetwork::has_edge(Agent u, Agent v) const {
  const std::pair<Agent, Agent> key = u < v ? std::pair{u, v} : std::pair{v, u};
  return std::binary_search(edges.begin(), edges.end(), key);
}

FlowNetwork build_flow_network(const NeighborhoodGraph& graph, std::vector<long> demand) {
  if (demand.size() != graph.agent_count()) throw std::invalid_argument("demand size mismatch");
  check_demands(demand);
  return FlowNetwork{std::move(demand), graph.edges()};
}

FlowNetwork build_flow_network(const NeighborhoodTree& tree, std::vector<long> demand) {
  if (demand.size() != tree.agent_count()) throw std::invalid_argument("demand size mismatch");
  check_demands(demand);
  return FlowNetwork{std::move(demand), tree.edges()};
}

void FlowSolution::add(Agent from, Agent to, long amount) {
  if (amount < 0) {
    std::swap(from, to);
    amount = -amount;
  }
  if (amount == 0 || from == to) return;
  auto back = flow.find({to, from});
  if (back != flow.end()) {
    const long cancel = std::min(back->second, amount);
    back->second -= cancel;
    amount -= cancel;
    if (back->second == 0) flow.erase(back);
  }
  if (amount > 0) flow[{from, to}] += amount;
}

long FlowSolution::net_into(Agent u) const {
  long net = 0;
  for (const auto& [edge, amount] : flow) {
    if (edge.second == u) net += amount;
    if (edge.first == u) net -= amount;
  }
  return net;
}

std::vector<Agent> active_nodes(const FlowNetwork& network, const FlowSolution& solution) {
  std::set<Agent> active;
  for (Agent u = 0; u < network.node_count(); ++u) {
    if (network.demand[u] != 0) active.insert(u);
  }
  for (const auto& [edge, amount] : solution.flow) {
    if (amount > 0) {
      active.insert(edge.first);
      active.insert(edge.second);
    }
  }
  return {active.begin(), active.end()};
}

bool is_feasible(const FlowNetwork& network, const FlowSolution& solution) {
  std::vector<long> net(network.node_count(), 0);
  long value = 0;
  for (const auto& [edge, amount] : solution.flow) {
    if (amount < 0) return false;
    if (edge.first >= net.size() || edge.second >= net.size()) return false;
    if (!network.has_edge(edge.first, edge.second)) return false;
    net[edge.first] -= amount;
    net[edge.second] += amount;
  }
  // Saturated source/sink edges: inflow from the source equals -demand and
  // outflow to the sink equals demand, so interior net inflow must equal demand.
  for (Agent u = 0; u < net.size(); ++u) {
    if (net[u] != network.demand[u]) return false;
    value += network.source_capacity(u);
  }
  return value == network.required_flow() && solution.value == value;
}

FlowSolution solve_tree_flow(const FlowNetwork& network, const NeighborhoodTree& tree) {
  const std::size_t k = network.node_count();
  if (tree.agent_count() != k) throw std::invalid_argument("tree and network sizes differ");
  FlowSolution solution;
  std::vector<long> excess(k);
  for (Agent u = 0; u < k; ++u) excess[u] = -network.demand[u];

  // Phase 1: highest level first; only nodes holding excess are visited.
  using Item = std::pair<std::size_t, Agent>;  // (level, agent)
  auto later = [](const Item& x, const Item& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> pending(later);
  std::vector<char> queued(k, 0);
  for (Agent u = 0; u < k; ++u) {
    if (excess[u] != 0 && tree.level[u] > 1) {
      pending.emplace(tree.level[u], u);
      queued[u] = 1;
    }
  }
  while (!pending.empty()) {
    const Agent u = pending.top().second;
    pending.pop();
    queued[u] = 0;
    const long e = excess[u];
    if (e == 0) continue;
    const Agent p = tree.parent[u];
    solution.add(u, p, e);
    excess[p] += e;
    excess[u] = 0;
    if (tree.level[p] > 1 && !queued[p]) {
      pending.emplace(tree.level[p], p);
      queued[p] = 1;
    }
  }

  // Phase 2: sweep level 1 left to right.
  for (std::size_t i = 0; i + 1 < tree.level_one.size(); ++i) {
    const Agent u = tree.level_one[i];
    const Agent v = tree.level_one[i + 1];
    if (excess[u] == 0) continue;
    solution.add(u, v, excess[u]);
    excess[v] += excess[u];
    excess[u] = 0;
  }
  for (long e : excess) {
    if (e != 0) throw Error(Errc::kInfeasible, "tree flow left unmatched excess");
  }
  solution.value = network.required_flow();
  solution.active = active_nodes(network, solution);
  return solution;
}

FlowSolution prune_active(const NeighborhoodGraph& graph, const NeighborhoodTree& tree,
                          const FlowNetwork& network, FlowSolution solution) {
  std::vector<Agent> candidates = solution.active;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Agent x, Agent y) { return tree.level[x] < tree.level[y]; });
  for (Agent u : candidates) {
    if (network.demand[u] != 0) continue;
    // Net flow from each neighbour into u; all of them must be children.
    std::map<Agent, long> into;
    bool relay = true;
    for (const auto& [edge, amount] : solution.flow) {
      Agent other;
      long signed_amount;
      if (edge.first == u) {
        other = edge.second;
        signed_amount = -amount;
      } else if (edge.second == u) {
        other = edge.first;
        signed_amount = amount;
      } else {
        continue;
      }
      if (tree.parent[other] != u) {
        relay = false;
        break;
      }
      into[other] += signed_amount;
    }
    if (!relay || into.size() < 2) continue;

    // Breadth-first spanning tree of the flow-carrying children in the graph.
    std::vector<Agent> members;
    for (const auto& [child, amount] : into) members.push_back(child);
    std::map<Agent, Agent> up;
    std::vector<Agent> visit{members.front()};
    up[members.front()] = kNoAgent;
    for (std::size_t i = 0; i < visit.size(); ++i) {
      for (Agent v : graph.neighbors(visit[i])) {
        if (into.contains(v) && !up.contains(v)) {
          up[v] = visit[i];
          visit.push_back(v);
        }
      }
    }
    if (visit.size() != members.size()) continue;

    for (const auto& [child, amount] : into) solution.add(u, child, amount);
    // Leaves first: each node forwards what it used to send to u.
    std::map<Agent, long> send = into;
    for (std::size_t i = visit.size(); i-- > 1;) {
      const Agent v = visit[i];
      solution.add(v, up[v], send[v]);
      send[up[v]] += send[v];
    }
  }
  solution.active = active_nodes(network, solution);
  return solution;
}

BatchStats batch_relocate(Necklace& necklace,
                          std::span<const std::pair<std::size_t, std::size_t>> moves,
                          BatchOptions options) {
  require_exact_two_colors(necklace);
  BatchStats stats;
  stats.moved = moves.size();
  if (moves.empty()) return stats;

  // Dry run on the color sequence so that nothing changes on bad input.
  std::vector<Color> colors = necklace.color_sequence();
  std::optional<Color> moved_color;
  for (const auto& [from, to] : moves) {
    if (from == 0 || from > colors.size() || to == 0 || to > colors.size()) {
      throw Error(Errc::kOutOfRange, "move (" + std::to_string(from) + ", " + std::to_string(to) +
                                         ") outside [1, " + std::to_string(colors.size()) + "]");
    }
    const Color c = colors[from - 1];
    if (moved_color && *moved_color != c) {
      throw Error(Errc::kColorMismatch, "a batch must move beads of a single color");
    }
    moved_color = c;
    colors.erase(colors.begin() + static_cast<long>(from - 1));
    colors.insert(colors.begin() + static_cast<long>(to - 1), c);
  }

  for (const auto& [from, to] : moves) {
    if (from == to) continue;
    const Agent host = necklace.owner(necklace.at(to));
    const BeadId bead = necklace.relocate(from, to);
    necklace.set_owner(bead, host);
  }
  repair(necklace, *moved_color, options, stats);
  return stats;
}

BatchStats batch_relocate(Necklace& necklace,
                          std::span<const std::pair<std::size_t, std::size_t>> moves,
                          const FencePolicy& policy, BatchOptions options) {
  if (policy.dirty) {
    throw Error(Errc::kDirtyState, "fence relocations pending; rebuild before batch updates");
  }
  return batch_relocate(necklace, moves, options);
}

BatchStats insert_batch(Necklace& necklace, Color color, std::span<const std::size_t> positions,
                        BatchOptions options) {
  require_exact_two_colors(necklace);
  if (positions.empty() || positions.size() % necklace.agent_count() != 0) {
    throw Error(Errc::kCountNotMultipleOfK,
                std::to_string(positions.size()) + " insertions for k=" +
                    std::to_string(necklace.agent_count()));
  }
  if (color >= necklace.color_count()) throw Error(Errc::kOutOfRange, "unknown color");
  const std::vector<std::size_t> sorted =
      checked_positions(positions, necklace.size() + positions.size());
  BatchStats stats;
  stats.moved = sorted.size();

  BeadId cursor = necklace.head();
  std::size_t pos = 1;
  for (std::size_t target : sorted) {
    while (pos < target && cursor.valid()) {
      cursor = necklace.next(cursor);
      ++pos;
    }
    const Agent owner = cursor.valid() ? necklace.owner(cursor) : necklace.owner(necklace.tail());
    necklace.insert_before(cursor, color, owner);
    pos = target + 1;
  }
  repair(necklace, color, options, stats);
  return stats;
}

BatchStats delete_batch(Necklace& necklace, std::span<const std::size_t> positions,
                        BatchOptions options) {
  require_exact_two_colors(necklace);
  if (positions.empty() || positions.size() % necklace.agent_count() != 0) {
    throw Error(Errc::kCountNotMultipleOfK,
                std::to_string(positions.size()) + " deletions for k=" +
                    std::to_string(necklace.agent_count()));
  }
  const std::vector<std::size_t> sorted = checked_positions(positions, necklace.size());
  if (sorted.size() == necklace.size()) throw Error(Errc::kEmptyInput, "cannot delete every bead");

  std::vector<BeadId> doomed;
  doomed.reserve(sorted.size());
  BeadId cursor = necklace.head();
  std::size_t pos = 1;
  for (std::size_t target : sorted) {
    while (pos < target) {
      cursor = necklace.next(cursor);
      ++pos;
    }
    doomed.push_back(cursor);
  }
  const Color color = necklace.color(doomed.front());
  for (BeadId b : doomed) {
    if (necklace.color(b) != color) {
      throw Error(Errc::kColorMismatch, "a deletion batch must remove beads of a single color");
    }
  }
  BatchStats stats;
  stats.moved = doomed.size();
  for (BeadId b : doomed) necklace.erase(b);
  repair(necklace, color, options, stats);
  return stats;
}

}  // namespace necklace
