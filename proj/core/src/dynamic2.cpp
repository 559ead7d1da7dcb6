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

#include "necklace/dynamic2.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "necklace/error.hpp"
#include "necklace/neighborhood.hpp"
#include "necklace/offline.hpp"

namespace necklace {
namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

void check_position(const Necklace& necklace, std::size_t pos) {
  if (pos == 0 || pos > necklace.size()) {
    throw Error(Errc::kOutOfRange, "position " + std::to_string(pos) + " outside [1, " +
                                       std::to_string(necklace.size()) + "]");
  }
}

void check_clean(const FencePolicy& policy) {
  if (policy.dirty) {
    throw Error(Errc::kDirtyState, "fence relocations pending; rebuild before exact updates");
  }
}

void rerun(Necklace& necklace, std::vector<Agent> agents, UpdateStats& stats) {
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  offline_split_range(necklace, agents);
  ++stats.reruns;
  stats.rerun_agents.insert(stats.rerun_agents.end(), agents.begin(), agents.end());
}

void finish(UpdateStats& stats) {
  auto& v = stats.rerun_agents;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Moves the bead and hands it to the owner of the bead it lands on.
// Returns {losing owner, receiving owner, moved bead}.
struct Handover {
  Agent loser;
  Agent gainer;
  BeadId bead;
};

Handover move_to_host(Necklace& necklace, std::size_t from, std::size_t to) {
  check_position(necklace, from);
  check_position(necklace, to);
  const BeadId bead = necklace.at(from);
  const Agent loser = necklace.owner(bead);
  const Agent gainer = necklace.owner(necklace.at(to));
  if (loser == kNoAgent || gainer == kNoAgent) {
    throw Error(Errc::kUnassignedBead, "relocation needs a complete allocation");
  }
  necklace.relocate(from, to);
  necklace.set_owner(bead, gainer);
  return {loser, gainer, bead};
}

}  // namespace

FencePolicy FencePolicy::for_necklace(const Necklace& necklace) {
  FencePolicy policy;
  const std::size_t k = necklace.agent_count();
  policy.extra_cut_budget = necklace.color_count() <= 2 ? 2 * k : 2 * k * necklace.color_count();
  return policy;
}

std::size_t ColoredDigraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& arcs : out) total += arcs.size();
  return total;
}

int ColoredDigraph::weight(Agent u, Agent v) const {
  for (const Arc& arc : out.at(u)) {
    if (arc.to == v) return arc.weight;
  }
  return -1;
}

UpdateStats swap(Necklace& necklace, std::size_t j) {
  if (j == 0 || j >= necklace.size()) {
    throw Error(Errc::kOutOfRange, "swap index " + std::to_string(j) + " outside [1, " +
                                       std::to_string(necklace.size() - 1) + "]");
  }
  UpdateStats stats;
  const BeadId left = necklace.at(j);
  const BeadId right = necklace.next(left);
  const Agent a = necklace.owner(left);
  const Agent b = necklace.owner(right);
  if (necklace.color(left) == necklace.color(right)) return stats;
  necklace.move_before(right, left);
  if (a == b) return stats;
  necklace.set_owner(right, a);
  necklace.set_owner(left, b);
  rerun(necklace, {a, b}, stats);
  stats.path_length = 2;
  finish(stats);
  return stats;
}

UpdateStats relocate_path(Necklace& necklace, std::size_t from, std::size_t to) {
  UpdateStats stats;
  if (from == to) {
    check_position(necklace, from);
    return stats;
  }
  const Handover move = move_to_host(necklace, from, to);
  stats.path_length = 1;
  if (move.loser == move.gainer) return stats;

  const NeighborhoodGraph graph = build_neighborhood_graph(necklace);
  const std::vector<std::size_t> dist = graph.distances(move.gainer);
  std::vector<Agent> path{move.loser};
  if (dist[move.loser] == kFar) {
    // The loser gave away its only bead and is isolated.
    path.push_back(move.gainer);
  } else {
    Agent u = move.loser;
    while (u != move.gainer) {
      for (Agent v : graph.neighbors(u)) {
        if (dist[v] + 1 == dist[u]) {
          u = v;
          break;
        }
      }
      path.push_back(u);
    }
  }
  stats.path_length = path.size();
  stats.path_weight = path.size() - 1;
  rerun(necklace, path, stats);
  finish(stats);
  return stats;
}

ColoredDigraph build_colored_digraph(const Necklace& necklace, Color color) {
  const std::size_t k = necklace.agent_count();
  std::vector<std::vector<int>> best(k);
  std::vector<std::vector<Agent>> targets(k);
  auto note = [&](Agent u, Agent v, int w) {
    auto& t = targets[u];
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == v) {
        best[u][i] = std::min(best[u][i], w);
        return;
      }
    }
    t.push_back(v);
    best[u].push_back(w);
  };
  for (BeadId x = necklace.head(); x.valid(); x = necklace.next(x)) {
    const BeadId y = necklace.next(x);
    const Agent u = necklace.owner(x);
    if (u == kNoAgent) throw Error(Errc::kUnassignedBead, "digraph needs every bead owned");
    if (!y.valid()) break;
    const Agent v = necklace.owner(y);
    if (v == kNoAgent) throw Error(Errc::kUnassignedBead, "digraph needs every bead owned");
    if (u == v) continue;
    note(u, v, necklace.color(x) == color ? 0 : 1);
    note(v, u, necklace.color(y) == color ? 0 : 1);
  }
  ColoredDigraph graph;
  graph.out.resize(k);
  for (Agent u = 0; u < k; ++u) {
    for (std::size_t i = 0; i < targets[u].size(); ++i) {
      graph.out[u].push_back({targets[u][i], static_cast<std::uint8_t>(best[u][i])});
    }
    std::sort(graph.out[u].begin(), graph.out[u].end(),
              [](const ColoredDigraph::Arc& l, const ColoredDigraph::Arc& r) { return l.to < r.to; });
  }
  return graph;
}

UpdateStats relocate_colorpath(Necklace& necklace, std::size_t from, std::size_t to) {
  UpdateStats stats;
  if (from == to) {
    check_position(necklace, from);
    return stats;
  }
  const Color color = necklace.color(necklace.at(from));
  const Handover move = move_to_host(necklace, from, to);
  stats.path_length = 1;
  if (move.loser == move.gainer) return stats;

  // 0/1 breadth-first search from the agent holding the surplus.
  const ColoredDigraph graph = build_colored_digraph(necklace, color);
  const std::size_t k = necklace.agent_count();
  std::vector<std::size_t> dist(k, kFar);
  std::vector<Agent> parent(k, kNoAgent);
  std::deque<Agent> queue{move.gainer};
  dist[move.gainer] = 0;
  while (!queue.empty()) {
    const Agent u = queue.front();
    queue.pop_front();
    for (const auto& arc : graph.out[u]) {
      const std::size_t d = dist[u] + arc.weight;
      if (d >= dist[arc.to]) continue;
      dist[arc.to] = d;
      parent[arc.to] = u;
      if (arc.weight == 0) {
        queue.push_front(arc.to);
      } else {
        queue.push_back(arc.to);
      }
    }
  }

  std::vector<Agent> path;
  std::vector<std::uint8_t> weights;
  if (dist[move.loser] == kFar) {
    path = {move.gainer, move.loser};
    weights = {1};
  } else {
    for (Agent u = move.loser; u != kNoAgent; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      weights.push_back(static_cast<std::uint8_t>(graph.weight(path[i], path[i + 1])));
    }
  }
  stats.path_length = path.size();

  // Hand-overs first, in path order; none of them can disturb a later arc
  // because the path is simple.
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] != 0) {
      ++stats.path_weight;
      continue;
    }
    const Agent u = path[i];
    const Agent v = path[i + 1];
    BeadId chosen;
    for (BeadId x = necklace.first_owned(u); x.valid(); x = necklace.next_same_owner(x)) {
      if (necklace.color(x) != color) continue;
      const BeadId p = necklace.prev(x);
      const BeadId q = necklace.next(x);
      if ((p.valid() && necklace.owner(p) == v) || (q.valid() && necklace.owner(q) == v)) {
        chosen = x;
        break;
      }
    }
    if (!chosen.valid()) throw std::logic_error("good edge lost its bead");
    necklace.set_owner(chosen, v);
    ++stats.transfers;
  }
  for (std::size_t i = 0; i < weights.size();) {
    if (weights[i] == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < weights.size() && weights[j] != 0) ++j;
    rerun(necklace, std::vector<Agent>(path.begin() + static_cast<long>(i),
                                       path.begin() + static_cast<long>(j) + 1),
          stats);
    i = j;
  }
  finish(stats);
  return stats;
}

UpdateStats relocate_fence(Necklace& necklace, std::size_t from, std::size_t to,
                           FencePolicy& policy) {
  check_position(necklace, from);
  check_position(necklace, to);
  UpdateStats stats;
  if (from == to) return stats;
  const std::size_t before = necklace.cut_count();
  necklace.relocate(from, to);
  const std::size_t after = necklace.cut_count();
  const std::size_t added = after > before ? after - before : 0;
  stats.cuts_added = added;
  if (policy.extra_cuts_used + added > policy.extra_cut_budget) {
    if (necklace.color_count() <= 2) {
      offline_split(necklace);
    } else {
      baseline_split(necklace);
    }
    policy.extra_cuts_used = 0;
    policy.dirty = false;
    stats.rebuilt = true;
    return stats;
  }
  policy.extra_cuts_used += added;
  policy.dirty = true;
  return stats;
}

UpdateStats swap(Necklace& necklace, std::size_t j, const FencePolicy& policy) {
  check_clean(policy);
  return swap(necklace, j);
}

UpdateStats relocate_path(Necklace& necklace, std::size_t from, std::size_t to,
                          const FencePolicy& policy) {
  check_clean(policy);
  return relocate_path(necklace, from, to);
}

UpdateStats relocate_colorpath(Necklace& necklace, std::size_t from, std::size_t to,
                               const FencePolicy& policy) {
  check_clean(policy);
  return relocate_colorpath(necklace, from, to);
}

}  // namespace necklace
