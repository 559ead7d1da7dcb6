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

#include "necklace/neighborhood.hpp"

#include <deque>
#include <limits>

#include "necklace/error.hpp"

namespace necklace {

std::size_t NeighborhoodGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<std::pair<Agent, Agent>> NeighborhoodGraph::edges() const {
  std::vector<std::pair<Agent, Agent>> out;
  for (Agent u = 0; u < adj_.size(); ++u) {
    for (Agent v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void NeighborhoodGraph::add_edge(Agent u, Agent v) {
  if (u == v) return;
  adj_.at(u).insert(v);
  adj_.at(v).insert(u);
}

void NeighborhoodGraph::clear_agent(Agent a) {
  for (Agent v : adj_.at(a)) adj_[v].erase(a);
  adj_[a].clear();
}

std::vector<std::size_t> NeighborhoodGraph::distances(Agent from) const {
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(adj_.size(), kFar);
  std::deque<Agent> queue{from};
  dist.at(from) = 0;
  while (!queue.empty()) {
    const Agent u = queue.front();
    queue.pop_front();
    for (Agent v : adj_[u]) {
      if (dist[v] != kFar) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

bool NeighborhoodGraph::connected() const {
  if (adj_.empty()) return true;
  for (std::size_t d : distances(0)) {
    if (d == std::numeric_limits<std::size_t>::max()) return false;
  }
  return true;
}

NeighborhoodGraph build_neighborhood_graph(const Necklace& necklace) {
  NeighborhoodGraph graph(necklace.agent_count());
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b)) {
    const Agent here = necklace.owner(b);
    if (here == kNoAgent) throw Error(Errc::kUnassignedBead, "graph needs every bead owned");
    const BeadId nb = necklace.next(b);
    if (nb.valid()) {
      const Agent there = necklace.owner(nb);
      if (there == kNoAgent) throw Error(Errc::kUnassignedBead, "graph needs every bead owned");
      graph.add_edge(here, there);
    }
  }
  return graph;
}

void partial_rebuild(NeighborhoodGraph& graph, const Necklace& necklace,
                     const std::set<Agent>& agents) {
  for (Agent a : agents) graph.clear_agent(a);
  for (Agent a : agents) {
    for (BeadId b = necklace.first_owned(a); b.valid(); b = necklace.next_same_owner(b)) {
      for (BeadId nb : {necklace.prev(b), necklace.next(b)}) {
        if (!nb.valid()) continue;
        const Agent there = necklace.owner(nb);
        if (there == kNoAgent) throw Error(Errc::kUnassignedBead, "graph needs every bead owned");
        graph.add_edge(a, there);
      }
    }
  }
}

std::vector<AgentSpan> agent_spans(const Necklace& necklace) {
  std::vector<AgentSpan> spans(necklace.agent_count());
  std::size_t pos = 1;
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b), ++pos) {
    const Agent a = necklace.owner(b);
    if (a == kNoAgent) continue;
    if (spans[a].first == 0) spans[a].first = pos;
    spans[a].last = pos;
  }
  return spans;
}

}  // namespace necklace
