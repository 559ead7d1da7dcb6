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

#ifndef NECKLACE_TESTS_REFERENCE_HPP_
#define NECKLACE_TESTS_REFERENCE_HPP_

// Small independent re-derivations used to cross-check library results.

#include <cstddef>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

#include "necklace/necklace.hpp"

namespace necklace::testing {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// 0/1 distance from `from` to `to` in the agent digraph of one color, built
// by scanning every adjacent pair of beads: u -> v costs 0 when some pair has
// a bead of `color` on u's side, 1 when u and v are adjacent otherwise.
inline std::size_t zero_one_distance(const Necklace& necklace, Color color, Agent from, Agent to) {
  const std::size_t k = necklace.agent_count();
  std::vector<int> cost(k * k, -1);
  const std::vector<Agent> owners = necklace.owner_sequence();
  const std::vector<Color> colors = necklace.color_sequence();
  auto note = [&](std::size_t i, std::size_t j) {
    const Agent u = owners[i];
    const Agent v = owners[j];
    int& c = cost[u * k + v];
    const int here = colors[i] == color ? 0 : 1;
    c = c < 0 ? here : std::min(c, here);
  };
  for (std::size_t i = 0; i + 1 < owners.size(); ++i) {
    if (owners[i] == owners[i + 1]) continue;
    note(i, i + 1);
    note(i + 1, i);
  }
  std::vector<std::size_t> dist(k, kUnreachable);
  std::deque<Agent> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Agent u = queue.front();
    queue.pop_front();
    for (Agent v = 0; v < k; ++v) {
      const int c = cost[u * k + v];
      if (c < 0 || dist[u] + c >= dist[v]) continue;
      dist[v] = dist[u] + c;
      if (c == 0) {
        queue.push_front(v);
      } else {
        queue.push_back(v);
      }
    }
  }
  return dist[to];
}

// k - 1 edges and connected.
inline bool is_spanning_tree(std::size_t nodes, const std::vector<std::pair<Agent, Agent>>& edges) {
  if (edges.size() + 1 != nodes) return false;
  std::vector<std::size_t> root(nodes);
  for (std::size_t i = 0; i < nodes; ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [u, v] : edges) {
    const std::size_t a = find(u);
    const std::size_t b = find(v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

}  // namespace necklace::testing

#endif  // NECKLACE_TESTS_REFERENCE_HPP_
