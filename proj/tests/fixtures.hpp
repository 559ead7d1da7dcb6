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

#ifndef NECKLACE_TESTS_FIXTURES_HPP_
#define NECKLACE_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "necklace/batch.hpp"
#include "necklace/necklace.hpp"
#include "necklace/random.hpp"

namespace necklace::testing {

// Writes 1-based owners (0 = unassigned) in necklace order.
inline void assign(Necklace& necklace, const std::vector<Agent>& owners_one_based) {
  const std::vector<BeadId> beads = necklace.sequence();
  std::vector<Agent> owners;
  for (Agent a : owners_one_based) owners.push_back(a == 0 ? kNoAgent : a - 1);
  necklace.assign_ordered(beads, owners);
}

// "RRBRRBBBRBRB" split among three agents: A2 {1,2}, A1 {3..6}, A2 {7,8},
// A3 {9..12}.
inline Necklace small_example() {
  Necklace necklace(parse_colors("RRBRRBBBRBRB"), 3);
  assign(necklace, {2, 2, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3});
  return necklace;
}

// k blocks "RB", block i owned by agent i: the neighbourhood graph is a path.
inline Necklace linear_graph_necklace(std::size_t agents) {
  std::vector<Color> colors;
  std::vector<Agent> owners;
  for (std::size_t a = 0; a < agents; ++a) {
    colors.insert(colors.end(), {0, 1});
    owners.insert(owners.end(), {static_cast<Agent>(a + 1), static_cast<Agent>(a + 1)});
  }
  Necklace necklace(colors, agents);
  assign(necklace, owners);
  return necklace;
}

// Two colors, every color count a multiple of k, uniformly shuffled.
inline std::vector<Color> random_two_color(Rng& rng, std::size_t beads, std::size_t agents) {
  std::vector<Color> colors(beads);
  // Red count: a random multiple of k in [k, beads - k].
  const std::size_t slots = beads / agents;
  const std::size_t red = agents * (1 + uniform_below(rng, slots - 1));
  for (std::size_t i = 0; i < beads; ++i) colors[i] = i < red ? 0 : 1;
  for (std::size_t i = beads - 1; i > 0; --i) std::swap(colors[i], colors[uniform_below(rng, i + 1)]);
  return colors;
}

// Eight agents on three levels:
//   level 3: A1 A2 A3 (children of A4)
//   level 2: A4 (child of A5), A6 A7 (children of A8)
//   level 1: A5 A8
// The graph additionally joins A1-A2 and A6-A7.
inline NeighborhoodTree nested_tree() {
  NeighborhoodTree tree;
  tree.level = {3, 3, 3, 2, 1, 2, 2, 1};
  tree.parent = {3, 3, 3, 4, kNoAgent, 7, 7, kNoAgent};
  tree.children = {{}, {}, {}, {0, 1, 2}, {3}, {}, {}, {5, 6}};
  tree.level_one = {4, 7};
  return tree;
}

inline NeighborhoodGraph nested_graph() {
  NeighborhoodGraph graph(8);
  for (const auto& [u, v] : nested_tree().edges()) graph.add_edge(u, v);
  graph.add_edge(0, 1);
  graph.add_edge(5, 6);
  return graph;
}

// Sources A1, A5 and sinks A3, A6, all of demand one.
inline std::vector<long> nested_demand() { return {-1, 0, 1, 0, -1, 1, 0, 0}; }

}  // namespace necklace::testing

#endif  // NECKLACE_TESTS_FIXTURES_HPP_
