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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "necklace/cuts.hpp"
#include "necklace/dynamic2.hpp"
#include "necklace/error.hpp"
#include "necklace/neighborhood.hpp"
#include "necklace/offline.hpp"
#include "necklace/oracle.hpp"
#include "reference.hpp"

namespace necklace {
namespace {

using testing::assign;
using testing::small_example;

void expect_valid(const Necklace& n) {
  n.check_consistency();
  EXPECT_TRUE(verify_fair(n).fair());
  EXPECT_TRUE(is_peelable(n));
  EXPECT_LE(n.cut_count(), 2 * (n.agent_count() - 1));
}

Necklace random_split(Rng& rng, std::size_t m, std::size_t k) {
  Necklace n(testing::random_two_color(rng, m, k), k);
  offline_split(n);
  return n;
}

TEST(SwapTest, SameOwnerLeavesCutsAlone) {
  Necklace n = small_example();
  const auto before = derive_cuts(n).boundaries;
  const UpdateStats stats = swap(n, 5);
  EXPECT_EQ(stats.reruns, 0u);
  EXPECT_EQ(derive_cuts(n).boundaries, before);
  expect_valid(n);
}

TEST(SwapTest, AcrossACutRerunsBothOwners) {
  Necklace n = small_example();
  const UpdateStats stats = swap(n, 8);
  EXPECT_EQ(stats.rerun_agents, (std::vector<Agent>{1, 2}));
  EXPECT_EQ(n.color_sequence(), parse_colors("RRBRRBBRBBRB"));
  expect_valid(n);
  EXPECT_LE(n.cut_count(), 4u);
}

TEST(SwapTest, RejectsBadIndex) {
  Necklace n = small_example();
  EXPECT_THROW(swap(n, 0), Error);
  EXPECT_THROW(swap(n, 12), Error);
}

TEST(SwapTest, RandomWalkKeepsInvariants) {
  Rng rng(21);
  Necklace n = random_split(rng, 48, 4);
  for (int step = 0; step < 100; ++step) {
    swap(n, 1 + uniform_below(rng, 47));
    expect_valid(n);
    EXPECT_LE(n.cut_count(), 6u);
  }
}

TEST(PathTest, MoveInsideOneAgent) {
  Necklace n = small_example();
  const auto before = derive_cuts(n).boundaries;
  const UpdateStats stats = relocate_path(n, 3, 6);
  EXPECT_EQ(stats.reruns, 0u);
  EXPECT_EQ(stats.path_length, 1u);
  EXPECT_EQ(derive_cuts(n).boundaries, before);
  expect_valid(n);
}

TEST(PathTest, MoveIntoNeighbourRegion) {
  Necklace n = small_example();
  const UpdateStats stats = relocate_path(n, 1, 12);
  EXPECT_EQ(stats.path_length, 2u);
  EXPECT_EQ(stats.rerun_agents, (std::vector<Agent>{1, 2}));
  expect_valid(n);
  EXPECT_LE(n.cut_count(), 4u);
}

TEST(PathTest, RandomWalkKeepsInvariants) {
  Rng rng(5);
  Necklace n = random_split(rng, 64, 8);
  for (int step = 0; step < 300; ++step) {
    relocate_path(n, 1 + uniform_below(rng, 64), 1 + uniform_below(rng, 64));
    expect_valid(n);
  }
}

TEST(PathTest, LinearGraphDistancesAreShortMostOfTheTime) {
  const std::size_t k = 8;
  const NeighborhoodGraph g = build_neighborhood_graph(testing::linear_graph_necklace(k));
  Rng rng(99);
  std::size_t short_enough = 0;
  const std::size_t draws = 1000;
  for (std::size_t i = 0; i < draws; ++i) {
    const Agent u = static_cast<Agent>(uniform_below(rng, k));
    Agent v = static_cast<Agent>(uniform_below(rng, k - 1));
    if (v >= u) ++v;
    short_enough += g.distances(u)[v] <= (k + 1) / 2;
  }
  EXPECT_GE(static_cast<double>(short_enough) / draws, 0.73);
}

TEST(ColoredDigraphTest, TwoAgentCase) {
  Necklace n(parse_colors("RB"), 2, Mode::kApprox);
  assign(n, {1, 2});
  const ColoredDigraph g = build_colored_digraph(n, 0);
  EXPECT_EQ(g.weight(0, 1), 0);
  EXPECT_EQ(g.weight(1, 0), 1);
}

TEST(ColoredDigraphTest, SingleAgentHasNoArcs) {
  Necklace n(parse_colors("RBRB"), 1);
  assign(n, {1, 1, 1, 1});
  EXPECT_EQ(build_colored_digraph(n, 0).arc_count(), 0u);
}

TEST(ColoredDigraphTest, MatchesBoundaryScan) {
  const Necklace n = small_example();
  for (Color c = 0; c < 2; ++c) {
    const ColoredDigraph g = build_colored_digraph(n, c);
    for (Agent u = 0; u < 3; ++u) {
      for (Agent v = 0; v < 3; ++v) {
        if (u == v) continue;
        const std::size_t d = testing::zero_one_distance(n, c, u, v);
        const int w = g.weight(u, v);
        if (w >= 0) {
          EXPECT_LE(d, static_cast<std::size_t>(w));
        }
      }
    }
    EXPECT_LE(g.arc_count(), 2 * n.cut_count());
  }
  const ColoredDigraph red = build_colored_digraph(n, 0);
  EXPECT_EQ(red.weight(0, 1), 1);  // beads 3 and 6 (A1 side) are blue
  EXPECT_EQ(red.weight(1, 0), 0);  // bead 2 (R, A2) next to bead 3 (A1)
  EXPECT_EQ(red.weight(1, 2), 1);  // bead 8 is blue
  EXPECT_EQ(red.weight(2, 1), 0);  // bead 9 is red
  EXPECT_EQ(red.weight(0, 2), -1);
}

TEST(ColorPathTest, GoodEdgeMovesOneBead) {
  Necklace m(parse_colors("RRBBRRBB"), 2);
  assign(m, {1, 1, 1, 1, 2, 2, 2, 2});
  // Bead 1 (R, A1) lands at 6, inside A2. A2 hands a red across the cut.
  const UpdateStats stats = relocate_colorpath(m, 1, 6);
  EXPECT_EQ(stats.reruns, 0u);
  EXPECT_EQ(stats.transfers, 1u);
  EXPECT_EQ(stats.path_weight, 0u);
  expect_valid(m);
  EXPECT_EQ(m.cut_count(), 1u);
}

TEST(ColorPathTest, MoveInsideOneAgent) {
  Necklace n = small_example();
  const UpdateStats stats = relocate_colorpath(n, 9, 12);
  EXPECT_EQ(stats.reruns, 0u);
  EXPECT_EQ(stats.transfers, 0u);
  EXPECT_EQ(n.cut_count(), 3u);
}

TEST(ColorPathTest, ZeroWeightPathMeansNoRerun) {
  Rng rng(77);
  for (int walk = 0; walk < 10; ++walk) {
    Necklace n = random_split(rng, 48, 4);
    for (int step = 0; step < 100; ++step) {
      const std::size_t from = 1 + uniform_below(rng, 48);
      const std::size_t to = 1 + uniform_below(rng, 48);
      Necklace probe = n;
      const BeadId moved = probe.at(from);
      const Agent loser = probe.owner(moved);
      const Agent gainer = probe.owner(probe.at(to));
      probe.relocate(from, to);
      probe.set_owner(moved, gainer);
      const std::size_t d = testing::zero_one_distance(probe, probe.color(moved), gainer, loser);
      const UpdateStats stats = relocate_colorpath(n, from, to);
      if (d == 0) {
        EXPECT_EQ(stats.reruns, 0u);
      } else if (d != testing::kUnreachable) {
        EXPECT_EQ(stats.path_weight, d);
      }
      expect_valid(n);
      EXPECT_LE(n.cut_count(), 6u);
    }
  }
}

TEST(FenceTest, DegenerateFenceAddsOneCut) {
  Necklace n(parse_colors("RRBBRRBB"), 2);
  assign(n, {1, 1, 1, 1, 2, 2, 2, 2});
  FencePolicy policy = FencePolicy::for_necklace(n);
  // Bead 1 moves to the end of A2's region: one neighbour is A2, the other
  // side is the necklace end.
  const UpdateStats stats = relocate_fence(n, 1, 8, policy);
  EXPECT_EQ(stats.cuts_added, 1u);
  EXPECT_EQ(n.cut_count(), 2u);
  EXPECT_TRUE(verify_fair(n).fair());
  EXPECT_TRUE(policy.dirty);
}

TEST(FenceTest, CutsStayWithinTheRelocationBound) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Necklace n = random_split(rng, 48, 4);
    FencePolicy policy = FencePolicy::for_necklace(n);
    policy.extra_cut_budget = 1000;
    for (std::size_t r = 1; r <= 5; ++r) {
      relocate_fence(n, 1 + uniform_below(rng, 48), 1 + uniform_below(rng, 48), policy);
      EXPECT_LE(n.cut_count(), 2 * (4 + r - 1));
      EXPECT_TRUE(verify_fair(n).fair());
    }
  }
}

TEST(FenceTest, RebuildWhenBudgetRunsOut) {
  Rng rng(12);
  Necklace n = random_split(rng, 48, 4);
  FencePolicy policy = FencePolicy::for_necklace(n);
  EXPECT_EQ(policy.extra_cut_budget, 8u);
  bool rebuilt = false;
  for (int step = 0; step < 200 && !rebuilt; ++step) {
    const std::size_t used = policy.extra_cuts_used;
    const UpdateStats stats =
        relocate_fence(n, 1 + uniform_below(rng, 48), 1 + uniform_below(rng, 48), policy);
    EXPECT_EQ(stats.rebuilt, used + stats.cuts_added > 8);
    rebuilt = stats.rebuilt;
  }
  ASSERT_TRUE(rebuilt);
  EXPECT_LE(n.cut_count(), 6u);
  EXPECT_FALSE(policy.dirty);
  expect_valid(n);
}

TEST(FenceTest, DirtyStateBlocksExactUpdates) {
  Necklace n = small_example();
  FencePolicy policy = FencePolicy::for_necklace(n);
  relocate_fence(n, 1, 12, policy);
  try {
    swap(n, 3, policy);
    ADD_FAILURE() << "expected DirtyState";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDirtyState);
  }
  EXPECT_THROW(relocate_path(n, 1, 2, policy), Error);
  EXPECT_THROW(relocate_colorpath(n, 1, 2, policy), Error);
}

}  // namespace
}  // namespace necklace
