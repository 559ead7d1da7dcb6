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

#ifndef NECKLACE_DYNAMIC2_HPP_
#define NECKLACE_DYNAMIC2_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "necklace/necklace.hpp"

namespace necklace {

/// What a single update did.
struct UpdateStats {
  std::vector<Agent> rerun_agents;  // agents re-split from scratch (k')
  std::size_t path_length = 0;      // agents on the chosen path
  std::size_t path_weight = 0;      // bad edges on the chosen path
  std::size_t reruns = 0;           // offline_split_range calls
  std::size_t transfers = 0;        // single-bead hand-overs across a cut
  std::size_t cuts_added = 0;       // fence only
  bool rebuilt = false;             // fence only
};

/// Budget of extra cuts tolerated by fence relocations before a rebuild.
struct FencePolicy {
  std::size_t extra_cut_budget = 0;
  std::size_t extra_cuts_used = 0;
  bool dirty = false;

  /// 2k for two colors, 2kn otherwise.
  static FencePolicy for_necklace(const Necklace& necklace);
};

/// Directed agent graph for one color. u -> v exists iff u and v own
/// adjacent beads; its weight is 0 when at least one such pair has a bead of
/// the color on u's side, 1 otherwise.
struct ColoredDigraph {
  struct Arc {
    Agent to;
    std::uint8_t weight;
  };
  std::vector<std::vector<Arc>> out;  // sorted by target id

  std::size_t arc_count() const;
  /// Weight of u -> v, or -1 when absent.
  int weight(Agent u, Agent v) const;
};

/// Exchanges the beads at positions j and j+1. Positions keep their owners,
/// so when the two beads differ in both color and owner the two owners are
/// re-split. Throws Errc::kOutOfRange.
UpdateStats swap(Necklace& necklace, std::size_t j);

/// Moves the bead at `from` so that it ends up at position `to`. The bead is
/// first handed to the owner of the bead it lands next to; the agents on a
/// shortest path between the two owners are then re-split. Among shortest
/// paths the lexicographically smallest agent sequence is used.
UpdateStats relocate_path(Necklace& necklace, std::size_t from, std::size_t to);

ColoredDigraph build_colored_digraph(const Necklace& necklace, Color color);

/// Like relocate_path, but walks a 0/1-weighted shortest path from the
/// receiving owner back to the losing one. Along good edges one bead of the
/// moved color is handed across the cut; each maximal run of bad edges is
/// re-split.
UpdateStats relocate_colorpath(Necklace& necklace, std::size_t from, std::size_t to);

/// Moves the bead and lets its owner keep it, fencing it with at most two
/// new cuts. When the policy budget would be exceeded the whole necklace is
/// re-split instead (offline_split for two colors, baseline_split otherwise).
UpdateStats relocate_fence(Necklace& necklace, std::size_t from, std::size_t to,
                           FencePolicy& policy);

/// Policy-aware variants: throw Errc::kDirtyState after a fence relocation
/// until the next rebuild.
UpdateStats swap(Necklace& necklace, std::size_t j, const FencePolicy& policy);
UpdateStats relocate_path(Necklace& necklace, std::size_t from, std::size_t to,
                          const FencePolicy& policy);
UpdateStats relocate_colorpath(Necklace& necklace, std::size_t from, std::size_t to,
                               const FencePolicy& policy);

}  // namespace necklace

#endif  // NECKLACE_DYNAMIC2_HPP_
