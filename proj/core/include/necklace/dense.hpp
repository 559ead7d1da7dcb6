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

#ifndef NECKLACE_DENSE_HPP_
#define NECKLACE_DENSE_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "necklace/necklace.hpp"

namespace necklace {

// Dense necklaces have m = nk: every color appears exactly k times and every
// agent receives exactly one bead of each color.
//
// Cuts follow a fixed pattern: there is a cut in front of every bead except
// the first bead of each color, so the necklace falls into n(k - 1) + 1
// pieces. A piece is one bead that is not the first of its color (or the
// head) followed by any number of first-of-color beads. A valid state hands
// whole pieces to agents.

/// Agent x color table of bead handles plus each color's beads in necklace
/// order.
class DenseIndex {
 public:
  DenseIndex() = default;
  DenseIndex(std::size_t agents, std::size_t colors);

  BeadId bead(Agent a, Color c) const { return table_.at(a * colors_ + c); }
  const std::vector<BeadId>& order(Color c) const { return order_.at(c); }
  bool is_first(const Necklace& necklace, BeadId b) const;
  std::size_t agent_count() const { return agents_; }
  std::size_t color_count() const { return colors_; }

 private:
  friend class DenseEngine;
  friend DenseIndex dense_offline_split(Necklace& necklace);
  BeadId& cell(Agent a, Color c) { return table_.at(a * colors_ + c); }

  std::size_t agents_ = 0;
  std::size_t colors_ = 0;
  std::vector<BeadId> table_;
  std::vector<std::vector<BeadId>> order_;
};

enum class DenseCase {
  kNoop,
  kSwapSeparate,   // cut on both sides: beads swap, owners stay
  kSwapExchange,   // cut on the left only: right piece changes hands
  kSwapShift,      // no cut on the left: the cut moves left by one bead
  kJumpFirst,      // first of its color before and after
  kJumpLater,      // not first before nor after
  kJumpBecomesLater,
  kJumpBecomesFirst,
};

std::string_view to_string(DenseCase kind);

struct DenseStats {
  DenseCase kind = DenseCase::kNoop;
  std::size_t exchanges = 0;  // pieces that changed owner
  bool delegated = false;     // swap of two beads with one owner, run as a jump
  /// Largest exchange count the case allows: n for kSwapExchange and
  /// kJumpFirst, n - 1 for kSwapShift, 2n - 1 for kJumpLater, 3n - 1 for the
  /// two composite jump cases, 0 otherwise.
  std::size_t bound(std::size_t colors) const;
};

/// Greedy initial allocation: pieces are handed out left to right, each to
/// the lowest agent still lacking all of its colors. Overwrites owners.
/// Throws Errc::kNotDense.
DenseIndex dense_offline_split(Necklace& necklace);

/// Exchanges the beads at j and j+1 and restores a valid state.
DenseStats dense_swap(Necklace& necklace, std::size_t j, DenseIndex& index);

/// Moves the bead at `from` so that it ends up at `to` and restores a valid
/// state. Same-color beads may trade identities in the process; the color
/// sequence always equals that of a plain relocation.
DenseStats dense_jump(Necklace& necklace, std::size_t from, std::size_t to, DenseIndex& index);

/// Boundaries of the cut pattern (j separates positions j and j+1).
std::vector<std::size_t> dense_cuts(const Necklace& necklace);

/// Throws std::logic_error unless every piece has a single owner, each agent
/// holds one bead per color, the table matches the owners and every per-color
/// order is sorted. Throws Errc::kNotDense for wrong multiplicities.
void check_dense(const Necklace& necklace, const DenseIndex& index);

}  // namespace necklace

#endif  // NECKLACE_DENSE_HPP_
