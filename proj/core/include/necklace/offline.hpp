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

#ifndef NECKLACE_OFFLINE_HPP_
#define NECKLACE_OFFLINE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "necklace/necklace.hpp"

namespace necklace {

/// Splits a one- or two-color sequence into `parts` equal shares, each fair
/// for color 0 (and hence for color 1). Share t is the t-th window chosen;
/// the window is always the leftmost balanced one among the beads not yet
/// handed out, and the last share takes whatever remains. Returns the share
/// index of every element. `colors.size()` and the color-0 count must both be
/// divisible by `parts`.
std::vector<std::size_t> window_split(std::span<const Color> colors, std::size_t parts);

/// Exact two-color split over all agents; agent t receives the t-th window.
/// Overwrites any previous owners. Returns the resulting cut count, which is
/// at most 2(k - 1).
/// Throws Errc::kNotTwoColors or Errc::kDivisibility.
std::size_t offline_split(Necklace& necklace);

/// Re-splits the beads currently owned by `agents` among those agents only.
/// The i-th window goes to agents[i]. Beads of other agents are untouched.
/// Validation happens before any mutation: Errc::kNotTwoColors,
/// Errc::kOutOfRange for bad agent ids, Errc::kQuotaMismatch when the
/// combined per-color counts are not |agents| times the quotas.
void offline_split_range(Necklace& necklace, std::span<const Agent> agents);

/// R^{m/2} B^{m/2}, which needs exactly 2(k - 1) cuts. Throws
/// Errc::kDivisibility unless 2k divides m.
Necklace adversarial_necklace(std::size_t agents, std::size_t beads);

/// Any number of colors: the t-th bead of each color (0-based) goes to agent
/// t / quota. Exact but cut-hungry; used as the rebuild fallback for n > 2.
/// Returns the cut count.
std::size_t baseline_split(Necklace& necklace);

}  // namespace necklace

#endif  // NECKLACE_OFFLINE_HPP_
