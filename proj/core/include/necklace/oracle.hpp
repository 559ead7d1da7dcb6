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

#ifndef NECKLACE_ORACLE_HPP_
#define NECKLACE_ORACLE_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "necklace/batch.hpp"
#include "necklace/necklace.hpp"

// Exhaustive reference solvers for small instances. They share data types
// with the main algorithms but none of their code.

namespace necklace {

inline constexpr std::size_t kNoFairSplit = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kMaxOracleBeads = 20;
inline constexpr std::size_t kMaxOracleNodes = 12;

/// Fewest cuts over all exactly fair allocations to `agents` agents, or
/// kNoFairSplit when some color count is not divisible by `agents`.
/// Throws Errc::kTooLarge above kMaxOracleBeads beads.
std::size_t brute_force_min_cuts(std::span<const Color> colors, std::size_t agents);
std::size_t brute_force_min_cuts(const Necklace& necklace);

/// Fewest active nodes (non-zero demand or carrying flow) over all maximum
/// flows. Throws Errc::kTooLarge above kMaxOracleNodes interior nodes.
std::size_t exact_min_node_max_flow(const FlowNetwork& network);

/// Plain Edmonds-Karp value of the network restricted to `allowed` nodes.
long restricted_max_flow(const FlowNetwork& network, const std::vector<bool>& allowed);

/// Outcome of a repeated Bernoulli experiment: trial i succeeds when
/// values[i] < threshold.
struct StatReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double threshold = 0.0;
  double bound = 0.0;  // claimed lower bound on the success rate
  std::vector<double> values;

  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
  double mean() const;
  double stddev() const;
};

StatReport tally_below(std::vector<double> values, double threshold, double bound);

}  // namespace necklace

#endif  // NECKLACE_ORACLE_HPP_
