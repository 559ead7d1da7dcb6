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

#ifndef NECKLACE_CUTS_HPP_
#define NECKLACE_CUTS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "necklace/necklace.hpp"

namespace necklace {

/// Boundaries between consecutive beads with different owners. Boundary `j`
/// separates positions j and j+1.
struct CutSet {
  std::vector<std::size_t> boundaries;  // ascending
  std::map<AgentPair, std::vector<std::size_t>> by_pair;

  std::size_t size() const { return boundaries.size(); }
};

/// One left-to-right pass. Throws Errc::kUnassignedBead.
CutSet derive_cuts(const Necklace& necklace);

/// Signed per-agent, per-color deviation from the exact quota m_c / k.
/// In approximate mode the quota is the rational m_c / k and `fair()` is
/// only meaningful as "within one bead".
class FairnessReport {
 public:
  FairnessReport(std::size_t agents, std::size_t colors)
      : agents_(agents), colors_(colors), deviation_(agents * colors, 0) {}

  long deviation(Agent a, Color c) const { return deviation_.at(a * colors_ + c); }
  long& deviation(Agent a, Color c) { return deviation_.at(a * colors_ + c); }
  std::size_t agent_count() const { return agents_; }
  std::size_t color_count() const { return colors_; }
  std::size_t unassigned = 0;

  bool fair() const;

 private:
  std::size_t agents_;
  std::size_t colors_;
  std::vector<long> deviation_;
};

FairnessReport verify_fair(const Necklace& necklace);

/// Agents in the order they can be peeled off: each one owns a single run of
/// the owner sequence once all previously peeled agents are removed and
/// equal neighbours merged. Ties go to the lowest agent id. Returns nullopt
/// when peeling gets stuck. Agents owning no beads are peeled first.
std::optional<std::vector<Agent>> peel_order(const Necklace& necklace);
bool is_peelable(const Necklace& necklace);

/// Same test over a bare owner sequence; used by tests and the CLI.
std::optional<std::vector<Agent>> peel_order(const std::vector<Agent>& owners,
                                             std::size_t agents);

}  // namespace necklace

#endif  // NECKLACE_CUTS_HPP_
