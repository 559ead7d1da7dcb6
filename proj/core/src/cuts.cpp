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

#include "necklace/cuts.hpp"

#include <set>

#include "necklace/error.hpp"

namespace necklace {

CutSet derive_cuts(const Necklace& necklace) {
  CutSet out;
  std::size_t pos = 1;
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b), ++pos) {
    const Agent here = necklace.owner(b);
    if (here == kNoAgent) {
      throw Error(Errc::kUnassignedBead, "bead " + std::to_string(pos) + " has no owner");
    }
    const BeadId nb = necklace.next(b);
    if (!nb.valid()) break;
    const Agent there = necklace.owner(nb);
    if (there != kNoAgent && there != here) {
      out.boundaries.push_back(pos);
      out.by_pair[AgentPair::of(here, there)].push_back(pos);
    }
  }
  return out;
}

bool FairnessReport::fair() const {
  if (unassigned != 0) return false;
  for (long d : deviation_) {
    if (d != 0) return false;
  }
  return true;
}

FairnessReport verify_fair(const Necklace& necklace) {
  const std::size_t k = necklace.agent_count();
  const std::size_t n = necklace.color_count();
  FairnessReport report(k, n);
  std::vector<long> held(k * n, 0);
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b)) {
    const Agent a = necklace.owner(b);
    if (a == kNoAgent) {
      ++report.unassigned;
      continue;
    }
    ++held[a * n + necklace.color(b)];
  }
  for (Agent a = 0; a < k; ++a) {
    for (Color c = 0; c < n; ++c) {
      report.deviation(a, c) = held[a * n + c] - static_cast<long>(necklace.quota(c));
    }
  }
  return report;
}

std::optional<std::vector<Agent>> peel_order(const std::vector<Agent>& owners,
                                             std::size_t agents) {
  // Run-length encode, then peel runs out of a doubly linked list of runs.
  std::vector<Agent> run_owner;
  for (Agent a : owners) {
    if (a == kNoAgent) throw Error(Errc::kUnassignedBead, "peeling needs every bead owned");
    if (run_owner.empty() || run_owner.back() != a) run_owner.push_back(a);
  }
  const std::size_t runs = run_owner.size();
  std::vector<std::size_t> prev(runs), next(runs);
  std::vector<std::vector<std::size_t>> runs_of(agents);
  for (std::size_t i = 0; i < runs; ++i) {
    prev[i] = i == 0 ? runs : i - 1;
    next[i] = i + 1;
    runs_of[run_owner[i]].push_back(i);
  }
  std::vector<std::size_t> live_runs(agents, 0);
  std::set<Agent> ready;
  for (Agent a = 0; a < agents; ++a) {
    live_runs[a] = runs_of[a].size();
    if (live_runs[a] <= 1) ready.insert(a);
  }
  std::vector<char> dead(runs, 0);
  std::vector<char> peeled(agents, 0);
  std::vector<Agent> order;
  order.reserve(agents);
  while (!ready.empty()) {
    const Agent a = *ready.begin();
    ready.erase(ready.begin());
    peeled[a] = 1;
    order.push_back(a);
    for (std::size_t r : runs_of[a]) {
      if (dead[r]) continue;
      dead[r] = 1;
      const std::size_t p = prev[r];
      const std::size_t q = next[r];
      if (p != runs) next[p] = q;
      if (q != runs) prev[q] = p;
      if (p != runs && q != runs && run_owner[p] == run_owner[q]) {
        // The two neighbours become one run.
        dead[q] = 1;
        next[p] = next[q];
        if (next[q] != runs) prev[next[q]] = p;
        const Agent merged = run_owner[p];
        if (--live_runs[merged] == 1 && !peeled[merged]) ready.insert(merged);
      }
    }
  }
  if (order.size() != agents) return std::nullopt;
  return order;
}

std::optional<std::vector<Agent>> peel_order(const Necklace& necklace) {
  return peel_order(necklace.owner_sequence(), necklace.agent_count());
}

bool is_peelable(const Necklace& necklace) { return peel_order(necklace).has_value(); }

}  // namespace necklace
