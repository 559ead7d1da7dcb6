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

#include "necklace/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "necklace/error.hpp"

namespace necklace {
namespace {

// Backtracking assignment of intervals to agents. New agents are opened in
// index order only, which removes relabelings of the same allocation.
class IntervalPacker {
 public:
  IntervalPacker(std::vector<std::vector<std::size_t>> intervals, std::size_t agents,
                 std::vector<std::size_t> quota)
      : intervals_(std::move(intervals)),
        agents_(agents),
        quota_(std::move(quota)),
        load_(agents * quota_.size(), 0) {}

  bool solve() { return place(0, 0); }

 private:
  bool place(std::size_t i, std::size_t opened) {
    if (i == intervals_.size()) return true;
    const std::size_t colors = quota_.size();
    const std::size_t limit = std::min(agents_, opened + 1);
    for (std::size_t a = 0; a < limit; ++a) {
      bool fits = true;
      for (std::size_t c = 0; c < colors && fits; ++c) {
        fits = load_[a * colors + c] + intervals_[i][c] <= quota_[c];
      }
      if (!fits) continue;
      for (std::size_t c = 0; c < colors; ++c) load_[a * colors + c] += intervals_[i][c];
      if (place(i + 1, std::max(opened, a + 1))) return true;
      for (std::size_t c = 0; c < colors; ++c) load_[a * colors + c] -= intervals_[i][c];
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> intervals_;
  std::size_t agents_;
  std::vector<std::size_t> quota_;
  std::vector<std::size_t> load_;
};

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t r = pick.size();
  for (std::size_t i = r; i-- > 0;) {
    if (pick[i] < n - r + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t brute_force_min_cuts(std::span<const Color> colors, std::size_t agents) {
  if (colors.size() > kMaxOracleBeads) {
    throw Error(Errc::kTooLarge, std::to_string(colors.size()) + " beads exceed the oracle limit of " +
                                     std::to_string(kMaxOracleBeads));
  }
  if (colors.empty() || agents == 0) throw Error(Errc::kEmptyInput, "nothing to split");
  const std::size_t color_count = *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::size_t> quota(color_count, 0);
  for (Color c : colors) ++quota[c];
  for (std::size_t& q : quota) {
    if (q % agents != 0) return kNoFairSplit;
    q /= agents;
  }

  const std::size_t m = colors.size();
  const std::size_t boundaries = m - 1;
  for (std::size_t cuts = 0; cuts <= boundaries; ++cuts) {
    std::vector<std::size_t> pick(cuts);
    for (std::size_t i = 0; i < cuts; ++i) pick[i] = i;
    do {
      // Boundary b sits between beads b and b+1 (0-based beads).
      std::vector<std::vector<std::size_t>> intervals;
      std::vector<std::size_t> current(color_count, 0);
      bool too_big = false;
      std::size_t next = 0;
      for (std::size_t p = 0; p < m && !too_big; ++p) {
        ++current[colors[p]];
        too_big = current[colors[p]] > quota[colors[p]];
        if (next < cuts && pick[next] == p) {
          intervals.push_back(current);
          current.assign(color_count, 0);
          ++next;
        }
      }
      if (too_big) continue;
      intervals.push_back(current);
      if (IntervalPacker(std::move(intervals), agents, quota).solve()) return cuts;
    } while (cuts > 0 && next_combination(pick, boundaries));
  }
  return kNoFairSplit;
}

std::size_t brute_force_min_cuts(const Necklace& necklace) {
  const std::vector<Color> colors = necklace.color_sequence();
  return brute_force_min_cuts(colors, necklace.agent_count());
}

long restricted_max_flow(const FlowNetwork& network, const std::vector<bool>& allowed) {
  const std::size_t n = network.node_count();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  const std::size_t total = n + 2;
  long unbounded = 1;
  for (long d : network.demand) unbounded += d < 0 ? -d : d;
  std::vector<long> cap(total * total, 0);
  auto at = [&](std::size_t u, std::size_t v) -> long& { return cap[u * total + v]; };
  for (std::size_t u = 0; u < n; ++u) {
    if (!allowed[u]) continue;
    at(source, u) = network.source_capacity(static_cast<Agent>(u));
    at(u, sink) = network.sink_capacity(static_cast<Agent>(u));
  }
  for (const auto& [u, v] : network.edges) {
    if (!allowed[u] || !allowed[v]) continue;
    at(u, v) = unbounded;
    at(v, u) = unbounded;
  }

  long value = 0;
  for (;;) {
    std::vector<std::size_t> from(total, total);
    from[source] = source;
    std::deque<std::size_t> queue{source};
    while (!queue.empty() && from[sink] == total) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < total; ++v) {
        if (from[v] == total && at(u, v) > 0) {
          from[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (from[sink] == total) return value;
    long push = unbounded;
    for (std::size_t v = sink; v != source; v = from[v]) push = std::min(push, at(from[v], v));
    for (std::size_t v = sink; v != source; v = from[v]) {
      at(from[v], v) -= push;
      at(v, from[v]) += push;
    }
    value += push;
  }
}

std::size_t exact_min_node_max_flow(const FlowNetwork& network) {
  const std::size_t n = network.node_count();
  if (n > kMaxOracleNodes) {
    throw Error(Errc::kTooLarge, std::to_string(n) + " nodes exceed the oracle limit of " +
                                     std::to_string(kMaxOracleNodes));
  }
  const long best_value = restricted_max_flow(network, std::vector<bool>(n, true));
  std::vector<std::size_t> relays;
  std::size_t forced = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (network.demand[u] != 0) {
      ++forced;
    } else {
      relays.push_back(u);
    }
  }
  for (std::size_t extra = 0; extra <= relays.size(); ++extra) {
    std::vector<std::size_t> pick(extra);
    for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
    do {
      std::vector<bool> allowed(n, false);
      for (std::size_t u = 0; u < n; ++u) allowed[u] = network.demand[u] != 0;
      for (std::size_t i : pick) allowed[relays[i]] = true;
      if (restricted_max_flow(network, allowed) == best_value) return forced + extra;
    } while (extra > 0 && next_combination(pick, relays.size()));
  }
  return n;  // unreachable: the full node set always attains the maximum
}

double StatReport::mean() const {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double StatReport::stddev() const {
  if (values.size() < 2) return 0.0;
  const double mu = mean();
  double sum = 0.0;
  for (double v : values) sum += (v - mu) * (v - mu);
  return std::sqrt(sum / static_cast<double>(values.size() - 1));
}

StatReport tally_below(std::vector<double> values, double threshold, double bound) {
  StatReport report;
  report.trials = values.size();
  report.threshold = threshold;
  report.bound = bound;
  report.successes = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double v) { return v < threshold; }));
  report.values = std::move(values);
  return report;
}

}  // namespace necklace
