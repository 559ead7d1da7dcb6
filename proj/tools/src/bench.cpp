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

#include "necklace_cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>

#include "necklace/approx.hpp"
#include "necklace/batch.hpp"
#include "necklace/dense.hpp"
#include "necklace/dynamic2.hpp"
#include "necklace/error.hpp"
#include "necklace/offline.hpp"

namespace necklace::cli {

std::vector<Color> random_colors(std::size_t beads, std::size_t colors, std::size_t agents, Rng& rng) {
  if (colors == 0 || agents == 0 || beads == 0 || beads % (colors * agents) != 0) {
    throw Error(Errc::kParse, "bead count must be a positive multiple of colors * agents");
  }
  std::vector<Color> out(beads);
  for (std::size_t i = 0; i < beads; ++i) out[i] = static_cast<Color>(i % colors);
  for (std::size_t i = beads - 1; i > 0; --i) {
    std::swap(out[i], out[uniform_below(rng, i + 1)]);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> random_moves(std::vector<Color>& colors,
                                                              std::size_t count, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  const std::size_t m = colors.size();
  const Color color = colors[uniform_below(rng, m)];
  while (moves.size() < count) {
    const std::size_t from = uniform_below(rng, m);
    if (colors[from] != color) continue;
    const std::size_t to = uniform_below(rng, m);
    const Color moved = colors[from];
    colors.erase(colors.begin() + static_cast<std::ptrdiff_t>(from));
    colors.insert(colors.begin() + static_cast<std::ptrdiff_t>(to), moved);
    moves.emplace_back(from + 1, to + 1);
  }
  return moves;
}

BenchRow run_bench(const BenchSpec& spec) {
  using Clock = std::chrono::steady_clock;
  Rng rng(spec.seed);
  const bool dense = spec.algo == Algo::kDense;
  const std::size_t beads = dense ? spec.colors * spec.agents : spec.beads;
  std::vector<Color> colors = random_colors(beads, spec.colors, spec.agents, rng);
  const Mode mode = spec.algo == Algo::kApprox ? Mode::kApprox : Mode::kExact;
  Necklace necklace(colors, spec.agents, mode, spec.colors);

  DenseIndex index;
  FencePolicy policy = FencePolicy::for_necklace(necklace);
  std::unique_ptr<OrderIndex> order;
  if (dense) {
    index = dense_offline_split(necklace);
  } else if (spec.algo == Algo::kApprox) {
    order = std::make_unique<OrderIndex>(OrderIndex::from_necklace(necklace, spec.seed));
    approx_static(necklace, ApproxConfig{});
  } else if (spec.colors <= 2) {
    offline_split(necklace);
  } else {
    baseline_split(necklace);
  }

  std::vector<double> samples;
  samples.reserve(spec.updates);
  std::uint64_t touched = 0;
  const std::size_t per_update = spec.algo == Algo::kSwap || dense ? 1 : std::max<std::size_t>(1, spec.batch);
  for (std::size_t u = 0; u < spec.updates; ++u) {
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    std::size_t j = 0;
    if (spec.algo == Algo::kSwap || (dense && u % 2 == 0)) {
      j = 1 + uniform_below(rng, beads - 1);
      std::swap(colors[j - 1], colors[j]);
    } else {
      moves = random_moves(colors, per_update, rng);
    }
    if (order) order->reset_touched();
    const auto started = Clock::now();
    switch (spec.algo) {
      case Algo::kSwap: swap(necklace, j); break;
      case Algo::kDense:
        if (j != 0) {
          dense_swap(necklace, j, index);
        } else {
          dense_jump(necklace, moves[0].first, moves[0].second, index);
        }
        break;
      case Algo::kBatch: batch_relocate(necklace, moves); break;
      case Algo::kPath:
        for (const auto& [from, to] : moves) relocate_path(necklace, from, to);
        break;
      case Algo::kColorPath:
        for (const auto& [from, to] : moves) relocate_colorpath(necklace, from, to);
        break;
      case Algo::kFence:
        for (const auto& [from, to] : moves) relocate_fence(necklace, from, to, policy);
        break;
      case Algo::kOffline:
        for (const auto& [from, to] : moves) necklace.relocate(from, to);
        offline_split(necklace);
        break;
      case Algo::kApprox:
        for (const auto& [from, to] : moves) order->relocate(from, to);
        break;
    }
    samples.push_back(std::chrono::duration<double, std::micro>(Clock::now() - started).count());
    if (order) {
      touched += order->touched();
      for (const auto& [from, to] : moves) necklace.relocate(from, to);
    }
  }

  BenchRow row;
  row.spec = spec;
  if (samples.empty()) return row;
  row.mean_us = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  row.per_bead_us = row.mean_us / static_cast<double>(per_update);
  row.mean_touched = static_cast<double>(touched) / static_cast<double>(samples.size() * per_update);
  std::sort(samples.begin(), samples.end());
  const auto pct = [&](double q) {
    const auto i = static_cast<std::size_t>(q * static_cast<double>(samples.size() - 1));
    return samples[i];
  };
  row.p50_us = pct(0.50);
  row.p90_us = pct(0.90);
  row.p99_us = pct(0.99);
  return row;
}

std::string bench_table_header() {
  return "algo       m        k     n  batch  updates   mean_us    p50_us    p90_us    p99_us  bead_us  touched";
}

std::string bench_table_row(const BenchRow& row) {
  char line[256];
  const BenchSpec& s = row.spec;
  const std::size_t m = s.algo == Algo::kDense ? s.colors * s.agents : s.beads;
  std::snprintf(line, sizeof(line), "%-9s %-8zu %-5zu %-2zu %-6zu %-8zu %9.2f %9.2f %9.2f %9.2f %8.2f %8.1f",
                std::string(to_string(s.algo)).c_str(), m, s.agents, s.colors, s.batch, s.updates, row.mean_us,
                row.p50_us, row.p90_us, row.p99_us, row.per_bead_us, row.mean_touched);
  return line;
}

}  // namespace necklace::cli
