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

#ifndef NECKLACE_CLI_BENCH_HPP_
#define NECKLACE_CLI_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "necklace/necklace.hpp"
#include "necklace/random.hpp"
#include "necklace_cli/session.hpp"

namespace necklace::cli {

struct BenchSpec {
  Algo algo = Algo::kSwap;
  std::size_t beads = 4096;
  std::size_t agents = 8;
  std::size_t colors = 2;
  std::size_t updates = 1000;
  std::size_t batch = 1;  // moves per update (batch, path, colorpath, offline)
  std::uint64_t seed = 1;
};

struct BenchRow {
  BenchSpec spec;
  double mean_us = 0;
  double p50_us = 0;
  double p90_us = 0;
  double p99_us = 0;
  double per_bead_us = 0;
  double mean_touched = 0;  // approx only
};

/// Uniformly shuffled necklace with beads / colors beads of every color.
/// Throws Errc::kParse unless colors * agents divides beads.
std::vector<Color> random_colors(std::size_t beads, std::size_t colors, std::size_t agents, Rng& rng);

/// Same-color moves applied one after another; positions refer to the
/// sequence left by the previous move.
std::vector<std::pair<std::size_t, std::size_t>> random_moves(std::vector<Color>& colors,
                                                              std::size_t count, Rng& rng);

/// Runs a seeded workload. The workload itself depends only on the spec, so
/// two algorithms given the same seed see the same necklace and moves.
BenchRow run_bench(const BenchSpec& spec);

std::string bench_table_header();
std::string bench_table_row(const BenchRow& row);

}  // namespace necklace::cli

#endif  // NECKLACE_CLI_BENCH_HPP_
