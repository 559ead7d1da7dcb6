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

#include <cstddef>
#include <iostream>
#include <vector>
#include <string>

#include "CLI11.hpp"
#include "necklace/error.hpp"
#include "necklace_cli/bench.hpp"
#include "necklace_cli/script.hpp"
#include "necklace_cli/session.hpp"

namespace {

const std::vector<std::string> kAlgos = {"offline", "swap",  "path",  "colorpath",
                                         "fence",   "batch", "dense", "approx"};

}  // namespace

int main(int argc, char** argv) {
  using namespace necklace::cli;
  CLI::App app{"Dynamic fair necklace splitting"};
  app.require_subcommand(1);

  RunOptions options;
  std::string necklace_path;
  std::string script_path;
  std::size_t budget = 0;
  std::size_t agents = 0;
  bool no_prune = false;
  CLI::App* run = app.add_subcommand("run", "Replay an update script against a necklace");
  run->add_option("--necklace", necklace_path, "Necklace file")->required();
  run->add_option("--script", script_path, "Update script (empty when omitted)");
  std::string run_algo = "offline";
  run->add_option("--algo", run_algo, "Algorithm family")->check(CLI::IsMember(kAlgos));
  run->add_option("--k", agents, "Agent count (overrides the k= header)");
  run->add_option("--epsilon", options.epsilon, "Approximation tolerance")->check(CLI::Range(0.0, 1.0));
  run->add_option("--seed", options.seed, "Random seed");
  run->add_flag("--verify", options.verify, "Check every invariant after each command");
  run->add_flag("--json", options.json, "Emit JSON lines");
  run->add_option("--budget", budget, "Fence: extra cuts tolerated before a rebuild");
  run->add_flag("--no-prune", no_prune, "Batch: skip relay pruning");
  run->add_option("--sample-constant", options.sample_constant, "Approx: sample size constant");
  run->add_flag("--timing", options.timing, "Add wall time per command (not reproducible)");

  BenchSpec spec;
  CLI::App* bench = app.add_subcommand("bench", "Time a seeded random workload");
  std::string bench_algo = "swap";
  bench->add_option("--algo", bench_algo, "Algorithm family")->check(CLI::IsMember(kAlgos));
  bench->add_option("--m", spec.beads, "Bead count (ignored for dense, which uses n*k)");
  bench->add_option("--k", spec.agents, "Agent count");
  bench->add_option("--n", spec.colors, "Color count");
  bench->add_option("--updates", spec.updates, "Timed updates");
  bench->add_option("--batch", spec.batch, "Moves per update");
  bench->add_option("--seed", spec.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    options.algo = parse_algo(run_algo);
    if (run->count("--k") > 0) options.agents = agents;
    if (run->count("--budget") > 0) options.budget = budget;
    options.prune = !no_prune;
    std::string necklace_text;
    std::string script_text;
    try {
      necklace_text = read_file(necklace_path);
      if (!script_path.empty()) script_text = read_file(script_path);
    } catch (const necklace::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    return run_script(necklace_text, script_text, options, std::cout, std::cerr);
  }

  spec.algo = parse_algo(bench_algo);
  try {
    std::cout << bench_table_header() << '\n' << bench_table_row(run_bench(spec)) << '\n';
  } catch (const necklace::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == necklace::Errc::kParse ? 2 : 1;
  }
  return 0;
}
