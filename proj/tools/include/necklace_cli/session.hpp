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

#ifndef NECKLACE_CLI_SESSION_HPP_
#define NECKLACE_CLI_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "necklace/approx.hpp"
#include "necklace/dense.hpp"
#include "necklace/dynamic2.hpp"
#include "necklace/necklace.hpp"
#include "necklace_cli/script.hpp"

namespace necklace::cli {

enum class Algo { kOffline, kSwap, kPath, kColorPath, kFence, kBatch, kDense, kApprox };

Algo parse_algo(std::string_view name);  // throws Errc::kParse
std::string_view to_string(Algo algo);

struct RunOptions {
  Algo algo = Algo::kOffline;
  std::optional<std::size_t> agents;  // overrides the file header
  double epsilon = 0.25;
  std::uint64_t seed = 1;
  bool verify = false;
  bool json = false;
  std::optional<std::size_t> budget;  // fence: extra cut budget
  bool prune = true;
  double sample_constant = 1.0;
  bool timing = false;
};

using Record = nlohmann::ordered_json;

// One necklace driven by one algorithm family. Records are plain JSON
// objects; the text format is rendered from them.
class Session {
 public:
  Session(const NecklaceFile& file, const RunOptions& options);
  ~Session();

  const Necklace& necklace() const { return *necklace_; }
  Record header() const;
  /// Throws library errors unchanged.
  Record execute(const Command& cmd, std::size_t step);
  /// Invariant violations for the current state; empty when all hold.
  std::vector<std::string> violations() const;
  bool fair() const;
  /// Owner of every bead, 1-based, space separated.
  std::string allocation() const;

 private:
  void split_from_scratch();
  void refresh_approx(std::size_t step);
  void raw_insert(Color color, std::vector<std::size_t> positions);
  void raw_delete(std::vector<std::size_t> positions);
  void relocate(std::size_t from, std::size_t to, Record& rec);
  void require(bool supported, const Command& cmd) const;

  RunOptions options_;
  ColorAlphabet alphabet_;
  std::unique_ptr<Necklace> necklace_;
  FencePolicy fence_;
  DenseIndex dense_;
  std::unique_ptr<OrderIndex> index_;
};

std::string render_text(const Record& record);

/// Runs a whole script, streaming records to `out` and diagnostics to `err`.
/// Returns the process exit code: 0 ok, 1 other library error, 2 parse
/// error, 3 invariant violation, 4 algorithm mismatch.
int run_script(const std::string& necklace_text, const std::string& script_text,
               const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace necklace::cli

#endif  // NECKLACE_CLI_SESSION_HPP_
