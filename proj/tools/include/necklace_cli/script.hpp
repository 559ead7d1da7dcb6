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

#ifndef NECKLACE_CLI_SCRIPT_HPP_
#define NECKLACE_CLI_SCRIPT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace necklace::cli {

// Necklace file: an optional "k=<int>" line followed by one line holding one
// ASCII symbol per bead.
struct NecklaceFile {
  std::string symbols;
  std::optional<std::size_t> agents;
};

NecklaceFile parse_necklace_file(std::string_view text);

enum class CommandKind { kSwap, kReloc, kBatch, kInsert, kDelete, kCuts, kVerify };

std::string_view to_string(CommandKind kind);

// Positions are 1-based. BATCH stores its pairs flattened (j1 j2 j1 j2 ...).
struct Command {
  CommandKind kind = CommandKind::kCuts;
  std::vector<std::size_t> args;
  char symbol = 0;   // INSERT only
  std::size_t line = 0;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
};

// One command per line; blank lines and '#' comments are skipped. BATCH
// accepts both "BATCH 3 9 4 10" and "BATCH (3,9) (4,10)".
std::vector<Command> parse_script(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace necklace::cli

#endif  // NECKLACE_CLI_SCRIPT_HPP_
