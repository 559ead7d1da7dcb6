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

#include "necklace_cli/script.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "necklace/error.hpp"

namespace necklace::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto end = text.find('\n');
    out.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

std::vector<std::string_view> tokens_of(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw Error(Errc::kParse,
                "line " + std::to_string(line) + ": expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

NecklaceFile parse_necklace_file(std::string_view text) {
  NecklaceFile file;
  std::size_t line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.starts_with("k=")) {
      if (file.agents || !file.symbols.empty()) {
        throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": misplaced k= header");
      }
      file.agents = parse_count(line.substr(2), line_no);
      continue;
    }
    if (!file.symbols.empty()) {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": more than one bead line");
    }
    for (char c : line) {
      if (c <= ' ' || c > '~') {
        throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": beads must be printable symbols");
      }
    }
    file.symbols = std::string(line);
  }
  if (file.symbols.empty()) throw Error(Errc::kParse, "necklace file holds no beads");
  return file;
}

std::string_view to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::kSwap: return "SWAP";
    case CommandKind::kReloc: return "RELOC";
    case CommandKind::kBatch: return "BATCH";
    case CommandKind::kInsert: return "INSERT";
    case CommandKind::kDelete: return "DELETE";
    case CommandKind::kCuts: return "CUTS";
    case CommandKind::kVerify: return "VERIFY";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> Command::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < args.size(); i += 2) out.emplace_back(args[i], args[i + 1]);
  return out;
}

std::vector<Command> parse_script(std::string_view text) {
  std::vector<Command> script;
  std::size_t line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    std::string cleaned(trim(line));
    if (cleaned.empty()) continue;
    const auto fail = [&](const std::string& what) {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": " + what);
    };
    std::vector<std::string_view> tokens = tokens_of(cleaned);
    Command cmd;
    cmd.line = line_no;
    const std::string_view verb = tokens.front();
    std::size_t first_arg = 1;
    std::size_t min_args = 0;
    std::size_t max_args = 0;
    if (verb == "SWAP") {
      cmd.kind = CommandKind::kSwap;
      min_args = max_args = 1;
    } else if (verb == "RELOC") {
      cmd.kind = CommandKind::kReloc;
      min_args = max_args = 2;
    } else if (verb == "BATCH") {
      cmd.kind = CommandKind::kBatch;
      for (std::size_t i = verb.size(); i < cleaned.size(); ++i) {
        if (cleaned[i] == '(' || cleaned[i] == ')' || cleaned[i] == ',') cleaned[i] = ' ';
      }
      tokens = tokens_of(cleaned);
      min_args = 2;
      max_args = SIZE_MAX;
    } else if (verb == "INSERT") {
      cmd.kind = CommandKind::kInsert;
      if (tokens.size() < 2 || tokens[1].size() != 1) fail("INSERT needs a one-symbol color");
      cmd.symbol = tokens[1][0];
      first_arg = 2;
      min_args = 1;
      max_args = SIZE_MAX;
    } else if (verb == "DELETE") {
      cmd.kind = CommandKind::kDelete;
      min_args = 1;
      max_args = SIZE_MAX;
    } else if (verb == "CUTS") {
      cmd.kind = CommandKind::kCuts;
    } else if (verb == "VERIFY") {
      cmd.kind = CommandKind::kVerify;
    } else {
      fail("unknown command '" + std::string(verb) + "'");
    }
    for (std::size_t i = first_arg; i < tokens.size(); ++i) {
      cmd.args.push_back(parse_count(tokens[i], line_no));
    }
    if (cmd.args.size() < min_args || cmd.args.size() > max_args) {
      fail(std::string(verb) + " has the wrong number of arguments");
    }
    if (cmd.kind == CommandKind::kBatch && cmd.args.size() % 2 != 0) {
      fail("BATCH needs position pairs");
    }
    script.push_back(std::move(cmd));
  }
  return script;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace necklace::cli
