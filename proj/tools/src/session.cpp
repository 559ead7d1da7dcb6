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

#include "necklace_cli/session.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include "necklace/batch.hpp"
#include "necklace/cuts.hpp"
#include "necklace/error.hpp"
#include "necklace/offline.hpp"

namespace necklace::cli {
namespace {

bool two_color_family(Algo algo) { return algo != Algo::kFence && algo != Algo::kDense; }

bool keeps_peelable(Algo algo) {
  return algo == Algo::kOffline || algo == Algo::kSwap || algo == Algo::kPath ||
         algo == Algo::kColorPath || algo == Algo::kBatch;
}

void put_update(Record& rec, const UpdateStats& stats) {
  rec["reruns"] = stats.reruns;
  rec["rerun_agents"] = stats.rerun_agents.size();
  rec["path_length"] = stats.path_length;
  rec["transfers"] = stats.transfers;
}

void put_batch(Record& rec, const BatchStats& stats) {
  rec["must_move"] = stats.must_move;
  rec["imbalanced"] = stats.imbalanced;
  rec["active"] = stats.active;
  rec["reruns"] = stats.reruns;
}

}  // namespace

Algo parse_algo(std::string_view name) {
  for (Algo a : {Algo::kOffline, Algo::kSwap, Algo::kPath, Algo::kColorPath, Algo::kFence,
                 Algo::kBatch, Algo::kDense, Algo::kApprox}) {
    if (to_string(a) == name) return a;
  }
  throw Error(Errc::kParse, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algo algo) {
  switch (algo) {
    case Algo::kOffline: return "offline";
    case Algo::kSwap: return "swap";
    case Algo::kPath: return "path";
    case Algo::kColorPath: return "colorpath";
    case Algo::kFence: return "fence";
    case Algo::kBatch: return "batch";
    case Algo::kDense: return "dense";
    case Algo::kApprox: return "approx";
  }
  return "?";
}

Session::Session(const NecklaceFile& file, const RunOptions& options) : options_(options) {
  const std::vector<Color> colors = alphabet_.encode(file.symbols);
  const std::optional<std::size_t> agents = options.agents ? options.agents : file.agents;
  if (!agents) throw Error(Errc::kParse, "agent count missing: pass --k or a k= header");
  const std::size_t n = alphabet_.symbols.size();
  if (two_color_family(options.algo) && n > 2) {
    throw Error(Errc::kAlgorithmMismatch,
                std::string(to_string(options.algo)) + " needs at most two colors, got " + std::to_string(n));
  }
  const Mode mode = options.algo == Algo::kApprox ? Mode::kApprox : Mode::kExact;
  necklace_ = std::make_unique<Necklace>(colors, *agents, mode, n);
  fence_ = FencePolicy::for_necklace(*necklace_);
  if (options.budget) fence_.extra_cut_budget = *options.budget;
  if (options.algo == Algo::kDense) {
    try {
      dense_ = dense_offline_split(*necklace_);
    } catch (const Error& e) {
      if (e.code() != Errc::kNotDense) throw;
      throw Error(Errc::kAlgorithmMismatch, std::string("dense needs m = nk: ") + e.what());
    }
  } else if (options.algo == Algo::kApprox) {
    index_ = std::make_unique<OrderIndex>(OrderIndex::from_necklace(*necklace_, options.seed));
    refresh_approx(0);
  } else {
    split_from_scratch();
  }
}

Session::~Session() = default;

void Session::split_from_scratch() {
  if (necklace_->color_count() <= 2) {
    offline_split(*necklace_);
  } else {
    baseline_split(*necklace_);
  }
}

void Session::refresh_approx(std::size_t step) {
  ApproxConfig config;
  config.epsilon = options_.epsilon;
  config.sample_constant = options_.sample_constant;
  config.seed = options_.seed + step;
  approx_cuts(*index_, *necklace_, config);
}

Record Session::header() const {
  Record rec;
  rec["record"] = "header";
  rec["algo"] = to_string(options_.algo);
  rec["m"] = necklace_->size();
  rec["k"] = necklace_->agent_count();
  rec["colors"] = std::string(alphabet_.symbols.begin(), alphabet_.symbols.end());
  rec["seed"] = options_.seed;
  rec["cuts"] = necklace_->cut_count();
  rec["fair"] = fair();
  rec["allocation"] = allocation();
  return rec;
}

std::string Session::allocation() const {
  std::string out;
  for (Agent a : necklace_->owner_sequence()) {
    if (!out.empty()) out += ' ';
    out += a == kNoAgent ? std::string("-") : std::to_string(a + 1);
  }
  return out;
}

bool Session::fair() const {
  const Necklace& nk = *necklace_;
  if (!nk.all_assigned()) return false;
  if (options_.algo != Algo::kApprox) return verify_fair(nk).fair();
  const double k = static_cast<double>(nk.agent_count());
  for (Agent a = 0; a < nk.agent_count(); ++a) {
    for (Color c = 0; c < nk.color_count(); ++c) {
      const double target = static_cast<double>(nk.count(c)) / k;
      if (std::abs(static_cast<double>(nk.owned(a, c)) - target) > options_.epsilon * target) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::string> Session::violations() const {
  std::vector<std::string> out;
  const Necklace& nk = *necklace_;
  try {
    nk.check_consistency();
  } catch (const std::logic_error& e) {
    out.push_back(std::string("structure: ") + e.what());
    return out;
  }
  if (!fair()) out.emplace_back("fairness");
  if (derive_cuts(nk).size() != nk.cut_count()) out.emplace_back("cut map disagrees with a rescan");
  const std::size_t k = nk.agent_count();
  std::optional<std::size_t> bound;
  if (two_color_family(options_.algo)) bound = 2 * (k - 1);
  if (options_.algo == Algo::kFence && nk.color_count() <= 2) {
    bound = 2 * (k - 1) + fence_.extra_cuts_used;
  }
  if (options_.algo == Algo::kDense) bound = nk.color_count() * (k - 1);
  if (bound && nk.cut_count() > *bound) {
    out.push_back("cuts " + std::to_string(nk.cut_count()) + " exceed " + std::to_string(*bound));
  }
  const bool peel = keeps_peelable(options_.algo) ||
                    (options_.algo == Algo::kFence && !fence_.dirty && nk.color_count() <= 2);
  if (peel && !is_peelable(nk)) out.emplace_back("allocation is not peelable");
  if (options_.algo == Algo::kDense) {
    try {
      check_dense(nk, dense_);
    } catch (const std::exception& e) {
      out.push_back(std::string("dense: ") + e.what());
    }
  }
  return out;
}

void Session::require(bool supported, const Command& cmd) const {
  if (!supported) {
    throw Error(Errc::kAlgorithmMismatch, std::string(to_string(cmd.kind)) + " is not available with --algo " +
                                              std::string(to_string(options_.algo)));
  }
}

void Session::raw_insert(Color color, std::vector<std::size_t> positions) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw Error(Errc::kOutOfRange, "insert positions must be distinct");
  }
  const std::size_t final_size = necklace_->size() + positions.size();
  for (std::size_t p : positions) {
    if (p == 0 || p > final_size) throw Error(Errc::kOutOfRange, "insert position " + std::to_string(p));
  }
  for (std::size_t p : positions) {
    const bool append = p == necklace_->size() + 1;
    const BeadId before = append ? BeadId::none() : necklace_->at(p);
    const Agent owner = necklace_->owner(append ? necklace_->tail() : before);
    necklace_->insert_before(before, color, owner);
    if (index_) index_->insert(p, color);
  }
}

void Session::raw_delete(std::vector<std::size_t> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw Error(Errc::kOutOfRange, "delete positions must be distinct");
  }
  for (std::size_t p : positions) {
    if (p == 0 || p > necklace_->size()) throw Error(Errc::kOutOfRange, "delete position " + std::to_string(p));
  }
  if (positions.size() >= necklace_->size()) throw Error(Errc::kEmptyInput, "cannot delete every bead");
  for (std::size_t p : positions) {
    necklace_->erase(necklace_->at(p));
    if (index_) index_->erase(p);
  }
}

void Session::relocate(std::size_t from, std::size_t to, Record& rec) {
  switch (options_.algo) {
    case Algo::kOffline:
      necklace_->relocate(from, to);
      split_from_scratch();
      break;
    case Algo::kPath: put_update(rec, relocate_path(*necklace_, from, to)); break;
    case Algo::kColorPath: put_update(rec, relocate_colorpath(*necklace_, from, to)); break;
    case Algo::kFence: {
      const UpdateStats stats = relocate_fence(*necklace_, from, to, fence_);
      rec["cuts_added"] = stats.cuts_added;
      rec["rebuilt"] = stats.rebuilt;
      rec["extra_cuts"] = fence_.extra_cuts_used;
      break;
    }
    case Algo::kApprox:
      necklace_->relocate(from, to);
      index_->relocate(from, to);
      break;
    default: throw std::logic_error("relocate dispatched to the wrong family");
  }
}

Record Session::execute(const Command& cmd, std::size_t step) {
  Record rec;
  rec["record"] = "step";
  rec["step"] = step;
  rec["line"] = cmd.line;
  rec["cmd"] = to_string(cmd.kind);
  const Algo algo = options_.algo;
  const auto started = std::chrono::steady_clock::now();

  switch (cmd.kind) {
    case CommandKind::kSwap: {
      const std::size_t j = cmd.args[0];
      if (algo == Algo::kSwap) {
        put_update(rec, swap(*necklace_, j));
      } else if (algo == Algo::kBatch) {
        const std::pair<std::size_t, std::size_t> move{j, j + 1};
        put_batch(rec, batch_relocate(*necklace_, std::span(&move, 1),
                                      BatchOptions{.prune = options_.prune}));
      } else if (algo == Algo::kDense) {
        const DenseStats stats = dense_swap(*necklace_, j, dense_);
        rec["case"] = to_string(stats.kind);
        rec["exchanges"] = stats.exchanges;
      } else {
        if (j == 0 || j >= necklace_->size()) {
          throw Error(Errc::kOutOfRange, "swap position " + std::to_string(j));
        }
        relocate(j, j + 1, rec);
      }
      break;
    }
    case CommandKind::kReloc: {
      require(algo != Algo::kSwap, cmd);
      const std::size_t from = cmd.args[0];
      const std::size_t to = cmd.args[1];
      if (algo == Algo::kBatch) {
        const std::pair<std::size_t, std::size_t> move{from, to};
        put_batch(rec, batch_relocate(*necklace_, std::span(&move, 1),
                                      BatchOptions{.prune = options_.prune}));
      } else if (algo == Algo::kDense) {
        const DenseStats stats = dense_jump(*necklace_, from, to, dense_);
        rec["case"] = to_string(stats.kind);
        rec["exchanges"] = stats.exchanges;
      } else {
        relocate(from, to, rec);
      }
      break;
    }
    case CommandKind::kBatch: {
      require(algo != Algo::kSwap && algo != Algo::kDense, cmd);
      const auto moves = cmd.pairs();
      if (algo == Algo::kBatch) {
        put_batch(rec, batch_relocate(*necklace_, moves, BatchOptions{.prune = options_.prune}));
      } else if (algo == Algo::kOffline) {
        for (const auto& [from, to] : moves) necklace_->relocate(from, to);
        split_from_scratch();
      } else {
        for (const auto& [from, to] : moves) relocate(from, to, rec);
      }
      break;
    }
    case CommandKind::kInsert: {
      require(algo != Algo::kFence && algo != Algo::kDense, cmd);
      const Color color = alphabet_.find(cmd.symbol);
      if (algo == Algo::kOffline || algo == Algo::kApprox) {
        raw_insert(color, cmd.args);
        if (algo == Algo::kOffline) split_from_scratch();
      } else {
        put_batch(rec, insert_batch(*necklace_, color, cmd.args, BatchOptions{.prune = options_.prune}));
      }
      break;
    }
    case CommandKind::kDelete: {
      require(algo != Algo::kFence && algo != Algo::kDense, cmd);
      if (algo == Algo::kOffline || algo == Algo::kApprox) {
        raw_delete(cmd.args);
        if (algo == Algo::kOffline) split_from_scratch();
      } else {
        put_batch(rec, delete_batch(*necklace_, cmd.args, BatchOptions{.prune = options_.prune}));
      }
      break;
    }
    case CommandKind::kCuts: {
      std::vector<std::size_t> at;
      for (std::size_t b : derive_cuts(*necklace_).boundaries) at.push_back(b);
      rec["boundaries"] = at;
      break;
    }
    case CommandKind::kVerify: break;
  }

  const bool updates = cmd.kind != CommandKind::kCuts && cmd.kind != CommandKind::kVerify;
  if (algo == Algo::kApprox && updates) refresh_approx(step);
  const auto elapsed = std::chrono::steady_clock::now() - started;

  rec["m"] = necklace_->size();
  rec["cuts"] = necklace_->cut_count();
  rec["fair"] = fair();
  if (cmd.kind == CommandKind::kVerify || options_.verify) {
    const std::vector<std::string> problems = violations();
    rec["verify"] = problems.empty() ? "pass" : "fail";
    if (!problems.empty()) rec["problems"] = problems;
  }
  if (options_.timing) {
    rec["time_us"] = std::chrono::duration<double, std::micro>(elapsed).count();
  }
  return rec;
}

std::string render_text(const Record& record) {
  std::string out;
  for (const auto& [key, value] : record.items()) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    if (value.is_string()) {
      const std::string s = value.get<std::string>();
      out += s.find(' ') == std::string::npos ? s : '"' + s + '"';
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      out += joined.find(' ') == std::string::npos ? joined : '"' + joined + '"';
    } else {
      out += value.dump();
    }
  }
  return out;
}

int run_script(const std::string& necklace_text, const std::string& script_text,
               const RunOptions& options, std::ostream& out, std::ostream& err) {
  const auto emit = [&](const Record& rec) {
    out << (options.json ? rec.dump() : render_text(rec)) << '\n';
  };
  std::unique_ptr<Session> session;
  std::vector<Command> script;
  try {
    const NecklaceFile file = parse_necklace_file(necklace_text);
    script = parse_script(script_text);
    session = std::make_unique<Session>(file, options);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == Errc::kParse) return 2;
    if (e.code() == Errc::kAlgorithmMismatch) return 4;
    return 1;
  }
  emit(session->header());

  int status = 0;
  std::size_t step = 0;
  for (const Command& cmd : script) {
    ++step;
    try {
      const Record rec = session->execute(cmd, step);
      emit(rec);
      if (rec.contains("verify") && rec["verify"] == "fail") {
        err << "error: step " << step << " (line " << cmd.line << ") " << to_string(cmd.kind)
            << ": invariant violation\n";
        status = 3;
        break;
      }
    } catch (const Error& e) {
      err << "error: step " << step << " (line " << cmd.line << ") " << to_string(cmd.kind) << ": "
          << e.what() << '\n';
      status = e.code() == Errc::kParse ? 2 : e.code() == Errc::kAlgorithmMismatch ? 4 : 1;
      break;
    } catch (const std::logic_error& e) {
      err << "error: step " << step << " (line " << cmd.line << ") " << to_string(cmd.kind)
          << ": internal invariant broken: " << e.what() << '\n';
      status = 3;
      break;
    }
  }
  if (step > 0) {
    Record end;
    end["record"] = "end";
    end["steps"] = step;
    end["status"] = status;
    end["cuts"] = session->necklace().cut_count();
    end["fair"] = session->fair();
    end["allocation"] = session->allocation();
    emit(end);
  }
  return status;
}

}  // namespace necklace::cli
