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

#include "necklace/dense.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "necklace/error.hpp"

namespace necklace {
namespace {

void require_dense(const Necklace& necklace) {
  const std::size_t k = necklace.agent_count();
  const std::size_t n = necklace.color_count();
  if (necklace.size() != n * k) {
    throw Error(Errc::kNotDense, "m=" + std::to_string(necklace.size()) + " differs from nk=" +
                                     std::to_string(n * k));
  }
  for (Color c = 0; c < n; ++c) {
    if (necklace.count(c) != k) {
      throw Error(Errc::kNotDense, "color " + std::to_string(c) + " appears " +
                                       std::to_string(necklace.count(c)) + " times, expected " +
                                       std::to_string(k));
    }
  }
}

void check_position(const Necklace& necklace, std::size_t pos) {
  if (pos == 0 || pos > necklace.size()) {
    throw Error(Errc::kOutOfRange, "position " + std::to_string(pos) + " outside [1, " +
                                       std::to_string(necklace.size()) + "]");
  }
}

}  // namespace

// Mutation helpers shared by swap and jump. Every step touches two agents,
// and the table cells of those two agents always cover exactly the beads the
// two of them hold between them.
class DenseEngine {
 public:
  DenseEngine(Necklace& necklace, DenseIndex& index)
      : necklace_(necklace), index_(index), colors_(necklace.color_count()) {}

  bool is_first(BeadId b) const { return index_.is_first(necklace_, b); }

  // A piece starts at a bead that is not first of its color (or the head).
  bool starts_piece(BeadId b) const { return !necklace_.prev(b).valid() || !is_first(b); }

  // First-of-color beads directly after `b` that belong to b's piece.
  std::vector<BeadId> tails_after(BeadId b) const {
    std::vector<BeadId> out;
    for (BeadId t = necklace_.next(b); t.valid() && !starts_piece(t); t = necklace_.next(t)) {
      out.push_back(t);
    }
    return out;
  }

  void give(const std::vector<BeadId>& beads, Agent to) {
    for (BeadId b : beads) necklace_.set_owner(b, to);
  }

  // Hands the piece starting at `start` to `to`.
  void give_piece(BeadId start, Agent to) {
    std::vector<BeadId> piece = tails_after(start);
    piece.push_back(start);
    give(piece, to);
  }

  // Restores one-bead-per-color between x and y by moving whole pieces; the
  // agent holding two beads of the smallest unbalanced color gives away the
  // piece led by the one that is not first of its color.
  std::size_t rebalance(Agent x, Agent y) {
    if (x == y) return 0;
    std::size_t exchanges = 0;
    for (std::size_t guard = 0;; ++guard) {
      if (guard > 4 * colors_ + 4) throw std::logic_error("dense rebalance does not converge");
      Color c = 0;
      while (c < colors_ && necklace_.owned(x, c) == 1 && necklace_.owned(y, c) == 1) ++c;
      if (c == colors_) break;
      const Agent holder = necklace_.owned(x, c) == 2 ? x : y;
      const Agent other = holder == x ? y : x;
      if (necklace_.owned(holder, c) != 2 || necklace_.owned(other, c) != 0) {
        throw std::logic_error("dense rebalance saw an impossible count");
      }
      const BeadId u = index_.cell(x, c);
      const BeadId v = index_.cell(y, c);
      BeadId lead;
      if (is_first(u)) {
        lead = v;
      } else if (is_first(v)) {
        lead = u;
      } else {
        lead = std::min(u, v);
      }
      give_piece(lead, other);
      ++exchanges;
    }
    refresh(x, y);
    return exchanges;
  }

  // Re-files the table cells of x and y by actual owner.
  void refresh(Agent x, Agent y) {
    if (x == y) return;
    for (Color c = 0; c < colors_; ++c) {
      const BeadId u = index_.cell(x, c);
      const BeadId v = index_.cell(y, c);
      index_.cell(necklace_.owner(u), c) = u;
      index_.cell(necklace_.owner(v), c) = v;
    }
  }

  void reorder(Color c) {
    auto& order = index_.order_.at(c);
    order.clear();
    for (BeadId b = necklace_.head(); b.valid(); b = necklace_.next(b)) {
      if (necklace_.color(b) == c) order.push_back(b);
    }
  }

  // The bead at `from` is first of its color before and after the move.
  std::size_t move_first(std::size_t from, std::size_t to) {
    const BeadId b = necklace_.relocate(from, to);
    const Agent x = necklace_.owner(b);
    const BeadId anchor = necklace_.prev(b).valid() ? necklace_.prev(b) : necklace_.next(b);
    if (!anchor.valid()) return 0;
    const Agent y = necklace_.owner(anchor);
    if (x == y) return 0;
    necklace_.set_owner(b, y);
    return rebalance(x, y);
  }

  // The bead at `from` is not first of its color before nor after the move.
  // It is first detached into a singleton piece at the end, then inserted.
  std::size_t move_later(std::size_t from, std::size_t to) {
    std::size_t exchanges = 0;
    const BeadId b = necklace_.at(from);
    const Color c = necklace_.color(b);
    const Agent x = necklace_.owner(b);

    const std::vector<BeadId> tails = tails_after(b);
    const Agent z = necklace_.owner(necklace_.prev(b));
    necklace_.move_before(b, BeadId::none());
    if (!tails.empty() && z != x) {
      // The cut travels with b, so its former tails simply join the piece
      // on their left; only the repairs that follow count as exchanges.
      give(tails, z);
      exchanges += rebalance(x, z);
    }

    necklace_.relocate(necklace_.size(), to);
    const std::vector<BeadId> stolen = tails_after(b);
    if (!stolen.empty()) {
      const Agent w = necklace_.owner(stolen.front());
      if (w != x) {
        give(stolen, x);
        exchanges += 1 + rebalance(x, w);
      }
    }
    reorder(c);
    return exchanges;
  }

 private:
  Necklace& necklace_;
  DenseIndex& index_;
  std::size_t colors_;
};

DenseIndex::DenseIndex(std::size_t agents, std::size_t colors)
    : agents_(agents), colors_(colors), table_(agents * colors), order_(colors) {}

bool DenseIndex::is_first(const Necklace& necklace, BeadId b) const {
  return order_.at(necklace.color(b)).front() == b;
}

std::string_view to_string(DenseCase kind) {
  switch (kind) {
    case DenseCase::kNoop: return "noop";
    case DenseCase::kSwapSeparate: return "swap-separate";
    case DenseCase::kSwapExchange: return "swap-exchange";
    case DenseCase::kSwapShift: return "swap-shift";
    case DenseCase::kJumpFirst: return "jump-first";
    case DenseCase::kJumpLater: return "jump-later";
    case DenseCase::kJumpBecomesLater: return "jump-becomes-later";
    case DenseCase::kJumpBecomesFirst: return "jump-becomes-first";
  }
  return "unknown";
}

std::size_t DenseStats::bound(std::size_t colors) const {
  switch (kind) {
    case DenseCase::kSwapExchange:
    case DenseCase::kJumpFirst: return colors;
    case DenseCase::kSwapShift: return colors - 1;
    case DenseCase::kJumpLater: return 2 * colors - 1;
    case DenseCase::kJumpBecomesLater:
    case DenseCase::kJumpBecomesFirst: return 3 * colors - 1;
    default: return 0;
  }
}

DenseIndex dense_offline_split(Necklace& necklace) {
  require_dense(necklace);
  const std::size_t k = necklace.agent_count();
  const std::size_t n = necklace.color_count();
  DenseIndex index(k, n);
  std::vector<char> holds(k * n, 0);
  std::vector<char> seen(n, 0);

  const std::vector<BeadId> beads = necklace.sequence();
  std::vector<Agent> owners(beads.size(), kNoAgent);
  std::size_t i = 0;
  while (i < beads.size()) {
    // Collect one piece: its leading bead plus following first-of-color beads.
    std::size_t end = i + 1;
    seen[necklace.color(beads[i])] = 1;
    while (end < beads.size() && !seen[necklace.color(beads[end])]) {
      seen[necklace.color(beads[end])] = 1;
      ++end;
    }
    Agent chosen = kNoAgent;
    for (Agent a = 0; a < k && chosen == kNoAgent; ++a) {
      bool free = true;
      for (std::size_t t = i; t < end && free; ++t) free = !holds[a * n + necklace.color(beads[t])];
      if (free) chosen = a;
    }
    // Cannot happen: the piece's other colors are first occurrences, so only
    // its leading color can be held already, and fewer than k agents hold it.
    if (chosen == kNoAgent) throw std::logic_error("dense greedy found no agent");
    for (std::size_t t = i; t < end; ++t) {
      owners[t] = chosen;
      holds[chosen * n + necklace.color(beads[t])] = 1;
      index.table_[chosen * n + necklace.color(beads[t])] = beads[t];
      index.order_[necklace.color(beads[t])].push_back(beads[t]);
    }
    i = end;
  }
  necklace.assign_ordered(beads, owners);
  return index;
}

DenseStats dense_swap(Necklace& necklace, std::size_t j, DenseIndex& index) {
  require_dense(necklace);
  if (j == 0 || j >= necklace.size()) {
    throw Error(Errc::kOutOfRange, "swap index " + std::to_string(j) + " outside [1, " +
                                       std::to_string(necklace.size() - 1) + "]");
  }
  DenseStats stats;
  const BeadId x = necklace.at(j);
  const BeadId y = necklace.next(x);
  if (necklace.color(x) == necklace.color(y)) return stats;
  const Agent a1 = necklace.owner(x);
  const Agent a2 = necklace.owner(y);
  if (a1 == a2) {
    stats = dense_jump(necklace, j, j + 1, index);
    stats.delegated = true;
    return stats;
  }

  DenseEngine engine(necklace, index);
  if (engine.is_first(y)) throw std::logic_error("owner change without a cut");
  const bool x_first = engine.is_first(x);
  const std::vector<BeadId> tails = engine.tails_after(y);
  necklace.move_before(y, x);
  if (x_first) {
    stats.kind = DenseCase::kSwapShift;
    necklace.set_owner(x, a2);
    stats.exchanges = engine.rebalance(a1, a2);
  } else if (tails.empty()) {
    stats.kind = DenseCase::kSwapSeparate;
  } else {
    stats.kind = DenseCase::kSwapExchange;
    engine.give(tails, a1);
    stats.exchanges = 1 + engine.rebalance(a1, a2);
  }
  return stats;
}

DenseStats dense_jump(Necklace& necklace, std::size_t from, std::size_t to, DenseIndex& index) {
  require_dense(necklace);
  check_position(necklace, from);
  check_position(necklace, to);
  DenseStats stats;
  if (from == to) return stats;

  DenseEngine engine(necklace, index);
  const BeadId b = necklace.at(from);
  const Color c = necklace.color(b);
  const auto& order = index.order(c);
  const bool first_before = order.front() == b;

  // Is b ahead of every other bead of its color once it sits at `to`?
  bool first_after = true;
  if (order.size() > 1) {
    const BeadId rival = first_before ? order[1] : order[0];
    std::size_t p = necklace.position_of(rival);
    if (from < p) --p;
    first_after = to <= p;
  }

  if (first_before && first_after) {
    stats.kind = DenseCase::kJumpFirst;
    stats.exchanges = engine.move_first(from, to);
  } else if (!first_before && !first_after) {
    stats.kind = DenseCase::kJumpLater;
    stats.exchanges = engine.move_later(from, to);
  } else if (first_before) {
    // Park b right in front of the second bead of its color, then send that
    // second bead to the destination.
    stats.kind = DenseCase::kJumpBecomesLater;
    const BeadId second = order[1];
    const std::size_t park = necklace.position_of(second) - 1;
    stats.exchanges = engine.move_first(from, park);
    stats.exchanges += engine.move_later(necklace.position_of(second), to);
  } else {
    // Park b right behind the first bead of its color, then send that first
    // bead to the destination.
    stats.kind = DenseCase::kJumpBecomesFirst;
    const BeadId first = order.front();
    const std::size_t park = necklace.position_of(first) + 1;
    stats.exchanges = engine.move_later(from, park);
    stats.exchanges += engine.move_first(necklace.position_of(first), to);
  }
  engine.reorder(c);
  return stats;
}

std::vector<std::size_t> dense_cuts(const Necklace& necklace) {
  std::vector<char> seen(necklace.color_count(), 0);
  std::vector<std::size_t> out;
  std::size_t pos = 1;
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b), ++pos) {
    const Color c = necklace.color(b);
    if (seen[c] && pos > 1) out.push_back(pos - 1);
    seen[c] = 1;
  }
  return out;
}

void check_dense(const Necklace& necklace, const DenseIndex& index) {
  require_dense(necklace);
  const std::size_t k = necklace.agent_count();
  const std::size_t n = necklace.color_count();
  auto fail = [](const std::string& what) { throw std::logic_error("dense: " + what); };
  if (index.agent_count() != k || index.color_count() != n) fail("index has the wrong shape");

  std::unordered_map<std::uint32_t, std::size_t> position;
  std::vector<char> seen(n, 0);
  std::size_t pos = 1;
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b), ++pos) {
    position[b.value()] = pos;
    const Color c = necklace.color(b);
    const BeadId p = necklace.prev(b);
    // Beads without a cut in front must share the owner of their neighbour.
    if (!seen[c] && p.valid() && necklace.owner(p) != necklace.owner(b)) {
      fail("piece at position " + std::to_string(pos) + " has two owners");
    }
    seen[c] = 1;
  }
  for (Agent a = 0; a < k; ++a) {
    for (Color c = 0; c < n; ++c) {
      if (necklace.owned(a, c) != 1) fail("agent does not hold exactly one bead of a color");
      const BeadId b = index.bead(a, c);
      if (!necklace.live(b) || necklace.owner(b) != a || necklace.color(b) != c) {
        fail("table cell out of date");
      }
    }
  }
  for (Color c = 0; c < n; ++c) {
    const auto& order = index.order(c);
    if (order.size() != k) fail("color order has the wrong length");
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!necklace.live(order[i]) || necklace.color(order[i]) != c) fail("color order is stale");
      if (i > 0 && position[order[i - 1].value()] >= position[order[i].value()]) {
        fail("color order is not sorted");
      }
    }
  }
}

}  // namespace necklace
