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

#include "necklace/necklace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "necklace/error.hpp"

namespace necklace {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kDivisibility: return "DivisibilityError";
    case Errc::kEmptyInput: return "EmptyInput";
    case Errc::kUnassignedBead: return "UnassignedBead";
    case Errc::kNotTwoColors: return "NotTwoColors";
    case Errc::kQuotaMismatch: return "QuotaMismatch";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kDirtyState: return "DirtyState";
    case Errc::kNotPeelable: return "NotPeelable";
    case Errc::kZeroBatch: return "ZeroBatch";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kColorMismatch: return "ColorMismatch";
    case Errc::kCountNotMultipleOfK: return "CountNotMultipleOfK";
    case Errc::kNotDense: return "NotDense";
    case Errc::kPopulationTooSmall: return "PopulationTooSmall";
    case Errc::kIndexDesync: return "IndexDesync";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kParse: return "ParseError";
    case Errc::kAlgorithmMismatch: return "AlgorithmMismatch";
  }
  return "UnknownError";
}

Necklace::Necklace(std::span<const Color> colors, std::size_t agents, Mode mode,
                   std::size_t color_count)
    : agents_(agents), mode_(mode) {
  if (colors.empty()) throw Error(Errc::kEmptyInput, "necklace has no beads");
  if (agents == 0) throw Error(Errc::kEmptyInput, "agent count must be positive");

  const Color max_color = *std::max_element(colors.begin(), colors.end());
  if (color_count == 0) color_count = static_cast<std::size_t>(max_color) + 1;
  if (max_color >= color_count) {
    throw Error(Errc::kOutOfRange, "color id exceeds declared color count");
  }
  color_total_.assign(color_count, 0);
  for (Color c : colors) ++color_total_[c];
  if (mode == Mode::kExact) {
    for (std::size_t c = 0; c < color_count; ++c) {
      if (color_total_[c] % agents != 0) {
        std::ostringstream msg;
        msg << "k=" << agents << " does not divide count " << color_total_[c] << " of color " << c;
        throw Error(Errc::kDivisibility, msg.str());
      }
    }
  }

  owned_.assign(agents, 0);
  owned_color_.assign(agents * color_count, 0);
  chain_head_.assign(agents, BeadId::none());
  chain_tail_.assign(agents, BeadId::none());

  arena_.reserve(colors.size());
  for (Color c : colors) {
    BeadId b = allocate(c);
    link_before(b, BeadId::none());
    ++size_;
  }
  unassigned_ = size_;
}

bool Necklace::live(BeadId b) const {
  return b.valid() && b.value() < arena_.size() && arena_[b.value()].live;
}

const Necklace::Node& Necklace::node(BeadId b) const {
  if (!live(b)) throw std::logic_error("stale or null bead handle");
  return arena_[b.value()];
}

Necklace::Node& Necklace::node(BeadId b) {
  if (!live(b)) throw std::logic_error("stale or null bead handle");
  return arena_[b.value()];
}

BeadId Necklace::allocate(Color c) {
  std::uint32_t slot;
  if (!free_.empty()) {
    slot = free_.back();
    free_.pop_back();
    arena_[slot] = Node{};
  } else {
    slot = static_cast<std::uint32_t>(arena_.size());
    arena_.emplace_back();
  }
  arena_[slot].color = c;
  arena_[slot].live = true;
  return BeadId(slot);
}

void Necklace::link_before(BeadId b, BeadId before) {
  Node& n = arena_[b.value()];
  if (!before.valid()) {
    n.prev = tail_;
    n.next = BeadId::none();
    if (tail_.valid()) arena_[tail_.value()].next = b;
    tail_ = b;
    if (!head_.valid()) head_ = b;
    return;
  }
  Node& after = arena_[before.value()];
  n.next = before;
  n.prev = after.prev;
  if (after.prev.valid()) {
    arena_[after.prev.value()].next = b;
  } else {
    head_ = b;
  }
  after.prev = b;
}

void Necklace::unlink(BeadId b) {
  Node& n = arena_[b.value()];
  if (n.prev.valid()) {
    arena_[n.prev.value()].next = n.next;
  } else {
    head_ = n.next;
  }
  if (n.next.valid()) {
    arena_[n.next.value()].prev = n.prev;
  } else {
    tail_ = n.prev;
  }
  n.prev = BeadId::none();
  n.next = BeadId::none();
}

void Necklace::chain_remove(BeadId b) {
  Node& n = arena_[b.value()];
  if (n.owner == kNoAgent) return;
  const Agent a = n.owner;
  if (n.prev_same.valid()) {
    arena_[n.prev_same.value()].next_same = n.next_same;
  } else {
    chain_head_[a] = n.next_same;
  }
  if (n.next_same.valid()) {
    arena_[n.next_same.value()].prev_same = n.prev_same;
  } else {
    chain_tail_[a] = n.prev_same;
  }
  n.prev_same = BeadId::none();
  n.next_same = BeadId::none();
}

// Inserts b into its owner's chain. The nearest same-owner bead is found by
// scanning outward in both directions, so the cost is the distance to it.
void Necklace::chain_insert(BeadId b) {
  Node& n = arena_[b.value()];
  const Agent a = n.owner;
  if (a == kNoAgent) return;
  if (!chain_head_[a].valid()) {
    chain_head_[a] = b;
    chain_tail_[a] = b;
    return;
  }
  BeadId left = n.prev;
  BeadId right = n.next;
  while (left.valid() || right.valid()) {
    if (left.valid()) {
      if (arena_[left.value()].owner == a) {
        Node& l = arena_[left.value()];
        n.prev_same = left;
        n.next_same = l.next_same;
        if (l.next_same.valid()) {
          arena_[l.next_same.value()].prev_same = b;
        } else {
          chain_tail_[a] = b;
        }
        l.next_same = b;
        return;
      }
      left = arena_[left.value()].prev;
    }
    if (right.valid()) {
      if (arena_[right.value()].owner == a) {
        Node& r = arena_[right.value()];
        n.next_same = right;
        n.prev_same = r.prev_same;
        if (r.prev_same.valid()) {
          arena_[r.prev_same.value()].next_same = b;
        } else {
          chain_head_[a] = b;
        }
        r.prev_same = b;
        return;
      }
      right = arena_[right.value()].next;
    }
  }
  throw std::logic_error("owner chain lost track of an agent's beads");
}

void Necklace::count_add(Agent a, Color c, long delta) {
  if (a == kNoAgent) {
    unassigned_ = static_cast<std::size_t>(static_cast<long>(unassigned_) + delta);
    return;
  }
  owned_[a] = static_cast<std::size_t>(static_cast<long>(owned_[a]) + delta);
  auto& cell = owned_color_[a * color_count() + c];
  cell = static_cast<std::size_t>(static_cast<long>(cell) + delta);
}

void Necklace::drop_boundary(BeadId left) {
  if (!left.valid()) return;
  Node& n = arena_[left.value()];
  if (!n.has_right_cut) return;
  auto it = cuts_.find(n.right_cut);
  it->second.erase(left);
  if (it->second.empty()) cuts_.erase(it);
  n.has_right_cut = false;
  --cut_count_;
}

void Necklace::refresh_boundary(BeadId left) {
  if (!left.valid()) return;
  drop_boundary(left);
  Node& n = arena_[left.value()];
  if (!n.next.valid()) return;
  const Agent a = n.owner;
  const Agent b = arena_[n.next.value()].owner;
  if (a == kNoAgent || b == kNoAgent || a == b) return;
  n.right_cut = AgentPair::of(a, b);
  n.has_right_cut = true;
  cuts_[n.right_cut].insert(left);
  ++cut_count_;
}

BeadId Necklace::at(std::size_t pos) const {
  if (pos == 0 || pos > size_) {
    std::ostringstream msg;
    msg << "position " << pos << " outside [1, " << size_ << "]";
    throw Error(Errc::kOutOfRange, msg.str());
  }
  if (pos <= size_ / 2 + 1) {
    BeadId b = head_;
    for (std::size_t i = 1; i < pos; ++i) b = arena_[b.value()].next;
    return b;
  }
  BeadId b = tail_;
  for (std::size_t i = size_; i > pos; --i) b = arena_[b.value()].prev;
  return b;
}

std::size_t Necklace::position_of(BeadId b) const {
  node(b);
  std::size_t pos = 1;
  for (BeadId p = arena_[b.value()].prev; p.valid(); p = arena_[p.value()].prev) ++pos;
  return pos;
}

void Necklace::set_owner(BeadId b, Agent a) {
  Node& n = node(b);
  if (a != kNoAgent && a >= agents_) throw Error(Errc::kOutOfRange, "agent id out of range");
  if (n.owner == a) return;
  chain_remove(b);
  count_add(n.owner, n.color, -1);
  n.owner = a;
  count_add(a, n.color, +1);
  chain_insert(b);
  refresh_boundary(n.prev);
  refresh_boundary(b);
}

void Necklace::assign_ordered(std::span<const BeadId> ordered, std::span<const Agent> owners) {
  if (ordered.size() != owners.size()) {
    throw std::invalid_argument("assign_ordered: beads and owners differ in length");
  }
  std::vector<char> touched(agents_, 0);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Node& n = node(ordered[i]);
    if (owners[i] != kNoAgent && owners[i] >= agents_) {
      throw Error(Errc::kOutOfRange, "agent id out of range");
    }
    if (n.owner != kNoAgent) touched[n.owner] = 1;
    if (owners[i] != kNoAgent) touched[owners[i]] = 1;
  }
  std::size_t expected = 0;
  std::size_t seen_owned = 0;
  for (std::size_t a = 0; a < agents_; ++a) {
    if (touched[a]) expected += owned_[a];
  }
  for (BeadId b : ordered) {
    if (arena_[b.value()].owner != kNoAgent) ++seen_owned;
  }
  if (seen_owned != expected) {
    throw std::logic_error("assign_ordered: bead list does not cover the affected agents");
  }

  for (std::size_t a = 0; a < agents_; ++a) {
    if (!touched[a]) continue;
    chain_head_[a] = BeadId::none();
    chain_tail_[a] = BeadId::none();
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    Node& n = arena_[ordered[i].value()];
    count_add(n.owner, n.color, -1);
    n.owner = owners[i];
    count_add(n.owner, n.color, +1);
    n.prev_same = BeadId::none();
    n.next_same = BeadId::none();
    if (n.owner == kNoAgent) continue;
    const Agent a = n.owner;
    if (chain_tail_[a].valid()) {
      arena_[chain_tail_[a].value()].next_same = ordered[i];
      n.prev_same = chain_tail_[a];
    } else {
      chain_head_[a] = ordered[i];
    }
    chain_tail_[a] = ordered[i];
  }
  for (BeadId b : ordered) {
    refresh_boundary(arena_[b.value()].prev);
    refresh_boundary(b);
  }
}

BeadId Necklace::insert_before(BeadId before, Color c, Agent owner) {
  if (before.valid()) node(before);
  if (c >= color_count()) throw Error(Errc::kOutOfRange, "color id out of range");
  if (owner != kNoAgent && owner >= agents_) throw Error(Errc::kOutOfRange, "agent id out of range");
  BeadId b = allocate(c);
  link_before(b, before);
  ++size_;
  ++color_total_[c];
  Node& n = arena_[b.value()];
  n.owner = owner;
  count_add(owner, c, +1);
  chain_insert(b);
  refresh_boundary(n.prev);
  refresh_boundary(b);
  return b;
}

void Necklace::erase(BeadId b) {
  Node& n = node(b);
  const BeadId before = n.prev;
  drop_boundary(before);
  drop_boundary(b);
  chain_remove(b);
  count_add(n.owner, n.color, -1);
  --color_total_[n.color];
  unlink(b);
  --size_;
  n.live = false;
  free_.push_back(b.value());
  refresh_boundary(before);
}

void Necklace::move_before(BeadId b, BeadId before) {
  Node& n = node(b);
  if (before == b) return;
  if (before.valid()) node(before);
  const BeadId old_prev = n.prev;
  drop_boundary(old_prev);
  drop_boundary(b);
  chain_remove(b);
  unlink(b);
  refresh_boundary(old_prev);
  link_before(b, before);
  chain_insert(b);
  refresh_boundary(n.prev);
  refresh_boundary(b);
}

BeadId Necklace::relocate(std::size_t from, std::size_t to) {
  if (to == 0 || to > size_) throw Error(Errc::kOutOfRange, "relocation target out of range");
  const BeadId b = at(from);
  if (from == to) return b;
  // After removal the bead must land in front of whatever then sits at `to`.
  const BeadId target = at(to);
  const BeadId before = to > from ? arena_[target.value()].next : target;
  move_before(b, before);
  return b;
}

std::vector<BeadId> Necklace::beads_of(Agent a) const {
  std::vector<BeadId> out;
  out.reserve(owned_.at(a));
  for (BeadId b = chain_head_[a]; b.valid(); b = arena_[b.value()].next_same) out.push_back(b);
  return out;
}

std::vector<BeadId> Necklace::sequence() const {
  std::vector<BeadId> out;
  out.reserve(size_);
  for (BeadId b = head_; b.valid(); b = arena_[b.value()].next) out.push_back(b);
  return out;
}

std::vector<Color> Necklace::color_sequence() const {
  std::vector<Color> out;
  out.reserve(size_);
  for (BeadId b = head_; b.valid(); b = arena_[b.value()].next) out.push_back(arena_[b.value()].color);
  return out;
}

std::vector<Agent> Necklace::owner_sequence() const {
  std::vector<Agent> out;
  out.reserve(size_);
  for (BeadId b = head_; b.valid(); b = arena_[b.value()].next) out.push_back(arena_[b.value()].owner);
  return out;
}

void Necklace::check_consistency() const {
  auto fail = [](const std::string& what) { throw std::logic_error("necklace: " + what); };
  std::size_t seen = 0;
  BeadId prev;
  std::vector<std::size_t> owned(agents_, 0);
  std::vector<std::size_t> owned_color(agents_ * color_count(), 0);
  std::vector<std::size_t> totals(color_count(), 0);
  std::size_t unassigned = 0;
  std::size_t boundaries = 0;
  for (BeadId b = head_; b.valid(); b = arena_[b.value()].next) {
    const Node& n = arena_[b.value()];
    if (!n.live) fail("dead bead linked");
    if (n.prev != prev) fail("broken prev link");
    ++seen;
    ++totals[n.color];
    if (n.owner == kNoAgent) {
      ++unassigned;
    } else {
      ++owned[n.owner];
      ++owned_color[n.owner * color_count() + n.color];
    }
    const bool cut = n.next.valid() && n.owner != kNoAgent &&
                     arena_[n.next.value()].owner != kNoAgent &&
                     arena_[n.next.value()].owner != n.owner;
    if (cut != n.has_right_cut) fail("boundary flag out of date");
    if (cut) {
      ++boundaries;
      const AgentPair key = AgentPair::of(n.owner, arena_[n.next.value()].owner);
      if (!(n.right_cut == key)) fail("boundary filed under wrong pair");
      auto it = cuts_.find(key);
      if (it == cuts_.end() || !it->second.contains(b)) fail("boundary missing from cut map");
    }
    prev = b;
  }
  if (prev != tail_) fail("tail mismatch");
  if (seen != size_) fail("size mismatch");
  if (totals != color_total_) fail("color totals mismatch");
  if (owned != owned_ || owned_color != owned_color_) fail("ownership counters mismatch");
  if (unassigned != unassigned_) fail("unassigned counter mismatch");
  if (boundaries != cut_count_) fail("cut counter mismatch");
  std::size_t mapped = 0;
  for (const auto& [pair, set] : cuts_) mapped += set.size();
  if (mapped != cut_count_) fail("cut map holds stale entries");

  for (std::size_t a = 0; a < agents_; ++a) {
    std::size_t chained = 0;
    BeadId last;
    for (BeadId b = chain_head_[a]; b.valid(); b = arena_[b.value()].next_same) {
      if (arena_[b.value()].owner != a) fail("foreign bead in owner chain");
      if (arena_[b.value()].prev_same != last) fail("broken owner chain back link");
      if (last.valid() && position_of(last) >= position_of(b)) fail("owner chain out of order");
      last = b;
      ++chained;
    }
    if (last != chain_tail_[a]) fail("owner chain tail mismatch");
    if (chained != owned_[a]) fail("owner chain length mismatch");
  }
}

std::vector<Color> ColorAlphabet::encode(std::string_view text) {
  std::vector<Color> out;
  out.reserve(text.size());
  for (char ch : text) {
    auto it = std::find(symbols.begin(), symbols.end(), ch);
    if (it == symbols.end()) {
      symbols.push_back(ch);
      out.push_back(static_cast<Color>(symbols.size() - 1));
    } else {
      out.push_back(static_cast<Color>(it - symbols.begin()));
    }
  }
  return out;
}

Color ColorAlphabet::find(char symbol) const {
  auto it = std::find(symbols.begin(), symbols.end(), symbol);
  if (it == symbols.end()) {
    throw Error(Errc::kParse, std::string("unknown bead symbol '") + symbol + "'");
  }
  return static_cast<Color>(it - symbols.begin());
}

char ColorAlphabet::symbol(Color c) const { return symbols.at(c); }

std::vector<Color> parse_colors(std::string_view text) {
  ColorAlphabet alphabet;
  return alphabet.encode(text);
}

}  // namespace necklace
