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

#ifndef NECKLACE_NECKLACE_HPP_
#define NECKLACE_NECKLACE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace necklace {

using Color = std::uint32_t;
using Agent = std::uint32_t;

inline constexpr Agent kNoAgent = std::numeric_limits<Agent>::max();

/// Stable handle to a bead. Handles stay valid until the bead is erased,
/// regardless of how the bead is moved or reassigned.
class BeadId {
 public:
  constexpr BeadId() = default;
  constexpr explicit BeadId(std::uint32_t value) : value_(value) {}

  static constexpr BeadId none() { return BeadId(); }

  constexpr bool valid() const { return value_ != kNull; }
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr auto operator<=>(BeadId, BeadId) = default;

 private:
  static constexpr std::uint32_t kNull = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = kNull;
};

/// Unordered pair of agents, stored with lo <= hi.
struct AgentPair {
  Agent lo = kNoAgent;
  Agent hi = kNoAgent;

  static AgentPair of(Agent a, Agent b) { return a < b ? AgentPair{a, b} : AgentPair{b, a}; }

  friend auto operator<=>(const AgentPair&, const AgentPair&) = default;
};

enum class Mode {
  kExact,   // k must divide every per-color count
  kApprox,  // arbitrary counts; fairness is only approximate
};

/// Arena-backed doubly linked bead sequence.
///
/// Besides the sequence itself the structure keeps, per agent, a chain of the
/// agent's beads in necklace order (`next_same_owner`), per-agent per-color
/// ownership counts, and an eagerly maintained map from agent pairs to the
/// boundaries (cuts) separating them. A boundary is identified by the bead on
/// its left.
///
/// Only list order is stored; 1-based positions are computed on demand in
/// O(m) by `at` and `position_of`.
class Necklace {
 public:
  using CutMap = std::map<AgentPair, std::set<BeadId>>;

  /// Throws Errc::kEmptyInput for an empty sequence or k == 0 and
  /// Errc::kDivisibility when `mode` is exact and k does not divide a count.
  /// `color_count` defaults to max(color) + 1.
  Necklace(std::span<const Color> colors, std::size_t agents, Mode mode = Mode::kExact,
           std::size_t color_count = 0);

  std::size_t size() const { return size_; }
  std::size_t color_count() const { return color_total_.size(); }
  std::size_t agent_count() const { return agents_; }
  Mode mode() const { return mode_; }

  std::size_t count(Color c) const { return color_total_.at(c); }
  /// Exact per-agent target m_c / k (floor in approximate mode).
  std::size_t quota(Color c) const { return color_total_.at(c) / agents_; }
  std::size_t owned(Agent a) const { return owned_.at(a); }
  std::size_t owned(Agent a, Color c) const { return owned_color_.at(a * color_count() + c); }
  bool all_assigned() const { return unassigned_ == 0; }

  BeadId head() const { return head_; }
  BeadId tail() const { return tail_; }
  BeadId next(BeadId b) const { return node(b).next; }
  BeadId prev(BeadId b) const { return node(b).prev; }
  BeadId next_same_owner(BeadId b) const { return node(b).next_same; }
  BeadId prev_same_owner(BeadId b) const { return node(b).prev_same; }
  BeadId first_owned(Agent a) const { return chain_head_.at(a); }
  BeadId last_owned(Agent a) const { return chain_tail_.at(a); }
  Color color(BeadId b) const { return node(b).color; }
  Agent owner(BeadId b) const { return node(b).owner; }
  bool live(BeadId b) const;

  /// Bead at 1-based position `pos`; throws Errc::kOutOfRange.
  BeadId at(std::size_t pos) const;
  /// 1-based position of a live bead.
  std::size_t position_of(BeadId b) const;

  void set_owner(BeadId b, Agent a);

  /// Bulk reassignment. `ordered` must be in necklace order and contain every
  /// bead owned (before or after the call) by any agent it mentions; the
  /// affected agents' chains are rebuilt from it in one pass.
  void assign_ordered(std::span<const BeadId> ordered, std::span<const Agent> owners);

  /// Inserts a bead before `before` (appends when `before` is none).
  BeadId insert_before(BeadId before, Color c, Agent owner);
  void erase(BeadId b);
  /// Moves `b` in front of `before` (to the end when none); keeps its owner.
  void move_before(BeadId b, BeadId before);
  /// Removes the bead at `from` and reinserts it so that it occupies `to` in
  /// the resulting sequence. Returns the moved bead.
  BeadId relocate(std::size_t from, std::size_t to);

  std::size_t cut_count() const { return cut_count_; }
  const CutMap& cut_map() const { return cuts_; }

  std::vector<BeadId> beads_of(Agent a) const;
  std::vector<BeadId> sequence() const;
  std::vector<Color> color_sequence() const;
  std::vector<Agent> owner_sequence() const;

  /// Full structural self-check (links, chains, counters, cut map). Throws
  /// std::logic_error describing the first inconsistency found.
  void check_consistency() const;

 private:
  struct Node {
    Color color = 0;
    Agent owner = kNoAgent;
    BeadId prev;
    BeadId next;
    BeadId prev_same;
    BeadId next_same;
    AgentPair right_cut;
    bool has_right_cut = false;
    bool live = false;
  };

  const Node& node(BeadId b) const;
  Node& node(BeadId b);

  BeadId allocate(Color c);
  void link_before(BeadId b, BeadId before);
  void unlink(BeadId b);
  void chain_remove(BeadId b);
  void chain_insert(BeadId b);
  void count_add(Agent a, Color c, long delta);
  void refresh_boundary(BeadId left);
  void drop_boundary(BeadId left);

  std::vector<Node> arena_;
  std::vector<std::uint32_t> free_;
  BeadId head_;
  BeadId tail_;
  std::size_t size_ = 0;
  std::size_t agents_ = 0;
  Mode mode_ = Mode::kExact;
  std::vector<std::size_t> color_total_;
  std::vector<std::size_t> owned_;
  std::vector<std::size_t> owned_color_;
  std::vector<BeadId> chain_head_;
  std::vector<BeadId> chain_tail_;
  std::size_t unassigned_ = 0;
  CutMap cuts_;
  std::size_t cut_count_ = 0;
};

/// Maps symbols to color ids in order of first appearance ("RRB" -> 0 0 1).
struct ColorAlphabet {
  std::vector<char> symbols;

  std::vector<Color> encode(std::string_view text);
  Color find(char symbol) const;  // throws Errc::kParse when unknown
  char symbol(Color c) const;
};

/// Convenience for tests and fixtures: parse a symbol string into colors.
std::vector<Color> parse_colors(std::string_view text);

}  // namespace necklace

#endif  // NECKLACE_NECKLACE_HPP_
