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

#ifndef NECKLACE_APPROX_HPP_
#define NECKLACE_APPROX_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "necklace/necklace.hpp"
#include "necklace/random.hpp"

namespace necklace {

/// Implicit treap over bead order with per-subtree color counts, giving
/// O(log m) expected insert, erase, rank and select. Positions are 1-based.
/// At most two colors.
class OrderIndex {
 public:
  explicit OrderIndex(std::uint64_t seed = 0x9e3779b97f4a7c15ULL);
  /// Throws Errc::kNotTwoColors for more than two colors.
  static OrderIndex from_colors(std::span<const Color> colors,
                                std::uint64_t seed = 0x9e3779b97f4a7c15ULL);
  static OrderIndex from_necklace(const Necklace& necklace,
                                  std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

  std::size_t size() const { return root_ == kNil ? 0 : nodes_[root_].size; }
  std::size_t count(Color c) const;

  /// The new bead ends up at `pos` (1 .. size()+1).
  void insert(std::size_t pos, Color c);
  Color erase(std::size_t pos);
  /// Erase followed by insert, so the bead ends up at `to`.
  void relocate(std::size_t from, std::size_t to);

  Color color_at(std::size_t pos) const;
  /// Beads of color c among positions 1..pos (pos may be 0).
  std::size_t rank(Color c, std::size_t pos) const;
  /// Position of the r-th (1-based) bead of color c.
  std::size_t select(Color c, std::size_t r) const;

  std::vector<Color> colors() const;
  std::size_t height() const;

  /// Nodes visited by structural updates since the last reset.
  std::uint64_t touched() const { return touched_; }
  void reset_touched() { touched_ = 0; }

  /// Size and per-color counts agree with the necklace.
  bool matches(const Necklace& necklace) const;

 private:
  static constexpr std::uint32_t kNil = 0xffffffffu;

  struct Node {
    std::uint64_t priority;
    std::uint32_t left = kNil;
    std::uint32_t right = kNil;
    std::uint32_t size = 1;
    std::array<std::uint32_t, 2> count{};
    Color color;
  };

  std::uint32_t make(Color c);
  void pull(std::uint32_t t);
  std::pair<std::uint32_t, std::uint32_t> split(std::uint32_t t, std::size_t left_size);
  std::uint32_t merge(std::uint32_t a, std::uint32_t b);
  void check_position(std::size_t pos, std::size_t limit) const;

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
  std::uint32_t root_ = kNil;
  Rng rng_;
  std::uint64_t touched_ = 0;
};

/// One maintenance step, for replaying update streams against an index.
struct IndexUpdate {
  enum class Kind { kInsert, kErase, kRelocate };
  Kind kind = Kind::kInsert;
  std::size_t pos = 0;
  std::size_t to = 0;  // relocate only
  Color color = 0;     // insert only
};

void approx_maintain(OrderIndex& index, const IndexUpdate& update);

struct ApproxConfig {
  double epsilon = 0.25;
  double sample_constant = 1.0;
  std::uint64_t seed = 1;
};

/// Disjoint, sorted, inclusive position intervals already handed out.
class ExclusionSet {
 public:
  void add(std::size_t lo, std::size_t hi);
  const std::vector<std::pair<std::size_t, std::size_t>>& intervals() const { return spans_; }
  bool contains(std::size_t pos) const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> spans_;
};

/// ceil(c * (k - j + 1)^2 * 4^k * eps^-2 * ln(2km)), saturating. Callers cap
/// it at the population they sample from. Throws Errc::kOutOfRange unless
/// 1 <= j <= k and 0 < eps < 1.
std::uint64_t epsilon_sample_size(std::size_t agents, std::size_t iteration, double epsilon,
                                  std::size_t beads, double constant = 1.0);

/// Beads of color c outside `excluded`.
std::size_t complement_population(const OrderIndex& index, Color c, const ExclusionSet& excluded);

/// Uniform sample without replacement of `count` positions of color c lying
/// outside `excluded`, returned in ascending order. Throws
/// Errc::kPopulationTooSmall.
std::vector<std::size_t> sample_complement(const OrderIndex& index, Color c,
                                           const ExclusionSet& excluded, std::size_t count,
                                           Rng& rng);

struct ApproxResult {
  /// Agent a's chosen span of positions (inclusive); the last agent has none
  /// and takes every bead left over. {0, 0} marks an empty share.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::vector<std::size_t> sample_sizes;  // per iteration, both colors
  std::size_t cuts = 0;
};

/// Approximate two-color split with at most 2(k - 1) cuts. Writes owners into
/// the necklace. Throws Errc::kNotTwoColors.
ApproxResult approx_static(Necklace& necklace, const ApproxConfig& config);

/// Same, sampling through a maintained index. Throws Errc::kIndexDesync when
/// the index does not mirror the necklace.
ApproxResult approx_cuts(const OrderIndex& index, Necklace& necklace, const ApproxConfig& config);

}  // namespace necklace

#endif  // NECKLACE_APPROX_HPP_
