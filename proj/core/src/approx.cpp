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

#include "necklace/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "necklace/error.hpp"

namespace necklace {

OrderIndex::OrderIndex(std::uint64_t seed) : rng_(seed) {}

OrderIndex OrderIndex::from_colors(std::span<const Color> colors, std::uint64_t seed) {
  OrderIndex index(seed);
  index.nodes_.reserve(colors.size());
  for (Color c : colors) {
    if (c > 1) throw Error(Errc::kNotTwoColors, "the order index holds at most two colors");
    index.root_ = index.merge(index.root_, index.make(c));
  }
  index.touched_ = 0;
  return index;
}

OrderIndex OrderIndex::from_necklace(const Necklace& necklace, std::uint64_t seed) {
  if (necklace.color_count() > 2) {
    throw Error(Errc::kNotTwoColors, "the order index holds at most two colors");
  }
  const std::vector<Color> colors = necklace.color_sequence();
  return from_colors(colors, seed);
}

std::size_t OrderIndex::count(Color c) const {
  if (c > 1) return 0;
  return root_ == kNil ? 0 : nodes_[root_].count[c];
}

std::uint32_t OrderIndex::make(Color c) {
  std::uint32_t id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
  }
  Node& n = nodes_[id];
  n = Node{};
  n.priority = rng_();
  n.color = c;
  n.count[c] = 1;
  return id;
}

void OrderIndex::pull(std::uint32_t t) {
  Node& n = nodes_[t];
  n.size = 1;
  n.count = {0, 0};
  n.count[n.color] = 1;
  for (std::uint32_t child : {n.left, n.right}) {
    if (child == kNil) continue;
    n.size += nodes_[child].size;
    n.count[0] += nodes_[child].count[0];
    n.count[1] += nodes_[child].count[1];
  }
}

std::pair<std::uint32_t, std::uint32_t> OrderIndex::split(std::uint32_t t, std::size_t left_size) {
  if (t == kNil) return {kNil, kNil};
  ++touched_;
  const std::uint32_t l = nodes_[t].left;
  const std::size_t ls = l == kNil ? 0 : nodes_[l].size;
  if (left_size <= ls) {
    auto [a, b] = split(l, left_size);
    nodes_[t].left = b;
    pull(t);
    return {a, t};
  }
  auto [a, b] = split(nodes_[t].right, left_size - ls - 1);
  nodes_[t].right = a;
  pull(t);
  return {t, b};
}

std::uint32_t OrderIndex::merge(std::uint32_t a, std::uint32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  ++touched_;
  if (nodes_[a].priority > nodes_[b].priority) {
    nodes_[a].right = merge(nodes_[a].right, b);
    pull(a);
    return a;
  }
  nodes_[b].left = merge(a, nodes_[b].left);
  pull(b);
  return b;
}

void OrderIndex::check_position(std::size_t pos, std::size_t limit) const {
  if (pos == 0 || pos > limit) {
    throw Error(Errc::kOutOfRange,
                "index position " + std::to_string(pos) + " outside [1, " + std::to_string(limit) + "]");
  }
}

void OrderIndex::insert(std::size_t pos, Color c) {
  check_position(pos, size() + 1);
  if (c > 1) throw Error(Errc::kNotTwoColors, "the order index holds at most two colors");
  auto [a, b] = split(root_, pos - 1);
  root_ = merge(merge(a, make(c)), b);
}

Color OrderIndex::erase(std::size_t pos) {
  check_position(pos, size());
  auto [a, rest] = split(root_, pos - 1);
  auto [mid, b] = split(rest, 1);
  const Color c = nodes_[mid].color;
  free_.push_back(mid);
  root_ = merge(a, b);
  return c;
}

void OrderIndex::relocate(std::size_t from, std::size_t to) {
  check_position(from, size());
  check_position(to, size());
  if (from == to) return;
  insert(to, erase(from));
}

Color OrderIndex::color_at(std::size_t pos) const {
  check_position(pos, size());
  std::uint32_t t = root_;
  for (;;) {
    const Node& n = nodes_[t];
    const std::size_t ls = n.left == kNil ? 0 : nodes_[n.left].size;
    if (pos <= ls) {
      t = n.left;
    } else if (pos == ls + 1) {
      return n.color;
    } else {
      pos -= ls + 1;
      t = n.right;
    }
  }
}

std::size_t OrderIndex::rank(Color c, std::size_t pos) const {
  if (pos > size()) check_position(pos, size());
  std::size_t total = 0;
  std::uint32_t t = root_;
  while (t != kNil && pos > 0) {
    const Node& n = nodes_[t];
    const std::size_t ls = n.left == kNil ? 0 : nodes_[n.left].size;
    if (pos <= ls) {
      t = n.left;
      continue;
    }
    if (n.left != kNil) total += nodes_[n.left].count[c];
    if (n.color == c) ++total;
    pos -= ls + 1;
    t = n.right;
  }
  return total;
}

std::size_t OrderIndex::select(Color c, std::size_t r) const {
  if (r == 0 || r > count(c)) {
    throw Error(Errc::kOutOfRange, "rank " + std::to_string(r) + " outside [1, " +
                                       std::to_string(count(c)) + "]");
  }
  std::size_t pos = 0;
  std::uint32_t t = root_;
  for (;;) {
    const Node& n = nodes_[t];
    const std::size_t left_count = n.left == kNil ? 0 : nodes_[n.left].count[c];
    const std::size_t ls = n.left == kNil ? 0 : nodes_[n.left].size;
    if (r <= left_count) {
      t = n.left;
      continue;
    }
    r -= left_count;
    pos += ls + 1;
    if (n.color == c) {
      if (r == 1) return pos;
      --r;
    }
    t = n.right;
  }
}

std::vector<Color> OrderIndex::colors() const {
  std::vector<Color> out;
  out.reserve(size());
  std::vector<std::uint32_t> stack;
  std::uint32_t t = root_;
  while (t != kNil || !stack.empty()) {
    while (t != kNil) {
      stack.push_back(t);
      t = nodes_[t].left;
    }
    t = stack.back();
    stack.pop_back();
    out.push_back(nodes_[t].color);
    t = nodes_[t].right;
  }
  return out;
}

std::size_t OrderIndex::height() const {
  std::size_t best = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  if (root_ != kNil) stack.emplace_back(root_, 1);
  while (!stack.empty()) {
    auto [t, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes_[t].left != kNil) stack.emplace_back(nodes_[t].left, d + 1);
    if (nodes_[t].right != kNil) stack.emplace_back(nodes_[t].right, d + 1);
  }
  return best;
}

bool OrderIndex::matches(const Necklace& necklace) const {
  if (necklace.size() != size() || necklace.color_count() > 2) return false;
  for (Color c = 0; c < necklace.color_count(); ++c) {
    if (necklace.count(c) != count(c)) return false;
  }
  return true;
}

void approx_maintain(OrderIndex& index, const IndexUpdate& update) {
  switch (update.kind) {
    case IndexUpdate::Kind::kInsert: index.insert(update.pos, update.color); break;
    case IndexUpdate::Kind::kErase: index.erase(update.pos); break;
    case IndexUpdate::Kind::kRelocate: index.relocate(update.pos, update.to); break;
  }
}

void ExclusionSet::add(std::size_t lo, std::size_t hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  bool placed = false;
  for (const auto& [a, b] : spans_) {
    if (b + 1 < lo) {
      merged.emplace_back(a, b);
    } else if (hi + 1 < a) {
      if (!placed) merged.emplace_back(lo, hi);
      placed = true;
      merged.emplace_back(a, b);
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
  if (!placed) merged.emplace_back(lo, hi);
  spans_ = std::move(merged);
}

bool ExclusionSet::contains(std::size_t pos) const {
  for (const auto& [a, b] : spans_) {
    if (a <= pos && pos <= b) return true;
  }
  return false;
}

std::uint64_t epsilon_sample_size(std::size_t agents, std::size_t iteration, double epsilon,
                                  std::size_t beads, double constant) {
  if (iteration == 0 || iteration > agents) {
    throw Error(Errc::kOutOfRange, "iteration must lie in [1, k]");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(Errc::kOutOfRange, "epsilon must lie in (0, 1)");
  if (!(constant > 0.0)) throw Error(Errc::kOutOfRange, "sample constant must be positive");
  const double remaining = static_cast<double>(agents - iteration + 1);
  const double value = constant * remaining * remaining * std::ldexp(1.0, 2 * static_cast<int>(agents)) /
                       (epsilon * epsilon) *
                       std::log(2.0 * static_cast<double>(agents) * static_cast<double>(beads));
  constexpr double kCap = 9.0e18;
  if (!(value < kCap)) return static_cast<std::uint64_t>(kCap);
  return static_cast<std::uint64_t>(std::ceil(value));
}

std::size_t complement_population(const OrderIndex& index, Color c, const ExclusionSet& excluded) {
  std::size_t population = index.count(c);
  for (const auto& [lo, hi] : excluded.intervals()) {
    population -= index.rank(c, std::min(hi, index.size())) - index.rank(c, lo - 1);
  }
  return population;
}

std::vector<std::size_t> sample_complement(const OrderIndex& index, Color c,
                                           const ExclusionSet& excluded, std::size_t count,
                                           Rng& rng) {
  const std::size_t population = complement_population(index, c, excluded);
  if (count > population) {
    throw Error(Errc::kPopulationTooSmall, "asked for " + std::to_string(count) + " of " +
                                               std::to_string(population) + " beads");
  }
  // Ranks within the complement (0-based), chosen by Floyd's algorithm.
  std::vector<std::size_t> ranks;
  if (count == population) {
    ranks.resize(population);
    for (std::size_t i = 0; i < population; ++i) ranks[i] = i;
  } else {
    std::set<std::size_t> chosen;
    for (std::size_t j = population - count; j < population; ++j) {
      const std::size_t t = uniform_below(rng, j + 1);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    ranks.assign(chosen.begin(), chosen.end());
  }

  // Map complement ranks to color ranks by skipping the excluded blocks.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // color ranks (a, b]
  for (const auto& [lo, hi] : excluded.intervals()) {
    const std::size_t a = index.rank(c, lo - 1);
    const std::size_t b = index.rank(c, std::min(hi, index.size()));
    if (b > a) blocks.emplace_back(a, b);
  }
  std::vector<std::size_t> out;
  out.reserve(ranks.size());
  std::size_t offset = 0;
  std::size_t next_block = 0;
  for (std::size_t t : ranks) {
    std::size_t r = t + 1 + offset;
    while (next_block < blocks.size() && blocks[next_block].first < r) {
      const std::size_t width = blocks[next_block].second - blocks[next_block].first;
      offset += width;
      r += width;
      ++next_block;
    }
    out.push_back(index.select(c, r));
  }
  return out;
}

ApproxResult approx_cuts(const OrderIndex& index, Necklace& necklace, const ApproxConfig& config) {
  if (necklace.color_count() > 2) throw Error(Errc::kNotTwoColors, "approximate split needs two colors");
  if (!index.matches(necklace)) {
    throw Error(Errc::kIndexDesync, "index holds " + std::to_string(index.size()) +
                                        " beads, necklace " + std::to_string(necklace.size()));
  }
  const std::size_t k = necklace.agent_count();
  const std::size_t m = necklace.size();
  epsilon_sample_size(k, 1, config.epsilon, m, config.sample_constant);  // validates config
  Rng rng(config.seed);
  ApproxResult result;
  result.spans.assign(k, {0, 0});
  ExclusionSet excluded;

  struct Pick {
    std::size_t pos;
    Color color;
  };
  for (std::size_t j = 1; j < k; ++j) {
    const std::size_t remaining = k - j + 1;
    const std::uint64_t wanted =
        epsilon_sample_size(k, j, config.epsilon, m, config.sample_constant);
    std::vector<Pick> merged;
    std::array<std::size_t, 2> drawn{0, 0};
    for (Color c = 0; c < 2; ++c) {
      const std::size_t population = complement_population(index, c, excluded);
      const std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(wanted, population));
      for (std::size_t pos : sample_complement(index, c, excluded, take, rng)) {
        merged.push_back({pos, c});
      }
      drawn[c] = take;
    }
    result.sample_sizes.push_back(drawn[0] + drawn[1]);
    std::sort(merged.begin(), merged.end(), [](const Pick& a, const Pick& b) { return a.pos < b.pos; });

    const std::size_t reds = drawn[0] / remaining;
    const std::size_t width = reds + drawn[1] / remaining;
    if (width == 0) continue;
    // Leftmost window of `width` samples holding exactly `reds` reds.
    std::size_t in_window = 0;
    for (std::size_t i = 0; i < width; ++i) in_window += merged[i].color == 0;
    std::size_t start = 0;
    while (in_window != reds) {
      if (start + width >= merged.size()) throw std::logic_error("no balanced sample window");
      in_window += (merged[start + width].color == 0) - (merged[start].color == 0);
      ++start;
    }
    const std::size_t lo = merged[start].pos;
    const std::size_t hi = merged[start + width - 1].pos;
    result.spans[j - 1] = {lo, hi};
    excluded.add(lo, hi);
  }

  // Each agent takes the beads of its span not claimed by an earlier agent.
  std::vector<Agent> owner(m + 1, kNoAgent);
  for (Agent a = 0; a + 1 < k; ++a) {
    const auto [lo, hi] = result.spans[a];
    if (lo == 0) continue;
    for (std::size_t p = lo; p <= hi; ++p) {
      if (owner[p] == kNoAgent) owner[p] = a;
    }
  }
  const std::vector<BeadId> beads = necklace.sequence();
  std::vector<Agent> owners(m);
  for (std::size_t p = 1; p <= m; ++p) {
    owners[p - 1] = owner[p] == kNoAgent ? static_cast<Agent>(k - 1) : owner[p];
  }
  necklace.assign_ordered(beads, owners);
  result.cuts = necklace.cut_count();
  return result;
}

ApproxResult approx_static(Necklace& necklace, const ApproxConfig& config) {
  if (necklace.color_count() > 2) throw Error(Errc::kNotTwoColors, "approximate split needs two colors");
  const OrderIndex index = OrderIndex::from_necklace(necklace, config.seed ^ 0x5851f42d4c957f2dULL);
  return approx_cuts(index, necklace, config);
}

}  // namespace necklace
