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

#include "necklace/offline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "necklace/error.hpp"

namespace necklace {
namespace {

void require_two_colors(const Necklace& necklace) {
  if (necklace.color_count() > 2) {
    throw Error(Errc::kNotTwoColors,
                "expected at most two colors, got " + std::to_string(necklace.color_count()));
  }
}

void require_divisible(const Necklace& necklace) {
  for (Color c = 0; c < necklace.color_count(); ++c) {
    if (necklace.count(c) % necklace.agent_count() != 0) {
      throw Error(Errc::kDivisibility, "k does not divide the count of color " + std::to_string(c));
    }
  }
}

}  // namespace

std::vector<std::size_t> window_split(std::span<const Color> colors, std::size_t parts) {
  const std::size_t total = colors.size();
  if (parts == 0 || total % parts != 0) {
    throw std::invalid_argument("window_split: length not divisible by part count");
  }
  std::vector<std::size_t> share(total, parts - 1);
  if (parts == 1 || total == 0) return share;

  const std::size_t width = total / parts;
  const long red_total = std::count(colors.begin(), colors.end(), Color{0});
  if (red_total % static_cast<long>(parts) != 0) {
    throw std::invalid_argument("window_split: color count not divisible by part count");
  }
  const long target = red_total / static_cast<long>(parts);
  auto red = [&](std::size_t i) -> long { return colors[i] == 0 ? 1 : 0; };

  // Linked list over the beads not yet handed out; `total` is the sentinel.
  const std::size_t end = total;
  std::vector<std::size_t> next(total), prev(total);
  for (std::size_t i = 0; i < total; ++i) {
    next[i] = i + 1;
    prev[i] = i == 0 ? end : i - 1;
  }

  // reds[j]: color-0 count of the `width` live beads starting at j, for every
  // live j that has that many beads after it. `balanced` holds the j with
  // reds[j] == target.
  std::vector<long> reds(total, -1);
  std::set<std::size_t> balanced;
  auto store = [&](std::size_t j, long value) {
    reds[j] = value;
    if (value == target) {
      balanced.insert(j);
    } else {
      balanced.erase(j);
    }
  };
  auto forget = [&](std::size_t j) {
    reds[j] = -1;
    balanced.erase(j);
  };

  {
    long window = 0;
    for (std::size_t i = 0; i < width; ++i) window += red(i);
    store(0, window);
    for (std::size_t j = 1; j + width <= total; ++j) {
      window += red(j + width - 1) - red(j - 1);
      store(j, window);
    }
  }

  for (std::size_t part = 0; part + 1 < parts; ++part) {
    if (balanced.empty()) throw std::logic_error("window_split: no balanced window");
    const std::size_t start = *balanced.begin();

    std::size_t cursor = start;
    for (std::size_t i = 0; i < width; ++i) {
      share[cursor] = part;
      forget(cursor);
      cursor = next[cursor];
    }
    const std::size_t before = prev[start];
    const std::size_t after = cursor;
    if (before != end) next[before] = after;
    if (after != end) prev[after] = before;

    // Only the width-1 windows that started just before the removed block
    // changed. Recompute the farthest one directly, then slide.
    std::vector<std::size_t> touched;
    for (std::size_t p = before; p != end && touched.size() + 1 < width; p = prev[p]) {
      touched.push_back(p);
    }
    if (touched.empty()) continue;
    std::size_t head = touched.back();
    std::size_t tail = head;
    long window = red(head);
    std::size_t have = 1;
    while (have < width && next[tail] != end) {
      tail = next[tail];
      window += red(tail);
      ++have;
    }
    for (std::size_t t = touched.size(); t-- > 0;) {
      head = touched[t];
      if (have < width) {
        forget(head);
      } else {
        store(head, window);
      }
      if (t == 0) break;
      // Slide right by one: drop `head`, extend the tail.
      window -= red(head);
      --have;
      if (have + 1 == width && next[tail] != end) {
        tail = next[tail];
        window += red(tail);
        ++have;
      }
    }
  }
  return share;
}

std::size_t offline_split(Necklace& necklace) {
  require_two_colors(necklace);
  require_divisible(necklace);
  const std::vector<BeadId> beads = necklace.sequence();
  const std::vector<Color> colors = necklace.color_sequence();
  const std::vector<std::size_t> share = window_split(colors, necklace.agent_count());
  std::vector<Agent> owners(share.begin(), share.end());
  necklace.assign_ordered(beads, owners);
  return necklace.cut_count();
}

void offline_split_range(Necklace& necklace, std::span<const Agent> agents) {
  require_two_colors(necklace);
  if (agents.empty()) return;
  std::vector<char> member(necklace.agent_count(), 0);
  for (Agent a : agents) {
    if (a >= necklace.agent_count()) throw Error(Errc::kOutOfRange, "agent id out of range");
    if (member[a]) throw Error(Errc::kOutOfRange, "agent listed twice");
    member[a] = 1;
  }

  std::vector<BeadId> beads;
  std::vector<Color> colors;
  for (BeadId b = necklace.head(); b.valid(); b = necklace.next(b)) {
    const Agent a = necklace.owner(b);
    if (a != kNoAgent && member[a]) {
      beads.push_back(b);
      colors.push_back(necklace.color(b));
    }
  }
  for (Color c = 0; c < necklace.color_count(); ++c) {
    const std::size_t have = static_cast<std::size_t>(std::count(colors.begin(), colors.end(), c));
    if (have != agents.size() * necklace.quota(c) ||
        necklace.count(c) % necklace.agent_count() != 0) {
      throw Error(Errc::kQuotaMismatch, "agents hold " + std::to_string(have) +
                                            " beads of color " + std::to_string(c) +
                                            ", expected " +
                                            std::to_string(agents.size() * necklace.quota(c)));
    }
  }
  if (agents.size() == 1) {
    std::vector<Agent> owners(beads.size(), agents[0]);
    necklace.assign_ordered(beads, owners);
    return;
  }
  const std::vector<std::size_t> share = window_split(colors, agents.size());
  std::vector<Agent> owners(share.size());
  for (std::size_t i = 0; i < share.size(); ++i) owners[i] = agents[share[i]];
  necklace.assign_ordered(beads, owners);
}

Necklace adversarial_necklace(std::size_t agents, std::size_t beads) {
  if (agents == 0 || beads == 0) throw Error(Errc::kEmptyInput, "need k >= 1 and m >= 1");
  if (beads % (2 * agents) != 0) {
    throw Error(Errc::kDivisibility, "2k must divide m");
  }
  std::vector<Color> colors(beads, 1);
  std::fill(colors.begin(), colors.begin() + static_cast<long>(beads / 2), Color{0});
  return Necklace(colors, agents, Mode::kExact, 2);
}

std::size_t baseline_split(Necklace& necklace) {
  require_divisible(necklace);
  std::vector<std::size_t> seen(necklace.color_count(), 0);
  const std::vector<BeadId> beads = necklace.sequence();
  std::vector<Agent> owners;
  owners.reserve(beads.size());
  for (BeadId b : beads) {
    const Color c = necklace.color(b);
    owners.push_back(static_cast<Agent>(seen[c]++ / necklace.quota(c)));
  }
  necklace.assign_ordered(beads, owners);
  return necklace.cut_count();
}

}  // namespace necklace
