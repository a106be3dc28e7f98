// Copyright 2026 The ghostpulse Authors.
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

// Set-level model of ghost-pulse formation on an intensity pattern: pulses
// at k, l, m (within the interaction window) pump energy into slot k + l - m.

#pragma once

#include <vector>

#include "ghostpulse/constraints.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

struct ChannelConfig {
  Window window = Window::unbounded();
  int max_rounds = 1;  // the same window is reused in every round
};

struct ChannelRound {
  int flips = 0;
  BinaryWord word;
};

struct ChannelTrace {
  std::vector<ChannelRound> rounds;
  BinaryWord output;
  bool fixed_point = false;  // output is immune: one more round changes nothing
};

namespace detail {

/// One round: every empty slot hit by some triple of pulses becomes a pulse.
inline BinaryWord ghost_round(const BinaryWord& b, Window window, int& flips) {
  const int n = static_cast<int>(b.size());
  const std::vector<int> s = support_positions(b.symbols());
  std::vector<Symbol> out(b.begin(), b.end());
  const int t = window.bounded() ? window.t() : n;
  for (int k : s) {
    for (int l : s) {
      if (std::abs(k - l) > t) continue;
      for (int m : s) {
        if (std::abs(k - m) > t || std::abs(l - m) > t) continue;
        const int p = k + l - m;
        if (p >= 1 && p <= n && out[static_cast<std::size_t>(p - 1)] == 0 &&
            b[static_cast<std::size_t>(p - 1)] == 0) {
          out[static_cast<std::size_t>(p - 1)] = 1;
        }
      }
    }
  }
  flips = 0;
  for (std::size_t i = 0; i < out.size(); ++i) flips += out[i] != b[i];
  return BinaryWord(std::move(out));
}

}  // namespace detail

/// Runs up to cfg.max_rounds rounds, stopping early at a fixed point.
inline ChannelTrace simulate_ghost_pulses(const BinaryWord& b, const ChannelConfig& cfg) {
  if (cfg.max_rounds < 1) throw DomainError("max_rounds must be >= 1");
  ChannelTrace trace;
  BinaryWord current = b;
  for (int r = 0; r < cfg.max_rounds; ++r) {
    int flips = 0;
    BinaryWord next = detail::ghost_round(current, cfg.window, flips);
    trace.rounds.push_back({flips, next});
    current = std::move(next);
    if (flips == 0) break;
  }
  int flips = 0;
  detail::ghost_round(current, cfg.window, flips);
  trace.fixed_point = flips == 0;
  trace.output = std::move(current);
  return trace;
}

inline BinaryWord apply_ghost_pulses(const BinaryWord& b, const ChannelConfig& cfg) {
  return simulate_ghost_pulses(b, cfg).output;
}

/// The receiver only sees intensities, so signs are dropped first.
inline BinaryWord apply_ghost_pulses(const TernaryWord& x, const ChannelConfig& cfg) {
  return apply_ghost_pulses(abs_project(x), cfg);
}

}  // namespace ghostpulse
