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

// Rate p:q finite-state block encoders synthesized from a deterministic
// binary presentation: take the q-th power of the graph, repeatedly discard
// states with fewer than 2^p q-paths into surviving states, then give each
// surviving state the 2^p lexicographically smallest such paths.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ghostpulse/error.hpp"
#include "ghostpulse/graph.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

class BlockEncoder {
 public:
  struct Entry {
    BinaryWord block;
    std::size_t next = 0;  // encoder state index
  };
  struct State {
    std::size_t vertex = 0;     // vertex of the source presentation
    std::vector<Entry> table;   // indexed by the p-bit input, MSB first
  };

  BlockEncoder(int p, int q, std::size_t start, std::vector<State> states)
      : p_(p), q_(q), start_(start), states_(std::move(states)) {
    if (states_.empty() || start_ >= states_.size()) throw DomainError("encoder needs a valid start state");
    inverse_.resize(states_.size());
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (states_[s].table.size() != (std::size_t{1} << p_)) throw DomainError("each state needs 2^p entries");
      for (std::size_t i = 0; i < states_[s].table.size(); ++i) {
        const Entry& e = states_[s].table[i];
        if (static_cast<int>(e.block.size()) != q_ || e.next >= states_.size()) throw DomainError("malformed entry");
        if (!inverse_[s].emplace(mask_from_word(e.block), i).second) {
          throw DomainError("output blocks within a state must be distinct");
        }
      }
    }
  }

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  std::size_t start() const noexcept { return start_; }
  const std::vector<State>& states() const noexcept { return states_; }

  /// Payload length must be a multiple of p.
  BinaryWord encode(const BinaryWord& payload) const {
    if (payload.size() % static_cast<std::size_t>(p_) != 0) throw DomainError("payload length must be a multiple of p");
    BinaryWord out;
    std::size_t s = start_;
    for (std::size_t i = 0; i < payload.size(); i += static_cast<std::size_t>(p_)) {
      std::size_t index = 0;
      for (int k = 0; k < p_; ++k) index = (index << 1) | static_cast<std::size_t>(payload[i + static_cast<std::size_t>(k)]);
      const Entry& e = states_[s].table[index];
      out.append(e.block);
      s = e.next;
    }
    return out;
  }

  BinaryWord decode(const BinaryWord& w) const {
    if (w.size() % static_cast<std::size_t>(q_) != 0) throw CorruptStream("stream length is not a multiple of q");
    BinaryWord out;
    std::size_t s = start_;
    for (std::size_t i = 0; i < w.size(); i += static_cast<std::size_t>(q_)) {
      const auto it = inverse_[s].find(mask_from_word(w.slice(i, static_cast<std::size_t>(q_))));
      if (it == inverse_[s].end()) throw CorruptStream("unknown block at position " + std::to_string(i));
      for (int k = p_ - 1; k >= 0; --k) out.push_back(static_cast<int>((it->second >> k) & 1u));
      s = states_[s].table[it->second].next;
    }
    return out;
  }

 private:
  int p_;
  int q_;
  std::size_t start_;
  std::vector<State> states_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> inverse_;
};

struct BlockEncoderOptions {
  std::uint64_t max_paths = std::uint64_t{1} << 24;  // q-paths enumerated over all states
};

namespace detail {

struct QPath {
  std::uint64_t bits;  // label i at bit q-1-i, so numeric order is lexicographic
  std::size_t end;
};

inline void enumerate_qpaths(const DetGraph& g, std::size_t v, int depth, int q, std::uint64_t bits,
                             std::vector<QPath>& out, std::uint64_t& budget) {
  if (depth == q) {
    if (budget == 0) throw BudgetExceeded("too many q-paths for block encoder synthesis");
    --budget;
    out.push_back({bits, v});
    return;
  }
  for (Symbol s : {Symbol{0}, Symbol{1}}) {
    if (auto to = g.next(v, s)) {
      enumerate_qpaths(g, *to, depth + 1, q, (bits << 1) | static_cast<std::uint64_t>(s), out, budget);
    }
  }
}

}  // namespace detail

/// Throws Infeasible when p/q exceeds the capacity of g or when pruning
/// removes every state.
inline BlockEncoder build_block_encoder(const DetGraph& g, int p, int q, const BlockEncoderOptions& opt = {}) {
  if (g.graph().alphabet_size() != 2) throw DomainError("block encoders need a binary presentation");
  if (p < 1 || q < 1 || p > 20 || q > 62) throw DomainError("need 1 <= p <= 20 and 1 <= q <= 62");
  const double lambda = spectral_radius(g.graph());
  if (lambda <= 0.0 || std::log2(lambda) < static_cast<double>(p) / q) {
    throw Infeasible("rate " + std::to_string(p) + ":" + std::to_string(q) + " exceeds the capacity of the graph");
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<detail::QPath>> paths(n);
  std::uint64_t budget = opt.max_paths;
  for (std::size_t v = 0; v < n; ++v) detail::enumerate_qpaths(g, v, 0, q, 0, paths[v], budget);

  const std::size_t need = std::size_t{1} << p;
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::size_t good = 0;
      for (const auto& path : paths[v]) good += alive[path.end];
      if (good < need) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> index(n, 0);
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) {
      index[v] = kept.size();
      kept.push_back(v);
    }
  }
  if (kept.empty()) {
    throw Infeasible("state pruning leaves no states for rate " + std::to_string(p) + ":" + std::to_string(q));
  }
  std::vector<BlockEncoder::State> states;
  for (std::size_t v : kept) {
    BlockEncoder::State st;
    st.vertex = v;
    for (const auto& path : paths[v]) {
      if (!alive[path.end]) continue;
      BinaryWord block(static_cast<std::size_t>(q));
      for (int i = 0; i < q; ++i) block.set(static_cast<std::size_t>(i), static_cast<int>((path.bits >> (q - 1 - i)) & 1u));
      st.table.push_back({std::move(block), index[path.end]});
      if (st.table.size() == need) break;
    }
    states.push_back(std::move(st));
  }
  return BlockEncoder(p, q, 0, std::move(states));
}

/// Length-prefixed framing: a 32-bit big-endian length, the payload, then
/// zero padding up to a multiple of `multiple`.
inline BinaryWord frame_payload(const BinaryWord& payload, int multiple) {
  if (multiple < 1) throw DomainError("frame multiple must be >= 1");
  if (payload.size() > 0xffffffffu) throw DomainError("payload too long to frame");
  BinaryWord out;
  const auto len = static_cast<std::uint64_t>(payload.size());
  for (int i = 31; i >= 0; --i) out.push_back(static_cast<int>((len >> i) & 1u));
  out.append(payload);
  while (out.size() % static_cast<std::size_t>(multiple) != 0) out.push_back(0);
  return out;
}

inline BinaryWord unframe_payload(const BinaryWord& framed) {
  if (framed.size() < 32) throw CorruptStream("frame shorter than its length header");
  std::uint64_t len = 0;
  for (std::size_t i = 0; i < 32; ++i) len = (len << 1) | static_cast<std::uint64_t>(framed[i]);
  if (len > framed.size() - 32) throw CorruptStream("frame length exceeds the stream");
  return framed.slice(32, static_cast<std::size_t>(len));
}

}  // namespace ghostpulse
