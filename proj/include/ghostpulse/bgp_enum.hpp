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

// Enumerative coding into binary words with arithmetic-progression support:
// p = floor(log2 |B2(n)|) payload bits select a word by lexicographic rank.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ghostpulse/constraints.hpp"
#include "ghostpulse/enumeration.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

inline int bgp_enum_payload_bits(int n) {
  return static_cast<int>(std::bit_width(count_b2_closed(n))) - 1;
}

/// Block codec over a fixed block length n. The codebook is the first 2^p
/// words of B2(n) in lexicographic order, so the all-zero word has rank 0.
class BgpEnumCodec {
 public:
  explicit BgpEnumCodec(int n) : n_(n), p_(bgp_enum_payload_bits(n)), book_(enum_b2(n)) {
    if (p_ > 62) throw DomainError("block length too large for enumerative coding");
  }

  int block_length() const noexcept { return n_; }
  int payload_bits() const noexcept { return p_; }

  BinaryWord encode_block(const BinaryWord& bits) const {
    if (static_cast<int>(bits.size()) != p_) throw DomainError("payload block must have exactly p bits");
    std::uint64_t index = 0;
    for (Symbol b : bits) index = (index << 1) | static_cast<std::uint64_t>(b);
    return book_.at(index);
  }

  BinaryWord decode_block(const BinaryWord& w) const {
    if (static_cast<int>(w.size()) != n_) throw CorruptStream("block has the wrong length");
    const auto it = std::lower_bound(book_.begin(), book_.end(), w);
    if (it == book_.end() || *it != w) throw CorruptStream("block does not have arithmetic-progression support");
    const auto rank = static_cast<std::uint64_t>(it - book_.begin());
    if (rank >> p_) throw CorruptStream("block is outside the codebook");
    BinaryWord out(static_cast<std::size_t>(p_));
    for (int i = 0; i < p_; ++i) out.set(static_cast<std::size_t>(i), static_cast<int>((rank >> (p_ - 1 - i)) & 1u));
    return out;
  }

  /// Payload length must be a multiple of p.
  BinaryWord encode(const BinaryWord& payload) const {
    if (p_ == 0 || payload.size() % static_cast<std::size_t>(p_) != 0) {
      throw DomainError("payload length must be a positive multiple of p");
    }
    BinaryWord out;
    for (std::size_t i = 0; i < payload.size(); i += static_cast<std::size_t>(p_)) {
      out.append(encode_block(payload.slice(i, static_cast<std::size_t>(p_))));
    }
    return out;
  }

  BinaryWord decode(const BinaryWord& w) const {
    if (w.size() % static_cast<std::size_t>(n_) != 0) throw CorruptStream("stream length is not a multiple of n");
    BinaryWord out;
    for (std::size_t i = 0; i < w.size(); i += static_cast<std::size_t>(n_)) {
      out.append(decode_block(w.slice(i, static_cast<std::size_t>(n_))));
    }
    return out;
  }

 private:
  int n_;
  int p_;
  std::vector<BinaryWord> book_;
};

inline BinaryWord bgp_enum_encode(const BinaryWord& bits, int n) { return BgpEnumCodec(n).encode_block(bits); }

inline BinaryWord bgp_enum_decode(const BinaryWord& w) {
  if (w.empty()) throw DomainError("empty block");
  if (!check_gp(w)) throw CorruptStream("word violates the binary ghost-pulse constraint");
  return BgpEnumCodec(static_cast<int>(w.size())).decode_block(w);
}

}  // namespace ghostpulse
