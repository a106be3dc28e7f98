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

// Sign assignments that lift binary words to ternary words satisfying the
// windowed ternary constraint: alternating signs for window 1, and the
// run-by-run map Psi for window 2 on words avoiding F(2).

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ghostpulse/block_encoder.hpp"
#include "ghostpulse/capacity.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

/// The i-th one of y gets sign + for odd i and - for even i.
inline TernaryWord tgp1_encode(const BinaryWord& y) {
  std::vector<Symbol> out(y.size(), 0);
  Symbol s = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i]) {
      out[i] = s;
      s = static_cast<Symbol>(-s);
    }
  }
  return TernaryWord(std::move(out));
}

inline BinaryWord tgp1_decode(const TernaryWord& x) { return abs_project(x); }

/// Sign word for a run of j ones.
inline TernaryWord psi_run(int j) {
  if (j < 1) throw DomainError("run length must be >= 1");
  static const char* const kShort[] = {"", "+", "+-", "+-+", "+--+", "+-++-", "+--++-"};
  if (j <= 6) return TernaryWord::parse(kShort[j]);
  return TernaryWord::parse("+--" + std::string(static_cast<std::size_t>(j - 6), '+') + "--+");
}

/// Psi(y). Runs are signed left to right; each run starts with the sign
/// opposite to the last symbol of the previous run, except where a short
/// run of 3 or 5 ones would otherwise create a ghost.
inline TernaryWord tgp2_sign_assign(const BinaryWord& y) {
  bool all_zero = true, all_one = true;
  for (Symbol b : y) {
    all_zero &= b == 0;
    all_one &= b == 1;
  }
  if (all_zero || all_one) return as_ternary(y);
  const RunDecomposition d = run_decompose(y);
  const std::size_t r = d.runs.size();
  std::vector<Symbol> out(static_cast<std::size_t>(d.leading_zeros), 0);
  Symbol last = 0;
  for (std::size_t i = 1; i <= r; ++i) {
    const Run& run = d.runs[i - 1];
    TernaryWord x;
    if (i == 1 && d.leading_zeros == 0) {
      x = run.ones == 3 ? TernaryWord::parse("++-") : psi_run(run.ones);
    } else {
      // A first run after leading zeros is signed as if it followed a run
      // ending in -, so the two exceptions below cover it too.
      const bool prev_minus = i == 1 || last < 0;
      if (run.ones == 5 && run.zeros <= 1) {
        x = TernaryWord::parse(prev_minus ? "+--+-" : "-++-+");
      } else if (i == r && run.zeros == 0 && run.ones == 3) {
        x = TernaryWord::parse(prev_minus ? "+--" : "-++");
      } else {
        x = prev_minus ? psi_run(run.ones) : -psi_run(run.ones);
      }
    }
    out.insert(out.end(), x.begin(), x.end());
    last = out.back();
    out.insert(out.end(), static_cast<std::size_t>(run.zeros), 0);
  }
  return TernaryWord(std::move(out));
}

/// Payload -> rate p:q block code into words avoiding F(2) -> Psi.
class Tgp2Codec {
 public:
  Tgp2Codec(int p = 9, int q = 10) : encoder_(build_block_encoder(f2_shannon_cover(), p, q)) {}

  const BlockEncoder& encoder() const noexcept { return encoder_; }
  int p() const noexcept { return encoder_.p(); }
  int q() const noexcept { return encoder_.q(); }

  /// Payload length must be a multiple of p.
  TernaryWord encode(const BinaryWord& payload) const { return tgp2_sign_assign(encoder_.encode(payload)); }
  BinaryWord decode(const TernaryWord& x) const { return encoder_.decode(abs_project(x)); }
  BinaryWord decode(const BinaryWord& y) const { return encoder_.decode(y); }

 private:
  BlockEncoder encoder_;
};

/// Shared codec at rate 9:10, falling back to 8:10 if the pruning fails.
inline const Tgp2Codec& default_tgp2_codec() {
  static const Tgp2Codec codec = [] {
    try {
      return Tgp2Codec(9, 10);
    } catch (const Infeasible&) {
      return Tgp2Codec(8, 10);
    }
  }();
  return codec;
}

inline TernaryWord tgp2_full_encode(const BinaryWord& payload) { return default_tgp2_codec().encode(payload); }
inline BinaryWord tgp2_full_decode(const TernaryWord& x) { return default_tgp2_codec().decode(x); }
inline BinaryWord tgp2_full_decode(const BinaryWord& y) { return default_tgp2_codec().decode(y); }

}  // namespace ghostpulse
