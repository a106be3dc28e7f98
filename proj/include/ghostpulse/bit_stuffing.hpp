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

// (t,inf) bit stuffing: t zeros are inserted after every one. With the
// transform enabled, the fair payload is first mapped to a stream of
// Bernoulli(p0) symbols by running an arithmetic decoder on it, which lets
// the stuffed output approach the capacity of the run-length constraint.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ghostpulse/capacity.hpp"
#include "ghostpulse/constraints.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

/// Probability of a zero that maximizes h(p0) / (1 + t (1 - p0)).
inline double optimal_stuffing_bias(int t) { return 1.0 - std::pow(rho_t(t), -(t + 1)); }

/// Rate of bit stuffing a Bernoulli(p0) stream with t zeros per one.
inline double stuffing_rate(int t, double p0) {
  const double h = -p0 * std::log2(p0) - (1 - p0) * std::log2(1 - p0);
  return h / (1.0 + t * (1.0 - p0));
}

struct StuffConfig {
  int t = 1;
  double bias = 0.5;  // probability of a zero in the transformed stream
  int precision_bits = 48;
  bool transform = true;

  static StuffConfig optimal(int t) { return {t, optimal_stuffing_bias(t), 48, true}; }

  void validate() const {
    if (t < 1) throw DomainError("t must be >= 1");
    if (!(bias > 0.0 && bias < 1.0)) throw DomainError("bias must lie in (0, 1)");
    if (precision_bits < 8 || precision_bits > 62) throw DomainError("precision must be in [8, 62] bits");
  }
};

namespace detail {

constexpr int kBiasBits = 32;
__extension__ using u128 = unsigned __int128;

inline std::uint64_t quantized_bias(double p0) {
  const auto q = static_cast<std::uint64_t>(std::llround(p0 * static_cast<double>(std::uint64_t{1} << kBiasBits)));
  return std::clamp<std::uint64_t>(q, 1, (std::uint64_t{1} << kBiasBits) - 1);
}

/// Width of the zero subinterval of a range of width r.
inline std::uint64_t zero_width(std::uint64_t r, std::uint64_t p0q) {
  const auto w = static_cast<std::uint64_t>((static_cast<u128>(r) * p0q) >> kBiasBits);
  return std::clamp<std::uint64_t>(w, 1, r - 1);
}

inline void append_gamma(std::vector<Symbol>& out, std::uint64_t v) {
  const int width = static_cast<int>(std::bit_width(v));
  for (int i = 1; i < width; ++i) out.push_back(0);
  for (int i = width - 1; i >= 0; --i) out.push_back(static_cast<Symbol>((v >> i) & 1u));
}

/// Fair bits to biased symbols. The bits s are read as the dyadic interval
/// J = [0.s, 0.s + 2^-L); symbols are emitted until their interval lies in J.
inline std::vector<Symbol> to_biased(const std::vector<Symbol>& s, double p0, int precision) {
  const std::uint64_t p0q = quantized_bias(p0);
  const auto len = static_cast<std::int64_t>(s.size());
  // Target point v = 0.s1, the midpoint of J.
  auto bit = [&](std::int64_t j) -> std::uint64_t {
    if (j <= len) return static_cast<std::uint64_t>(s[static_cast<std::size_t>(j - 1)]);
    return j == len + 1 ? 1u : 0u;
  };
  const std::uint64_t half = std::uint64_t{1} << (precision - 1);
  std::uint64_t r = std::uint64_t{1} << precision;
  std::int64_t scale = precision;
  std::uint64_t d = 0;
  for (std::int64_t j = 1; j <= precision; ++j) d = (d << 1) | bit(j);
  std::vector<Symbol> out;
  auto inside = [&] {
    const std::int64_t e = scale - len - 1;
    if (e < 0) return false;
    if (e >= 63) return true;
    const std::uint64_t lim = std::uint64_t{1} << e;
    return d <= lim && r - d <= lim;
  };
  while (!inside()) {
    const std::uint64_t r0 = zero_width(r, p0q);
    if (d < r0) {
      out.push_back(0);
      r = r0;
    } else {
      out.push_back(1);
      d -= r0;
      r -= r0;
    }
    while (r < half) {
      r <<= 1;
      ++scale;
      d = (d << 1) | bit(scale);
    }
  }
  return out;
}

/// Biased symbols back to the lower end of their interval, as fraction bits.
inline std::vector<Symbol> interval_low(const std::vector<Symbol>& sym, double p0, int precision) {
  const std::uint64_t p0q = quantized_bias(p0);
  const std::uint64_t half = std::uint64_t{1} << (precision - 1);
  std::uint64_t r = std::uint64_t{1} << precision;
  std::size_t scale = static_cast<std::size_t>(precision);
  std::vector<Symbol> low(scale + 1, 0);  // low[j] = fraction bit j; low[0] unused
  for (Symbol x : sym) {
    const std::uint64_t r0 = zero_width(r, p0q);
    if (x == 0) {
      r = r0;
    } else {
      // low += r0 * 2^-scale
      std::uint64_t add = r0;
      std::size_t j = scale;
      int carry = 0;
      while (add || carry) {
        if (j == 0) throw CorruptStream("interval overflow in distribution transform");
        const int v = low[j] + static_cast<int>(add & 1u) + carry;
        low[j] = static_cast<Symbol>(v & 1);
        carry = v >> 1;
        add >>= 1;
        --j;
      }
      r -= r0;
    }
    while (r < half) {
      r <<= 1;
      ++scale;
      low.push_back(0);
    }
  }
  return low;
}

}  // namespace detail

/// Inserts t zeros after every one.
inline BinaryWord stuff(const BinaryWord& y, int t) {
  std::vector<Symbol> out;
  for (Symbol b : y) {
    out.push_back(b);
    if (b) out.insert(out.end(), static_cast<std::size_t>(t), 0);
  }
  return BinaryWord(std::move(out));
}

/// Removes the t zeros after every one; throws if any are missing.
inline BinaryWord unstuff(const BinaryWord& w, int t) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[i]);
    if (!w[i]) continue;
    for (int k = 1; k <= t; ++k) {
      if (i + static_cast<std::size_t>(k) >= w.size() || w[i + static_cast<std::size_t>(k)] != 0) {
        throw CorruptStream("a one is followed by fewer than t zeros");
      }
    }
    i += static_cast<std::size_t>(t);
  }
  return BinaryWord(std::move(out));
}

/// Transformed stream: arithmetic-decode gamma(L + 1) followed by the L
/// payload bits, so the decoder can recover L.
inline BinaryWord bit_stuff_encode(const BinaryWord& payload, const StuffConfig& cfg) {
  cfg.validate();
  if (!cfg.transform) return stuff(payload, cfg.t);
  std::vector<Symbol> s;
  detail::append_gamma(s, payload.size() + 1);
  s.insert(s.end(), payload.begin(), payload.end());
  return stuff(BinaryWord(detail::to_biased(s, cfg.bias, cfg.precision_bits)), cfg.t);
}

inline BinaryWord bit_stuff_decode(const BinaryWord& w, const StuffConfig& cfg) {
  cfg.validate();
  const BinaryWord biased = unstuff(w, cfg.t);
  if (!cfg.transform) return biased;
  const std::vector<Symbol> sym(biased.begin(), biased.end());
  const std::vector<Symbol> low = detail::interval_low(sym, cfg.bias, cfg.precision_bits);
  std::size_t j = 1;
  int zeros = 0;
  while (j < low.size() && low[j] == 0) {
    ++zeros;
    ++j;
  }
  if (zeros > 40) throw CorruptStream("bad length header");
  std::uint64_t len1 = 0;
  for (int i = 0; i <= zeros; ++i, ++j) {
    if (j >= low.size()) throw CorruptStream("truncated length header");
    len1 = (len1 << 1) | static_cast<std::uint64_t>(low[j]);
  }
  const std::uint64_t len = len1 - 1;
  if (j + len > low.size()) throw CorruptStream("truncated payload");
  return BinaryWord(std::vector<Symbol>(low.begin() + static_cast<std::ptrdiff_t>(j),
                                        low.begin() + static_cast<std::ptrdiff_t>(j + len)));
}

}  // namespace ghostpulse
