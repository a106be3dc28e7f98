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

// Finite words over the binary alphabet {0,1} and the ternary alphabet
// {-1,0,+1}, their supports, the absolute-value projection, and the
// maximal-run form of binary words.
//
// Positions exposed through Support, Triple and friends are 1-based; the
// symbol storage itself is an ordinary 0-based vector.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghostpulse/error.hpp"

namespace ghostpulse {

using Symbol = std::int8_t;

struct BinaryAlphabet {
  static constexpr int size = 2;
  static constexpr bool contains(int v) { return v == 0 || v == 1; }
  static constexpr char to_char(Symbol s) { return s == 0 ? '0' : '1'; }
  static constexpr std::optional<Symbol> from_char(char c) {
    if (c == '0') return Symbol{0};
    if (c == '1') return Symbol{1};
    return std::nullopt;
  }
};

struct TernaryAlphabet {
  static constexpr int size = 3;
  static constexpr bool contains(int v) { return v == -1 || v == 0 || v == 1; }
  static constexpr char to_char(Symbol s) { return s == 0 ? '0' : (s > 0 ? '+' : '-'); }
  static constexpr std::optional<Symbol> from_char(char c) {
    if (c == '0') return Symbol{0};
    if (c == '+') return Symbol{1};
    if (c == '-') return Symbol{-1};
    return std::nullopt;
  }
};

template <class Alphabet>
class Word {
 public:
  using alphabet = Alphabet;
  using value_type = Symbol;
  using const_iterator = std::vector<Symbol>::const_iterator;

  Word() = default;
  explicit Word(std::size_t n) : symbols_(n, 0) {}

  Word(std::initializer_list<int> init) {
    symbols_.reserve(init.size());
    for (int v : init) push_back(v);
  }

  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
      if (!Alphabet::contains(s)) throw DomainError("symbol outside the alphabet");
    }
  }

  /// Parses the ASCII form ('0'/'1' for binary, '-'/'0'/'+' for ternary).
  static Word parse(std::string_view text) {
    Word w;
    w.symbols_.reserve(text.size());
    for (char c : text) {
      auto s = Alphabet::from_char(c);
      if (!s) throw ParseError(std::string("invalid symbol '") + c + "' in word");
      w.symbols_.push_back(*s);
    }
    return w;
  }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(Alphabet::to_char(s));
    return out;
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  /// 1-based access, matching the position convention of supports.
  Symbol at1(std::size_t pos) const { return symbols_.at(pos - 1); }

  void set(std::size_t i, int v) {
    if (!Alphabet::contains(v)) throw DomainError("symbol outside the alphabet");
    symbols_.at(i) = static_cast<Symbol>(v);
  }
  void push_back(int v) {
    if (!Alphabet::contains(v)) throw DomainError("symbol outside the alphabet");
    symbols_.push_back(static_cast<Symbol>(v));
  }
  void append(const Word& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  }
  void pop_back() { symbols_.pop_back(); }
  void clear() noexcept { symbols_.clear(); }

  Word slice(std::size_t first, std::size_t count) const {
    Word out;
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return out;
  }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }

  Word operator-() const requires(Alphabet::size == 3) {
    Word out = *this;
    for (Symbol& s : out.symbols_) s = static_cast<Symbol>(-s);
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

using BinaryWord = Word<BinaryAlphabet>;
using TernaryWord = Word<TernaryAlphabet>;

template <class W>
concept AnyWord = std::same_as<W, BinaryWord> || std::same_as<W, TernaryWord>;

/// Positions of the nonzero symbols, 1-based and strictly increasing.
struct Support {
  std::vector<int> positions;

  std::size_t size() const noexcept { return positions.size(); }
  bool empty() const noexcept { return positions.empty(); }
  friend bool operator==(const Support&, const Support&) = default;
};

template <AnyWord W>
Support support(const W& w) {
  Support s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) s.positions.push_back(static_cast<int>(i + 1));
  }
  return s;
}

/// Component-wise absolute value: 0 -> 0, +-1 -> 1.
inline BinaryWord abs_project(const TernaryWord& x) {
  std::vector<Symbol> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] != 0 ? 1 : 0;
  return BinaryWord(std::move(out));
}

inline BinaryWord abs_project(const BinaryWord& y) { return y; }

/// Lifts a binary word to the ternary alphabet with every one read as +1.
inline TernaryWord as_ternary(const BinaryWord& y) {
  return TernaryWord(std::vector<Symbol>(y.begin(), y.end()));
}

inline BinaryWord zeros(std::size_t n) { return BinaryWord(n); }

inline BinaryWord ones(std::size_t n) {
  return BinaryWord(std::vector<Symbol>(n, 1));
}

struct Run {
  int ones = 0;   // b_i >= 1
  int zeros = 0;  // a_i, >= 1 except possibly for the last run
  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal-run form 0^{a0} 1^{b1} 0^{a1} ... 1^{br} 0^{ar}.
struct RunDecomposition {
  int leading_zeros = 0;  // a0
  std::vector<Run> runs;
  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

/// Throws NoRunForm for the empty and the all-zero word.
inline RunDecomposition run_decompose(const BinaryWord& y) {
  RunDecomposition d;
  std::size_t i = 0;
  const std::size_t n = y.size();
  while (i < n && y[i] == 0) ++i;
  if (i == n) throw NoRunForm();
  d.leading_zeros = static_cast<int>(i);
  while (i < n) {
    Run r;
    while (i < n && y[i] == 1) { ++r.ones; ++i; }
    while (i < n && y[i] == 0) { ++r.zeros; ++i; }
    d.runs.push_back(r);
  }
  return d;
}

inline BinaryWord run_compose(const RunDecomposition& d) {
  std::vector<Symbol> out(static_cast<std::size_t>(d.leading_zeros), 0);
  for (const Run& r : d.runs) {
    out.insert(out.end(), static_cast<std::size_t>(r.ones), 1);
    out.insert(out.end(), static_cast<std::size_t>(r.zeros), 0);
  }
  return BinaryWord(std::move(out));
}

/// Bit i of `mask` becomes position i+1 of the word.
inline BinaryWord word_from_mask(std::uint64_t mask, int n) {
  std::vector<Symbol> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return BinaryWord(std::move(out));
}

inline std::uint64_t mask_from_word(const BinaryWord& y) {
  if (y.size() > 64) throw DomainError("word longer than 64 symbols has no mask form");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

}  // namespace ghostpulse

template <class A>
struct std::hash<ghostpulse::Word<A>> {
  std::size_t operator()(const ghostpulse::Word<A>& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto s : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint8_t>(s) + 1);
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};
