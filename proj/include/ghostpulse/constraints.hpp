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

// Decision procedures for the ghost-pulse constraints.
//
// A word x of length n violates the constraint when there are positions
// k, l, m in its support with x_k = x_l = x_m such that p = k + l - m lies in
// [1, n] and x_p = 0. The windowed variant only looks at triples whose
// pairwise distances are all at most t. Over the binary alphabet every
// support symbol is equal, so the same code serves both alphabets.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghostpulse/error.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

/// Interaction window: either unbounded or a positive integer t.
class Window {
 public:
  static constexpr Window unbounded() { return Window(0); }
  static Window of(int t) {
    if (t < 1) throw DomainError("window t must be >= 1");
    return Window(t);
  }

  constexpr bool bounded() const noexcept { return t_ > 0; }
  int t() const {
    if (!bounded()) throw DomainError("unbounded window has no t");
    return t_;
  }
  std::string str() const { return bounded() ? std::to_string(t_) : "unbounded"; }

  friend constexpr bool operator==(Window, Window) = default;

 private:
  constexpr explicit Window(int t) : t_(t) {}
  int t_;
};

/// Alphabet size q and window of a ghost-pulse constraint.
struct ConstraintSpec {
  int q = 2;
  Window window = Window::unbounded();

  ConstraintSpec() = default;
  ConstraintSpec(int q_, Window w) : q(q_), window(w) {
    if (q != 2 && q != 3) throw DomainError("alphabet size must be 2 or 3");
  }
};

/// A violating triple; `target` = k + l - m is a zero inside the word.
struct Triple {
  int k = 0;
  int l = 0;
  int m = 0;
  int target = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

namespace detail {

inline std::vector<int> support_positions(std::span<const Symbol> x) {
  std::vector<int> s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) s.push_back(static_cast<int>(i + 1));
  }
  return s;
}

/// First violating triple in (k, l, m) lexicographic order over the support.
inline std::optional<Triple> find_violation(std::span<const Symbol> x, Window window) {
  const int n = static_cast<int>(x.size());
  const std::vector<int> s = support_positions(x);
  auto sym = [&](int pos) { return x[static_cast<std::size_t>(pos - 1)]; };

  if (!window.bounded()) {
    for (int k : s) {
      for (int l : s) {
        if (sym(l) != sym(k)) continue;
        for (int m : s) {
          if (sym(m) != sym(k)) continue;
          const int p = k + l - m;
          if (p >= 1 && p <= n && sym(p) == 0) return Triple{k, l, m, p};
        }
      }
    }
    return std::nullopt;
  }

  const int t = window.t();
  for (std::size_t a = 0; a < s.size(); ++a) {
    const int k = s[a];
    auto lo = std::lower_bound(s.begin(), s.end(), k - t);
    auto hi = std::upper_bound(s.begin(), s.end(), k + t);
    for (auto il = lo; il != hi; ++il) {
      const int l = *il;
      if (sym(l) != sym(k)) continue;
      for (auto im = lo; im != hi; ++im) {
        const int m = *im;
        if (sym(m) != sym(k) || std::abs(l - m) > t) continue;
        const int p = k + l - m;
        if (p >= 1 && p <= n && sym(p) == 0) return Triple{k, l, m, p};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

template <AnyWord W>
std::optional<Triple> find_violation(const W& x, Window window) {
  return detail::find_violation(x.symbols(), window);
}

/// Unbounded ghost-pulse constraint (BGP over binary words, TGP over ternary).
template <AnyWord W>
bool check_gp(const W& x) {
  return !detail::find_violation(x.symbols(), Window::unbounded());
}

/// Windowed constraint: only triples with pairwise distances <= t count.
template <AnyWord W>
bool check_gp_t(const W& x, int t) {
  return !detail::find_violation(x.symbols(), Window::of(t));
}

template <AnyWord W>
bool check_gp_window(const W& x, Window window) {
  return !detail::find_violation(x.symbols(), window);
}

/// (t, infinity) run-length constraint: at least t zeros between any two ones.
inline bool check_rll(const BinaryWord& y, int t) {
  if (t < 0) throw DomainError("rll parameter must be nonnegative");
  long last = -1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    const long pos = static_cast<long>(i);
    if (last >= 0 && pos - last - 1 < t) return false;
    last = pos;
  }
  return true;
}

/// Parameters of the arithmetic progression (a + dZ) intersected with [n].
struct ApWitness {
  int a = 0;
  int d = 0;
  friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

/// Positions of (a + dZ) within [1, n]; d = 0 denotes the single point {a}.
inline Support ap_support(int a, int d, int n) {
  Support s;
  if (d == 0) {
    if (a >= 1 && a <= n) s.positions.push_back(a);
    return s;
  }
  int first = a % d;
  if (first <= 0) first += d;
  for (int p = first; p <= n; p += d) s.positions.push_back(p);
  return s;
}

/// Some (a, d) in [0, n]^2 whose progression is exactly the support of y.
inline std::optional<ApWitness> ap_support_witness(const BinaryWord& y) {
  const int n = static_cast<int>(y.size());
  const Support s = support(y);
  if (s.empty()) return ApWitness{0, 0};
  if (s.size() == 1) return ApWitness{s.positions[0], 0};
  // Any progression through the support has the minimal gap as its step.
  int d = n;
  for (std::size_t i = 1; i < s.size(); ++i) {
    d = std::min(d, s.positions[i] - s.positions[i - 1]);
  }
  const ApWitness w{s.positions[0] % d, d};
  if (ap_support(w.a, w.d, n) == s) return w;
  return std::nullopt;
}

inline bool contains_block(const BinaryWord& y, const BinaryWord& block) {
  if (block.size() > y.size()) return false;
  const auto hay = y.symbols();
  const auto needle = block.symbols();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

inline bool contains_forbidden_block(const BinaryWord& y, std::span<const BinaryWord> blocks) {
  return std::any_of(blocks.begin(), blocks.end(),
                     [&](const BinaryWord& b) { return contains_block(y, b); });
}

/// The forbidden blocks characterizing the binary projections of TGP(2).
inline const std::vector<BinaryWord>& f2_blocks() {
  static const std::vector<BinaryWord> blocks = {
      BinaryWord::parse("011100"),
      BinaryWord::parse("001110"),
      BinaryWord::parse("001111100"),
  };
  return blocks;
}

/// Windowed binary membership via the RLL-or-short-progression characterization.
inline bool in_b2t_characterized(const BinaryWord& y, int t) {
  if (t < 1) throw DomainError("window t must be >= 1");
  if (check_rll(y, t)) return true;
  const int n = static_cast<int>(y.size());
  const Support s = support(y);
  for (int d = 0; d <= t; ++d) {
    for (int a = 0; a <= t; ++a) {
      if (ap_support(a, d, n) == s) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Sign assignment search.
//
// With the zero pattern fixed by a binary word y, the ternary constraint
// reduces to clauses over the signs of the ones: for every triple (k, l, m)
// of ones whose target k + l - m is a zero inside the word, the signs at
// k, l, m must not all be equal. Clauses with k == l involve two variables.

class SignSolver {
 public:
  struct Clause {
    int vars[3];
    int arity;
  };

  explicit SignSolver(Window window, std::uint64_t node_budget = 1'000'000'000ull)
      : window_(window), budget_(node_budget) {}

  /// Appends one symbol of the binary word and records the clauses it creates.
  void push(Symbol bit) {
    frames_.push_back({clauses_by_last_.size(), ones_.size(), word_.size()});
    const int pos = static_cast<int>(word_.size()) + 1;
    word_.push_back(bit);
    var_of_.push_back(-1);
    if (bit) {
      var_of_.back() = static_cast<int>(ones_.size());
      ones_.push_back(pos);
      clauses_by_last_.emplace_back();
      add_clauses_for_new_one(pos);
    } else {
      add_clauses_for_new_zero(pos);
    }
  }

  void pop() {
    const Frame f = frames_.back();
    frames_.pop_back();
    // Clauses added for a new zero attach to existing variables.
    for (auto& lst : clauses_by_last_) {
      while (!lst.empty() && lst.back().stamp >= f.word_size) lst.pop_back();
    }
    clauses_by_last_.resize(f.vars);
    ones_.resize(f.ones);
    word_.resize(f.word_size);
    var_of_.resize(f.word_size);
    if (signs_.size() > ones_.size()) signs_.resize(ones_.size());
  }

  std::size_t size() const noexcept { return word_.size(); }

  /// Finds a sign for every one satisfying all clauses. Reuses the last
  /// solution as a warm start when it is still consistent.
  bool solve() {
    const std::size_t nv = ones_.size();
    if (nv == 0) {
      signs_.clear();
      return true;
    }
    if (signs_.size() + 1 >= nv && warm_start(nv)) return true;
    signs_.assign(nv, 0);
    signs_[0] = 1;  // global sign flip symmetry
    if (!consistent(0)) return false;
    return search(1);
  }

  TernaryWord assignment() const {
    std::vector<Symbol> out(word_.size(), 0);
    for (std::size_t v = 0; v < ones_.size(); ++v) {
      out[static_cast<std::size_t>(ones_[v] - 1)] = signs_[v];
    }
    return TernaryWord(std::move(out));
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct StampedClause {
    Clause clause;
    std::size_t stamp;  // word length before the push that created it
  };
  struct Frame {
    std::size_t vars;
    std::size_t ones;
    std::size_t word_size;
  };

  bool in_window(int a, int b, int c) const {
    if (!window_.bounded()) return true;
    const int t = window_.t();
    return std::abs(a - b) <= t && std::abs(b - c) <= t && std::abs(a - c) <= t;
  }

  void add_clause(int k, int l, int m) {
    int vs[3] = {var_of_[static_cast<std::size_t>(k - 1)], var_of_[static_cast<std::size_t>(l - 1)],
                 var_of_[static_cast<std::size_t>(m - 1)]};
    std::sort(vs, vs + 3);
    Clause c{};
    c.arity = 0;
    for (int v : vs) {
      if (c.arity == 0 || c.vars[c.arity - 1] != v) c.vars[c.arity++] = v;
    }
    const int last = c.vars[c.arity - 1];
    clauses_by_last_[static_cast<std::size_t>(last)].push_back({c, word_.size() - 1});
  }

  // New one at `pos`: triples containing pos whose target is an existing zero.
  void add_clauses_for_new_one(int pos) {
    const int n = pos;
    auto zero_at = [&](int p) { return p >= 1 && p <= n && word_[static_cast<std::size_t>(p - 1)] == 0; };
    for (int u : ones_) {
      for (int v : ones_) {
        // (pos, u, v): target pos + u - v; (u, v, pos): target u + v - pos.
        if (in_window(pos, u, v)) {
          if (zero_at(pos + u - v)) add_clause(pos, u, v);
          if (zero_at(u + v - pos)) add_clause(u, v, pos);
        }
      }
    }
  }

  // New zero at `pos`: triples of existing ones whose target is pos.
  void add_clauses_for_new_zero(int pos) {
    for (int k : ones_) {
      for (int l : ones_) {
        if (l < k) continue;  // k + l - m is symmetric in k, l
        const int m = k + l - pos;
        if (m < 1 || m >= pos || word_[static_cast<std::size_t>(m - 1)] == 0) continue;
        if (in_window(k, l, m)) add_clause(k, l, m);
      }
    }
  }

  bool violated(const Clause& c) const {
    const Symbol s = signs_[static_cast<std::size_t>(c.vars[0])];
    for (int i = 1; i < c.arity; ++i) {
      if (signs_[static_cast<std::size_t>(c.vars[i])] != s) return false;
    }
    return true;
  }

  bool consistent(std::size_t v) const {
    for (const auto& sc : clauses_by_last_[v]) {
      if (violated(sc.clause)) return false;
    }
    return true;
  }

  bool warm_start(std::size_t nv) {
    if (std::find(signs_.begin(), signs_.end(), Symbol{0}) != signs_.end()) return false;
    if (signs_.size() < nv) signs_.push_back(static_cast<Symbol>(signs_.empty() ? 1 : -signs_.back()));
    for (std::size_t v = 0; v < nv; ++v) {
      if (!consistent(v)) {
        if (v + 1 == nv && signs_.size() == nv) {
          signs_[v] = static_cast<Symbol>(-signs_[v]);
          if (consistent(v)) return true;
        }
        return false;
      }
    }
    return true;
  }

  bool search(std::size_t v) {
    if (v == ones_.size()) return true;
    if (++nodes_ > budget_) throw BudgetExceeded("sign assignment search exceeded its node budget");
    const Symbol first = static_cast<Symbol>(-signs_[v - 1]);
    for (Symbol s : {first, static_cast<Symbol>(-first)}) {
      signs_[v] = s;
      if (consistent(v) && search(v + 1)) return true;
    }
    signs_[v] = 0;
    return false;
  }

  Window window_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Symbol> word_;
  std::vector<int> var_of_;
  std::vector<int> ones_;
  std::vector<std::vector<StampedClause>> clauses_by_last_;
  std::vector<Symbol> signs_;
  std::vector<Frame> frames_;
};

/// Ternary sign assignment of y satisfying the (windowed) ternary constraint,
/// or nullopt if none exists.
inline std::optional<TernaryWord> in_b3_membership(const BinaryWord& y, Window window,
                                                   std::uint64_t node_budget = 1'000'000'000ull) {
  SignSolver solver(window, node_budget);
  for (Symbol b : y) solver.push(b);
  if (!solver.solve()) return std::nullopt;
  return solver.assignment();
}

}  // namespace ghostpulse
