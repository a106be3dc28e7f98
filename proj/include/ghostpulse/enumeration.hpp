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

// Exact counting and generation of constrained words.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "ghostpulse/constraints.hpp"
#include "ghostpulse/count_table.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

/// Closed form for the number of binary words of length n with
/// arithmetic-progression support.
inline std::uint64_t count_b2_closed(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const auto m = static_cast<std::uint64_t>(n);
  return n % 2 == 0 ? (m + 2) * (m + 2) / 4 : (m + 1) * (m + 3) / 4;
}

/// All words of length n whose support is {a + k d} inside [1, n], for
/// (a, d) in [0, n]^2, deduplicated and sorted lexicographically.
inline std::vector<BinaryWord> enum_b2(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<BinaryWord> out;
  for (int a = 0; a <= n; ++a) {
    for (int d = 0; d <= n; ++d) {
      BinaryWord w(static_cast<std::size_t>(n));
      for (int p : ap_support(a, d, n).positions) w.set(static_cast<std::size_t>(p - 1), 1);
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000ull;
  unsigned threads = 1;
  int shard_depth = 8;  // prefix length at which work is split across threads
};

namespace detail {

struct PrefixSearch {
  PrefixSearch(int n, std::uint64_t b, std::size_t len) : n_max(n), budget(b), counts(len, 0) {}

  int n_max;
  std::uint64_t budget;
  std::vector<std::uint64_t> counts;  // counts[m] = surviving prefixes of length m
  std::uint64_t nodes = 0;
  int count_from = 0;  // lengths below this are counted elsewhere
  std::vector<std::vector<Symbol>>* harvest = nullptr;  // collects prefixes at n_max
  std::vector<Symbol> prefix;

  void visit(SignSolver& solver, int depth) {
    if (++nodes > budget) throw BudgetExceeded("prefix search exceeded its node budget");
    if (depth >= count_from) ++counts[static_cast<std::size_t>(depth)];
    if (depth == n_max) {
      if (harvest) harvest->push_back(prefix);
      return;
    }
    for (Symbol b : {Symbol{0}, Symbol{1}}) {
      solver.push(b);
      prefix.push_back(b);
      if (solver.solve()) visit(solver, depth + 1);
      prefix.pop_back();
      solver.pop();
    }
  }
};

}  // namespace detail

/// |B(m)| for m = 1..n_max, where B is the set of binary words admitting a
/// ternary sign assignment that satisfies the (windowed) constraint. Every
/// prefix of such a word is again such a word, so unsatisfiable prefixes are
/// abandoned immediately.
inline CountTable b3_table(int n_max, Window window, const SearchOptions& opt = {}) {
  if (n_max < 1) throw DomainError("n must be >= 1");
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n_max) + 1, 0);
  const int split = std::min(opt.shard_depth, n_max);
  if (opt.threads <= 1 || split == n_max) {
    SignSolver solver(window, opt.node_budget);
    detail::PrefixSearch s(n_max, opt.node_budget, total.size());
    s.visit(solver, 0);
    total = s.counts;
  } else {
    std::vector<std::vector<Symbol>> shards;
    {
      SignSolver solver(window, opt.node_budget);
      detail::PrefixSearch s(split, opt.node_budget, total.size());
      s.harvest = &shards;
      s.visit(solver, 0);
      total = s.counts;
      total.resize(static_cast<std::size_t>(n_max) + 1, 0);
    }
    const unsigned workers = std::min<unsigned>(opt.threads, static_cast<unsigned>(shards.size()));
    std::vector<std::vector<std::uint64_t>> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::vector<std::uint64_t> acc(total.size(), 0);
          for (std::size_t i = w; i < shards.size(); i += workers) {
            SignSolver solver(window, opt.node_budget);
            for (Symbol b : shards[i]) solver.push(b);
            if (!solver.solve()) throw Error("shard prefix lost its sign assignment");
            detail::PrefixSearch s(n_max, opt.node_budget / workers + 1, total.size());
            s.count_from = split + 1;
            s.prefix = shards[i];
            s.visit(solver, split);
            for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += s.counts[m];
          }
          partial[w] = std::move(acc);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& p : partial) {
      for (std::size_t m = 0; m < p.size(); ++m) total[m] += p[m];
    }
  }
  CountTable table;
  for (int m = 1; m <= n_max; ++m) table.add(m, total[static_cast<std::size_t>(m)]);
  return table;
}

inline std::uint64_t count_b3(int n, Window window, const SearchOptions& opt = {}) {
  return b3_table(n, window, opt).at(n);
}

/// Membership bitmap over binary words of length n (bit i = position i+1)
/// of the projections of all words over A_q^n satisfying the constraint,
/// by exhaustive enumeration.
inline std::vector<bool> brute_force_projections(const ConstraintSpec& spec, int n,
                                                 std::uint64_t budget = 43'046'721ull) {
  if (n < 0 || n > 30) throw DomainError("brute force supports 0 <= n <= 30");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(spec.q);
    if (total > budget) throw BudgetExceeded("brute force enumeration exceeds its budget");
  }
  std::vector<bool> hit(std::size_t{1} << n, false);
  if (spec.q == 2) {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (check_gp_window(word_from_mask(mask, n), spec.window)) hit[mask] = true;
    }
    return hit;
  }
  std::vector<Symbol> x(static_cast<std::size_t>(n), -1);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code, mask = 0;
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<Symbol>(static_cast<int>(c % 3) - 1);
      if (c % 3 != 1) mask |= std::uint64_t{1} << i;
      c /= 3;
    }
    if (hit[mask]) continue;
    if (!detail::find_violation(x, spec.window)) hit[mask] = true;
  }
  return hit;
}

inline std::uint64_t count_by_brute_force(const ConstraintSpec& spec, int n,
                                          std::uint64_t budget = 43'046'721ull) {
  const auto hit = brute_force_projections(spec, n, budget);
  return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true));
}

/// Number of binary words of length n with no block from F, by enumeration.
inline std::uint64_t count_avoiding_brute_force(std::span<const BinaryWord> blocks, int n) {
  if (n < 0 || n > 30) throw DomainError("brute force supports 0 <= n <= 30");
  std::uint64_t c = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    c += !contains_forbidden_block(word_from_mask(mask, n), blocks);
  }
  return c;
}

}  // namespace ghostpulse
