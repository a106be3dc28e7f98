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

// Labeled directed graphs as presentations of constrained systems: the
// words of a system are the label sequences of finite paths. Everything a
// capacity computation needs lives here: forbidden-block automata, the
// sliding-window graph of the windowed ternary constraint, absolute-value
// projection, subset construction, essential trimming, follower-set
// minimization, spectral radius and exact characteristic polynomials.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ghostpulse/constraints.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/polynomial.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

struct Arc {
  Symbol label = 0;
  std::size_t to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  Symbol label = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed graph with edges labeled by symbols of one alphabet
/// (binary {0,1} or ternary {-1,0,1}). Vertex ids are dense indices.
class LabeledGraph {
 public:
  explicit LabeledGraph(int alphabet_size = 2) : alphabet_size_(alphabet_size) {
    if (alphabet_size != 2 && alphabet_size != 3) throw DomainError("alphabet size must be 2 or 3");
  }

  int alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept {
    std::size_t e = 0;
    for (const auto& o : out_) e += o.size();
    return e;
  }

  std::size_t add_vertex(std::string name = {}) {
    out_.emplace_back();
    names_.push_back(name.empty() ? std::to_string(out_.size() - 1) : std::move(name));
    return out_.size() - 1;
  }

  void add_edge(std::size_t from, std::size_t to, Symbol label) {
    if (from >= vertex_count() || to >= vertex_count()) throw DomainError("edge endpoint is not a vertex");
    if (!label_allowed(label)) throw DomainError("edge label outside the alphabet");
    out_[from].push_back({label, to});
  }

  const std::vector<Arc>& out(std::size_t v) const { return out_.at(v); }
  const std::string& name(std::size_t v) const { return names_.at(v); }

  std::vector<Edge> edges() const {
    std::vector<Edge> e;
    for (std::size_t v = 0; v < out_.size(); ++v) {
      for (const Arc& a : out_[v]) e.push_back({v, a.to, a.label});
    }
    return e;
  }

  /// Labels in alphabet order: {0,1} or {-1,0,1}.
  std::vector<Symbol> labels() const {
    if (alphabet_size_ == 2) return {0, 1};
    return {-1, 0, 1};
  }

  bool label_allowed(Symbol s) const noexcept {
    return alphabet_size_ == 2 ? (s == 0 || s == 1) : (s >= -1 && s <= 1);
  }

  bool is_deterministic() const {
    for (const auto& o : out_) {
      for (std::size_t i = 0; i < o.size(); ++i) {
        for (std::size_t j = i + 1; j < o.size(); ++j) {
          if (o[i].label == o[j].label) return false;
        }
      }
    }
    return true;
  }

 private:
  int alphabet_size_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::string> names_;
};

/// LabeledGraph whose out-edges at every vertex carry distinct labels.
class DetGraph {
 public:
  DetGraph() = default;
  explicit DetGraph(LabeledGraph g) : g_(std::move(g)) {
    if (!g_.is_deterministic()) throw DomainError("graph is not deterministic");
  }

  const LabeledGraph& graph() const noexcept { return g_; }
  std::size_t vertex_count() const noexcept { return g_.vertex_count(); }

  std::optional<std::size_t> next(std::size_t v, Symbol label) const {
    for (const Arc& a : g_.out(v)) {
      if (a.label == label) return a.to;
    }
    return std::nullopt;
  }

 private:
  LabeledGraph g_;
};

/// Square nonnegative integer matrix; entry (i, j) counts edges i -> j.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> entries;  // row-major

  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t dim) : n(dim), entries(dim * dim, 0) {}
  AdjacencyMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : n(rows.size()) {
    for (const auto& r : rows) {
      if (r.size() != n) throw DomainError("adjacency matrix must be square");
      entries.insert(entries.end(), r.begin(), r.end());
    }
  }

  std::int64_t& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

  static AdjacencyMatrix identity(std::size_t dim) {
    AdjacencyMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline AdjacencyMatrix adjacency(const LabeledGraph& g) {
  AdjacencyMatrix m(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const Arc& a : g.out(v)) ++m.at(v, a.to);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Forbidden-block automata.

/// Deterministic presentation of the binary words avoiding every block in F.
/// States are the longest suffixes of the word read so far that are proper
/// prefixes of some forbidden block; the empty suffix is named "e".
inline DetGraph forbidden_block_presentation(std::span<const BinaryWord> blocks) {
  if (blocks.empty()) throw DomainError("forbidden set must be nonempty");
  std::vector<std::string> forbidden;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("forbidden blocks must be nonempty");
    forbidden.push_back(b.str());
  }
  auto is_forbidden = [&](const std::string& s) {
    return std::find(forbidden.begin(), forbidden.end(), s) != forbidden.end();
  };
  auto is_prefix = [&](const std::string& s) {
    return std::any_of(forbidden.begin(), forbidden.end(), [&](const std::string& f) {
      return s.size() < f.size() && f.compare(0, s.size(), s) == 0;
    });
  };

  LabeledGraph g(2);
  std::map<std::string, std::size_t> id;
  std::deque<std::string> work;
  auto intern = [&](const std::string& s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    const std::size_t v = g.add_vertex(s.empty() ? "e" : s);
    id.emplace(s, v);
    work.push_back(s);
    return v;
  };
  intern("");
  while (!work.empty()) {
    const std::string s = work.front();
    work.pop_front();
    const std::size_t from = id.at(s);
    for (char c : {'0', '1'}) {
      const std::string ext = s + c;
      bool dead = false;
      for (std::size_t i = 0; i < ext.size() && !dead; ++i) dead = is_forbidden(ext.substr(i));
      if (dead) continue;
      std::string next;
      for (std::size_t i = 0; i <= ext.size(); ++i) {
        const std::string suf = ext.substr(i);
        if (is_prefix(suf)) {
          next = suf;
          break;
        }
      }
      g.add_edge(from, intern(next), static_cast<Symbol>(c - '0'));
    }
  }
  return DetGraph(std::move(g));
}

/// The (t,inf) run-length constraint: state s counts the zeros since the
/// last one, capped at t; a one is allowed only from state t.
inline DetGraph rll_presentation(int t) {
  if (t < 0) throw DomainError("t must be >= 0");
  LabeledGraph g(2);
  for (int s = 0; s <= t; ++s) g.add_vertex("z" + std::to_string(s));
  for (int s = 0; s <= t; ++s) {
    g.add_edge(static_cast<std::size_t>(s), static_cast<std::size_t>(std::min(s + 1, t)), 0);
  }
  g.add_edge(static_cast<std::size_t>(t), 0, 1);
  return DetGraph(std::move(g));
}

// ---------------------------------------------------------------------------
// Structural transforms.

namespace detail {

/// Subgraph induced by `keep`, preserving names and vertex order.
inline LabeledGraph induced(const LabeledGraph& g, const std::vector<bool>& keep) {
  LabeledGraph h(g.alphabet_size());
  std::vector<std::size_t> map(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) map[v] = h.add_vertex(g.name(v));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    for (const Arc& a : g.out(v)) {
      if (keep[a.to]) h.add_edge(map[v], map[a.to], a.label);
    }
  }
  return h;
}

}  // namespace detail

/// Repeatedly removes vertices with no incoming or no outgoing edges; what
/// remains is exactly the set of vertices on bi-infinite paths.
inline LabeledGraph trim_essential(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const Arc& a : g.out(v)) {
      ++outdeg[v];
      ++indeg[a.to];
      in[a.to].push_back(v);
    }
  }
  std::vector<bool> keep(n, true);
  std::deque<std::size_t> q;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) {
      keep[v] = false;
      q.push_back(v);
    }
  }
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop_front();
    for (const Arc& a : g.out(v)) {
      if (keep[a.to] && --indeg[a.to] == 0) {
        keep[a.to] = false;
        q.push_back(a.to);
      }
    }
    for (std::size_t u : in[v]) {
      if (keep[u] && --outdeg[u] == 0) {
        keep[u] = false;
        q.push_back(u);
      }
    }
  }
  return detail::induced(g, keep);
}

inline DetGraph trim_essential(const DetGraph& g) { return DetGraph(trim_essential(g.graph())); }

/// Replaces every label by its absolute value; the result is binary and in
/// general no longer deterministic.
inline LabeledGraph project_abs(const LabeledGraph& g) {
  LabeledGraph h(2);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) h.add_vertex(g.name(v));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const Arc& a : g.out(v)) h.add_edge(v, a.to, a.label != 0 ? 1 : 0);
  }
  return h;
}

/// Merges vertices with identical follower sets (Moore partition refinement;
/// every vertex accepts). Each class is represented by its first vertex.
inline DetGraph minimize(const DetGraph& dg) {
  const LabeledGraph& g = dg.graph();
  const std::size_t n = g.vertex_count();
  const std::vector<Symbol> labels = g.labels();
  std::vector<std::size_t> block(n, 0);
  std::size_t blocks = n == 0 ? 0 : 1;
  while (true) {
    std::map<std::vector<long>, std::size_t> sig_to_block;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<long> sig{static_cast<long>(block[v])};
      for (Symbol s : labels) {
        auto to = dg.next(v, s);
        sig.push_back(to ? static_cast<long>(block[*to]) : -1L);
      }
      auto [it, inserted] = sig_to_block.emplace(std::move(sig), sig_to_block.size());
      next[v] = it->second;
    }
    const std::size_t count = sig_to_block.size();
    block.swap(next);
    if (count == blocks) break;
    blocks = count;
  }
  // Renumber classes by first occurrence so the output order is stable.
  std::vector<long> order(blocks, -1);
  std::vector<std::size_t> rep;
  for (std::size_t v = 0; v < n; ++v) {
    if (order[block[v]] < 0) {
      order[block[v]] = static_cast<long>(rep.size());
      rep.push_back(v);
    }
  }
  LabeledGraph h(g.alphabet_size());
  for (std::size_t r : rep) h.add_vertex(g.name(r));
  for (std::size_t i = 0; i < rep.size(); ++i) {
    for (const Arc& a : g.out(rep[i])) {
      h.add_edge(i, static_cast<std::size_t>(order[block[a.to]]), a.label);
    }
  }
  return DetGraph(std::move(h));
}

// ---------------------------------------------------------------------------
// Subset construction.

struct DeterminizeOptions {
  std::size_t max_states = 2'000'000;
  bool trim = true;  // keep only the essential part of the result
};

namespace detail {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : v) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::string subset_name(const std::vector<std::uint64_t>& bits, std::size_t n, std::size_t id) {
  if (n > 64) return "S" + std::to_string(id);
  std::string s = "{";
  bool first = true;
  for (std::size_t v = 0; v < n; ++v) {
    if ((bits[v / 64] >> (v % 64)) & 1u) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace detail

/// Deterministic presentation of the same system: states are the subsets of
/// vertices reachable from the full vertex set by reading labels.
inline DetGraph determinize(const LabeledGraph& g, const DeterminizeOptions& opt = {}) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  const std::vector<Symbol> labels = g.labels();
  LabeledGraph h(g.alphabet_size());
  if (n == 0) return DetGraph(std::move(h));

  std::unordered_map<std::vector<std::uint64_t>, std::size_t, detail::BitsetHash> id;
  std::vector<std::vector<std::uint64_t>> states;
  auto intern = [&](std::vector<std::uint64_t>&& bits) {
    auto it = id.find(bits);
    if (it != id.end()) return it->second;
    if (states.size() >= opt.max_states) {
      throw BudgetExceeded("subset construction exceeded " + std::to_string(opt.max_states) + " states");
    }
    const std::size_t v = h.add_vertex(detail::subset_name(bits, n, states.size()));
    id.emplace(bits, v);
    states.push_back(std::move(bits));
    return v;
  };

  std::vector<std::uint64_t> all(words, ~std::uint64_t{0});
  if (n % 64) all.back() = (std::uint64_t{1} << (n % 64)) - 1;
  intern(std::move(all));

  std::vector<std::vector<std::uint64_t>> succ(labels.size());
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    for (auto& s : succ) s.assign(words, 0);
    const std::vector<std::uint64_t> bits = states[cur];
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = bits[w];
      while (word) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
        word &= word - 1;
        for (const Arc& a : g.out(v)) {
          const auto li = static_cast<std::size_t>(a.label - labels.front());
          succ[li][a.to / 64] |= std::uint64_t{1} << (a.to % 64);
        }
      }
    }
    for (std::size_t li = 0; li < labels.size(); ++li) {
      const bool empty = std::all_of(succ[li].begin(), succ[li].end(), [](std::uint64_t x) { return x == 0; });
      if (empty) continue;
      const std::size_t to = intern(std::vector<std::uint64_t>(succ[li]));
      h.add_edge(cur, to, labels[li]);
    }
  }
  DetGraph d(std::move(h));
  return opt.trim ? trim_essential(d) : d;
}

// ---------------------------------------------------------------------------
// Sliding-window graph of the windowed ternary constraint.

struct G3tOptions {
  std::uint64_t max_candidates = 1'594'323;  // 3^13, i.e. t <= 4
};

namespace detail {

/// Window condition on x_{-t} .. x_{2t}: equal nonzero symbols at k, l, m in
/// [0, t] force x_{k+l-m} != 0.
inline bool g3t_vertex_ok(std::span<const Symbol> x, int t) {
  auto at = [&](int pos) { return x[static_cast<std::size_t>(pos + t)]; };
  for (int k = 0; k <= t; ++k) {
    if (at(k) == 0) continue;
    for (int l = 0; l <= t; ++l) {
      if (at(l) != at(k)) continue;
      for (int m = 0; m <= t; ++m) {
        if (at(m) != at(k)) continue;
        if (at(k + l - m) == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Vertices: ternary words of length 3t + 1 passing the window condition.
/// An edge x -> x' exists when x' shifts x by one symbol; its label is the
/// newly entering symbol. Vertex names are the words in '-', '0', '+' form.
inline LabeledGraph build_g3t(int t, const G3tOptions& opt = {}) {
  if (t < 1) throw DomainError("t must be >= 1");
  const int len = 3 * t + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < len; ++i) {
    total *= 3;
    if (total > opt.max_candidates) throw BudgetExceeded("G3t candidate count exceeds budget");
  }
  // Base-3 code with digit i = x_i + 1, most significant digit first.
  std::vector<long> vertex_of(total, -1);
  LabeledGraph g(3);
  std::vector<Symbol> x(static_cast<std::size_t>(len));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = len - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = static_cast<Symbol>(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    if (!detail::g3t_vertex_ok(x, t)) continue;
    std::string name;
    for (Symbol s : x) name.push_back(TernaryAlphabet::to_char(s));
    vertex_of[code] = static_cast<long>(g.add_vertex(std::move(name)));
  }
  const std::uint64_t high = total / 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (vertex_of[code] < 0) continue;
    const std::uint64_t shifted = (code % high) * 3;
    for (int d = 0; d < 3; ++d) {
      const long to = vertex_of[shifted + static_cast<std::uint64_t>(d)];
      if (to >= 0) {
        g.add_edge(static_cast<std::size_t>(vertex_of[code]), static_cast<std::size_t>(to),
                   static_cast<Symbol>(d - 1));
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Spectral tools.

namespace detail {

using SparseRows = std::vector<std::vector<std::pair<std::size_t, double>>>;

/// Strongly connected components (iterative Tarjan), as lists of vertices.
inline std::vector<std::vector<std::size_t>> scc(const SparseRows& rows) {
  const std::size_t n = rows.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kNone), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next child)
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child < rows[v].size()) {
        const std::size_t w = rows[v][child++].first;
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comps;
}

/// Perron root of one irreducible block by power iteration on (A + I), which
/// is primitive. Collatz-Wielandt ratios bracket the root at every step.
inline double irreducible_radius(const SparseRows& rows, const std::vector<std::size_t>& comp,
                                 const std::vector<long>& local, double tol, long max_iter) {
  const std::size_t m = comp.size();
  std::vector<double> v(m, 1.0), w(m);
  double lo = 0.0, hi = 0.0;
  for (long it = 0; it < max_iter; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = v[i];
      for (const auto& [to, cnt] : rows[comp[i]]) {
        const long j = local[to];
        if (j >= 0) acc += cnt * v[static_cast<std::size_t>(j)];
      }
      w[i] = acc;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    double top = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, w[i]);
    }
    for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / top;
    if (hi - lo < tol) break;
  }
  return 0.5 * (lo + hi) - 1.0;
}

inline double spectral_radius_rows(const SparseRows& rows, double tol, long max_iter) {
  const auto comps = scc(rows);
  std::vector<long> local(rows.size(), -1);
  double best = 0.0;
  for (const auto& comp : comps) {
    bool cyclic = comp.size() > 1;
    if (!cyclic) {
      for (const auto& [to, cnt] : rows[comp[0]]) cyclic |= (to == comp[0] && cnt > 0);
    }
    if (!cyclic) continue;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<long>(i);
    best = std::max(best, irreducible_radius(rows, comp, local, tol, max_iter));
    for (std::size_t v : comp) local[v] = -1;
  }
  return best;
}

}  // namespace detail

struct SpectralOptions {
  double tol = 1e-12;
  long max_iter = 1'000'000;
};

/// Largest eigenvalue of a nonnegative integer matrix (0 for nilpotent ones).
inline double spectral_radius(const AdjacencyMatrix& a, const SpectralOptions& opt = {}) {
  detail::SparseRows rows(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) {
      const std::int64_t v = a.at(i, j);
      if (v < 0) throw DomainError("adjacency matrix must be nonnegative");
      if (v > 0) rows[i].push_back({j, static_cast<double>(v)});
    }
  }
  return detail::spectral_radius_rows(rows, opt.tol, opt.max_iter);
}

inline double spectral_radius(const LabeledGraph& g, const SpectralOptions& opt = {}) {
  detail::SparseRows rows(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::map<std::size_t, double> cnt;
    for (const Arc& a : g.out(v)) cnt[a.to] += 1.0;
    rows[v].assign(cnt.begin(), cnt.end());
  }
  return detail::spectral_radius_rows(rows, opt.tol, opt.max_iter);
}

/// det(zI - A), exactly, by Berkowitz's division-free algorithm.
inline IntPolynomial char_poly(const AdjacencyMatrix& a, std::size_t max_dim = 64) {
  using detail::checked_add;
  using detail::checked_mul;
  const std::size_t n = a.n;
  if (n > max_dim) throw BudgetExceeded("matrix dimension exceeds the characteristic polynomial bound");
  if (n == 0) return IntPolynomial::constant(1);
  // Coefficients in descending order: p[0] = 1.
  std::vector<std::int64_t> p{1, -a.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<std::int64_t> col(r + 2, 0);
    col[0] = 1;
    col[1] = -a.at(r, r);
    std::vector<std::int64_t> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a.at(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot = checked_add(dot, checked_mul(a.at(r, j), v[j]));
      col[k] = -dot;
      std::vector<std::int64_t> nv(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) nv[i] = checked_add(nv[i], checked_mul(a.at(i, j), v[j]));
      }
      v.swap(nv);
    }
    std::vector<std::int64_t> np(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        np[i] = checked_add(np[i], checked_mul(col[i - j], p[j]));
      }
    }
    p.swap(np);
  }
  return IntPolynomial::from_descending(std::move(p));
}

// ---------------------------------------------------------------------------
// Counting.

/// Number of paths of length n from `start`; for a deterministic graph this
/// is the number of distinct label words readable from `start`.
inline std::uint64_t count_paths_from(const LabeledGraph& g, std::size_t start, int n) {
  std::vector<std::uint64_t> cur(g.vertex_count(), 0), nxt(g.vertex_count());
  cur.at(start) = 1;
  for (int step = 0; step < n; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!cur[v]) continue;
      for (const Arc& a : g.out(v)) nxt[a.to] += cur[v];
    }
    cur.swap(nxt);
  }
  std::uint64_t total = 0;
  for (auto c : cur) total += c;
  return total;
}

/// Number of distinct words of length n labeling some path (any start).
inline std::uint64_t language_size(const LabeledGraph& g, int n) {
  if (g.vertex_count() == 0) return n == 0 ? 1 : 0;
  const DetGraph d = determinize(g, {.max_states = 1'000'000, .trim = false});
  return count_paths_from(d.graph(), 0, n);
}

/// Whether `word` is the label sequence of some path in g.
template <AnyWord W>
bool labels_path(const LabeledGraph& g, const W& word) {
  std::vector<bool> cur(g.vertex_count(), true), nxt(g.vertex_count());
  bool any = g.vertex_count() > 0;
  for (Symbol s : word) {
    std::fill(nxt.begin(), nxt.end(), false);
    any = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!cur[v]) continue;
      for (const Arc& a : g.out(v)) {
        if (a.label == s) {
          nxt[a.to] = true;
          any = true;
        }
      }
    }
    if (!any) return false;
    cur.swap(nxt);
  }
  return any;
}

// ---------------------------------------------------------------------------
// Capacity of the extendable binary projections of the windowed ternary
// constraint: build, trim, project, determinize, minimize, take log2 of the
// Perron root.

struct HPrimeOptions {
  G3tOptions g3t{};
  std::size_t max_states = 2'000'000;
};

struct HPrimeReport {
  int t = 0;
  std::size_t g3t_vertices = 0;
  std::size_t trimmed_vertices = 0;
  std::size_t determinized_states = 0;
  std::size_t minimized_states = 0;
  double spectral_radius = 0.0;
  double capacity = 0.0;
};

inline HPrimeReport h_prime_3_report(int t, const HPrimeOptions& opt = {}) {
  HPrimeReport r;
  r.t = t;
  const LabeledGraph g = build_g3t(t, opt.g3t);
  r.g3t_vertices = g.vertex_count();
  const LabeledGraph trimmed = trim_essential(g);
  r.trimmed_vertices = trimmed.vertex_count();
  const DetGraph det = determinize(project_abs(trimmed), {.max_states = opt.max_states, .trim = true});
  r.determinized_states = det.vertex_count();
  const DetGraph min = minimize(det);
  r.minimized_states = min.vertex_count();
  r.spectral_radius = spectral_radius(min.graph());
  r.capacity = r.spectral_radius > 0 ? std::log2(r.spectral_radius) : 0.0;
  return r;
}

inline double h_prime_3(int t, const HPrimeOptions& opt = {}) { return h_prime_3_report(t, opt).capacity; }

}  // namespace ghostpulse
