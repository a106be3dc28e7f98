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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "ghostpulse/capacity.hpp"
#include "ghostpulse/graph.hpp"
#include "oracles.hpp"

using namespace ghostpulse;

namespace {

// Every label word of length n over all paths, by plain DFS.
void collect(const LabeledGraph& g, std::size_t v, int left, std::string& cur, std::set<std::string>& out) {
  if (left == 0) {
    out.insert(cur);
    return;
  }
  for (const Arc& a : g.out(v)) {
    cur.push_back(g.alphabet_size() == 3 ? TernaryAlphabet::to_char(a.label) : BinaryAlphabet::to_char(a.label));
    collect(g, a.to, left - 1, cur, out);
    cur.pop_back();
  }
}

std::set<std::string> words(const LabeledGraph& g, int n) {
  std::set<std::string> out;
  std::string cur;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) collect(g, v, n, cur, out);
  return out;
}

LabeledGraph random_graph(std::mt19937& rng, int vertices, int edges) {
  LabeledGraph g(2);
  for (int i = 0; i < vertices; ++i) g.add_vertex();
  for (int e = 0; e < edges; ++e) {
    g.add_edge(rng() % vertices, rng() % vertices, static_cast<Symbol>(rng() % 2));
  }
  return g;
}

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(ForbiddenBlock, RllOne) {
  const std::vector<BinaryWord> f{BinaryWord::parse("11")};
  const DetGraph g = forbidden_block_presentation(f);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(minimize(g).vertex_count(), 2u);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(count_paths_from(g.graph(), 0, n), oracle::count_avoiding({"11"}, n));
}

TEST(ForbiddenBlock, OnlyZeros) {
  const std::vector<BinaryWord> f{BinaryWord::parse("1")};
  const DetGraph g = forbidden_block_presentation(f);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(words(g.graph(), n), (std::set<std::string>{std::string(n, '0')}));
}

TEST(ForbiddenBlock, F2PathCountsMatchOracle) {
  const DetGraph g = forbidden_block_presentation(f2_blocks());
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(count_paths_from(g.graph(), 0, n), oracle::count_avoiding({"011100", "001110", "001111100"}, n)) << n;
  }
}

TEST(ForbiddenBlock, F2PathCountsMatchSeries) {
  const DetGraph g = forbidden_block_presentation(f2_blocks());
  const CountTable s = gf_series(f2_generating_function(), 30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(count_paths_from(g.graph(), 0, n), s.at(n)) << n;
}

TEST(Minimize, ShannonCoverOfF2) {
  const DetGraph cover = minimize(trim_essential(forbidden_block_presentation(f2_blocks())));
  EXPECT_EQ(cover.vertex_count(), 10u);
  EXPECT_EQ(char_poly(adjacency(cover.graph())),
            IntPolynomial::from_descending({1, -2, 0, 0, 0, 1, -1, 2, -1, -2, 1}));
  EXPECT_NEAR(spectral_radius(cover.graph()), 1.94596, 5e-6);
}

TEST(Minimize, MergesDuplicates) {
  LabeledGraph g(2);
  for (int i = 0; i < 3; ++i) g.add_vertex();
  g.add_edge(0, 1, 0);
  g.add_edge(0, 2, 1);
  g.add_edge(1, 0, 0);
  g.add_edge(2, 0, 0);
  EXPECT_EQ(minimize(DetGraph(g)).vertex_count(), 2u);
}

TEST(Minimize, PreservesLanguage) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const LabeledGraph g = trim_essential(random_graph(rng, 5, 9));
    const DetGraph d = determinize(g);
    const DetGraph m = minimize(d);
    EXPECT_LE(m.vertex_count(), d.vertex_count());
    for (int n = 1; n <= 8; ++n) {
      const auto base = words(g, n);
      EXPECT_EQ(words(d.graph(), n), base) << trial;
      EXPECT_EQ(words(m.graph(), n), base) << trial;
      EXPECT_EQ(language_size(g, n), base.size());
    }
  }
}

TEST(Determinize, DeterministicInputKeepsLanguage) {
  const DetGraph g = trim_essential(forbidden_block_presentation(f2_blocks()));
  const DetGraph d = determinize(g.graph());
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(words(d.graph(), n), words(g.graph(), n));
}

TEST(Determinize, StateBudget) {
  EXPECT_THROW(determinize(project_abs(build_g3t(2)), {.max_states = 5, .trim = true}), BudgetExceeded);
}

TEST(G3t, OrderForWindowOne) {
  const LabeledGraph g = build_g3t(1);
  // Positions -1..2; excluded exactly when x0 = x1 != 0 and a neighbour is 0.
  std::size_t expected = 0;
  for (int code = 0; code < 81; ++code) {
    int x[4];
    for (int i = 3, c = code; i >= 0; --i, c /= 3) x[i] = c % 3 - 1;
    const bool bad = x[1] != 0 && x[1] == x[2] && (x[0] == 0 || x[3] == 0);
    expected += !bad;
  }
  EXPECT_EQ(expected, 71u);
  EXPECT_EQ(g.vertex_count(), 71u);
  EXPECT_TRUE(g.is_deterministic());
  bool zero_vertex = false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    EXPECT_LE(g.out(v).size(), 3u);
    zero_vertex |= g.name(v) == "0000";
  }
  EXPECT_TRUE(zero_vertex);
}

TEST(G3t, WindowTwoIsDeterministic) {
  const LabeledGraph g = build_g3t(2);
  EXPECT_TRUE(g.is_deterministic());
  EXPECT_THROW(build_g3t(5), BudgetExceeded);
}

TEST(G3t, TrimmedDegrees) {
  const LabeledGraph g = trim_essential(build_g3t(1));
  std::vector<int> indeg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) ++indeg[e.to];
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    EXPECT_GE(g.out(v).size(), 1u);
    EXPECT_GE(indeg[v], 1);
  }
}

// Length-n path labels of the essential part are exactly the words that
// satisfy the window-1 ternary constraint and extend on both sides.
TEST(G3t, PathsAreExtendableWords) {
  const LabeledGraph g = trim_essential(build_g3t(1));
  const std::vector<std::string> pads = [] {
    std::vector<std::string> p;
    for (int c = 0; c < 27; ++c) {
      std::string s;
      for (int i = 0, v = c; i < 3; ++i, v /= 3) s.push_back("-0+"[v % 3]);
      p.push_back(s);
    }
    return p;
  }();
  auto ok = [](const std::string& s) {
    std::vector<int> x;
    for (char ch : s) x.push_back(ch == '+' ? 1 : ch == '-' ? -1 : 0);
    return !oracle::violates(x, 1);
  };
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> expected;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::string w;
      for (std::uint64_t i = 0, c = code; i < static_cast<std::uint64_t>(n); ++i, c /= 3) w.push_back("-0+"[c % 3]);
      if (!ok(w)) continue;
      bool found = false;
      if (n == 1) {
        for (const auto& u : pads) {
          for (const auto& v : pads) found = found || ok(u + w + v);
        }
      } else {
        // Every violating configuration spans at most three consecutive
        // positions, so the two sides can be padded independently.
        bool left = false, right = false;
        for (const auto& u : pads) left = left || ok(u + w);
        for (const auto& v : pads) right = right || ok(w + v);
        found = left && right;
      }
      if (found) expected.insert(w);
    }
    EXPECT_EQ(words(g, n), expected) << n;
  }
}

TEST(ProjectAbs, Labels) {
  LabeledGraph g(3);
  g.add_vertex();
  g.add_edge(0, 0, 1);
  g.add_edge(0, 0, -1);
  g.add_edge(0, 0, 0);
  const LabeledGraph p = project_abs(g);
  EXPECT_EQ(p.alphabet_size(), 2);
  EXPECT_EQ(p.out(0)[0].label, 1);
  EXPECT_EQ(p.out(0)[1].label, 1);
  EXPECT_EQ(p.out(0)[2].label, 0);
  EXPECT_FALSE(p.is_deterministic());
}

TEST(ProjectAbs, G31HasTwoOneEdges) {
  const LabeledGraph p = project_abs(build_g3t(1));
  bool found = false;
  for (std::size_t v = 0; v < p.vertex_count() && !found; ++v) {
    int ones = 0;
    for (const Arc& a : p.out(v)) ones += a.label == 1;
    found = ones == 2;
  }
  EXPECT_TRUE(found);
}

TEST(Trim, Examples) {
  LabeledGraph chain(2);
  for (int i = 0; i < 3; ++i) chain.add_vertex();
  chain.add_edge(0, 1, 0);
  chain.add_edge(1, 2, 1);
  EXPECT_EQ(trim_essential(chain).vertex_count(), 0u);

  LabeledGraph loop(2);
  loop.add_vertex("a");
  loop.add_edge(0, 0, 1);
  const LabeledGraph t = trim_essential(loop);
  EXPECT_EQ(t.vertex_count(), 1u);
  EXPECT_EQ(t.edges(), loop.edges());
}

TEST(Spectral, Examples) {
  EXPECT_NEAR(spectral_radius(AdjacencyMatrix{{1, 1}, {1, 0}}), kGolden, 1e-10);
  EXPECT_NEAR(spectral_radius(AdjacencyMatrix::identity(3)), 1.0, 1e-10);
  EXPECT_EQ(spectral_radius(AdjacencyMatrix(4)), 0.0);
  EXPECT_NEAR(spectral_radius(AdjacencyMatrix{{2, 1}, {0, 3}}), 3.0, 1e-10);
  EXPECT_NEAR(spectral_radius(AdjacencyMatrix{{0, 1}, {1, 0}}), 1.0, 1e-10);
  EXPECT_NEAR(spectral_radius(AdjacencyMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 0.0, 1e-12);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(AdjacencyMatrix{{1, 1}, {1, 0}}), (IntPolynomial{-1, -1, 1}));
  EXPECT_EQ(char_poly(AdjacencyMatrix::identity(2)), (IntPolynomial{1, -2, 1}));
  EXPECT_THROW(char_poly(AdjacencyMatrix(65)), BudgetExceeded);
}

TEST(CharPoly, MatchesDeterminantOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    AdjacencyMatrix a(n);
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = m[i][j] = static_cast<long>(rng() % 4);
    }
    const IntPolynomial p = char_poly(a);
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.leading(), 1);
    for (long z = -3; z <= 3; ++z) EXPECT_TRUE(static_cast<oracle::i128>(p.eval(std::int64_t{z})) == oracle::char_poly_at(m, z));
  }
}

TEST(CharPoly, DominantRootMatchesPowerIteration) {
  const DetGraph cover = f2_shannon_cover();
  const IntPolynomial p = char_poly(adjacency(cover.graph()));
  EXPECT_NEAR(dominant_real_root(p, 1.5, 2.0), spectral_radius(cover.graph()), 1e-8);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    AdjacencyMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = 1 + static_cast<std::int64_t>(rng() % 3);
    }
    const double lambda = spectral_radius(a);
    EXPECT_NEAR(dominant_real_root(char_poly(a), lambda - 0.5, 3.0 * static_cast<double>(n) + 1), lambda, 1e-8);
  }
}

TEST(HPrime, WindowOne) {
  const HPrimeReport r = h_prime_3_report(1);
  EXPECT_EQ(r.g3t_vertices, 71u);
  EXPECT_NEAR(r.capacity, 1.0, 1e-9);
  const DetGraph d = determinize(project_abs(build_g3t(1)));
  EXPECT_NEAR(spectral_radius(d.graph()), 2.0, 1e-9);
}

TEST(HPrime, NonincreasingInWindow) {
  EXPECT_LE(h_prime_3(2), h_prime_3(1) + 1e-12);
}
