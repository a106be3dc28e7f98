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
#include <vector>

#include "ghostpulse/capacity.hpp"
#include "ghostpulse/graph.hpp"
#include "oracles.hpp"

using namespace ghostpulse;

namespace {

std::vector<BinaryWord> blocks(std::initializer_list<const char*> list) {
  std::vector<BinaryWord> out;
  for (const char* s : list) out.push_back(BinaryWord::parse(s));
  return out;
}

}  // namespace

TEST(Polynomial, DominantRoot) {
  EXPECT_NEAR(dominant_real_root(IntPolynomial{-1, -1, 1}, 1.0, 2.0), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(dominant_real_root(IntPolynomial{-2, 0, 1}, 1.0, 2.0), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(dominant_real_root(IntPolynomial{-1, 1}, 1.0, 2.0), 1.0);
  EXPECT_THROW(dominant_real_root(IntPolynomial{1, 0, 1}, 0.0, 2.0), DomainError);
}

TEST(Polynomial, GcdAndDivision) {
  const IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 3};
  const IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{5, 0, 1};
  EXPECT_EQ(poly_gcd(a, b), (IntPolynomial{-1, 1}));
  EXPECT_EQ(poly_exact_div(a, IntPolynomial{-1, 1}), (IntPolynomial{2, 3}));
  EXPECT_THROW(poly_exact_div(a, IntPolynomial{0, 1}), DomainError);
  EXPECT_EQ((IntPolynomial{-1, -1, 1}).str(), "z^2 - z - 1");
}

TEST(Polynomial, OverflowIsReported) {
  const IntPolynomial big = IntPolynomial::constant(std::int64_t{1} << 62);
  EXPECT_THROW(big * IntPolynomial::constant(4), OverflowError);
}

TEST(BinaryCapacity, KnownValuesToTwenty) {
  const double table[] = {0.6942, 0.5515, 0.4650, 0.4057, 0.3620, 0.3282, 0.3011, 0.2788, 0.2600, 0.2440,
                          0.2301, 0.2180, 0.2073, 0.1977, 0.1891, 0.1813, 0.1742, 0.1678, 0.1618, 0.1564};
  for (int t = 1; t <= 20; ++t) EXPECT_NEAR(h2(t), table[t - 1], 5e-5) << t;
}

TEST(BinaryCapacity, RootsDecreaseInsideUnitToTwo) {
  double prev = 2.0;
  for (int t = 1; t <= 64; ++t) {
    const double r = rho_t(t);
    EXPECT_GT(r, 1.0);
    EXPECT_LT(r, prev);
    // Defining identity of the root.
    EXPECT_NEAR(std::pow(r, t + 1) - std::pow(r, t), 1.0, 1e-8 * std::pow(r, t + 1));
    prev = r;
  }
  EXPECT_THROW(rho_t(0), DomainError);
}

TEST(BinaryCapacity, MatchesRllGraph) {
  for (int t = 1; t <= 8; ++t) {
    EXPECT_NEAR(std::log2(spectral_radius(rll_presentation(t).graph())), h2(t), 1e-9) << t;
  }
}

TEST(GeneratingFunction, Fibonacci) {
  const auto f = blocks({"11"});
  const CountTable s = gf_series(go_generating_function(f), 12);
  std::uint64_t a = 1, b = 2;
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(s.at(n), a) << n;
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  EXPECT_EQ(s.at(5), 13u);
}

TEST(GeneratingFunction, AllOnesForbidden) {
  const auto f = blocks({"1"});
  const CountTable s = gf_series(go_generating_function(f), 10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(s.at(n), 1u);
}

TEST(GeneratingFunction, F2ExactForm) {
  const RationalGF& g = f2_generating_function();
  EXPECT_EQ(g.numerator, IntPolynomial::from_descending({1, 0, 0, 0, 0, 1, -1, 1, 1, -1, 0}));
  EXPECT_EQ(g.denominator, IntPolynomial::from_descending({1, -2, 0, 0, 0, 1, -1, 2, -1, -2, 1}));
  const std::uint64_t head[] = {1, 2, 4, 8, 16, 32, 62, 121, 236, 459, 893, 1738, 3381};
  const CountTable s = gf_series(g, 12);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(s.at(n), head[n]) << n;
}

TEST(GeneratingFunction, RejectsNonReducedSets) {
  const auto f = blocks({"11", "0110"});
  EXPECT_THROW(go_generating_function(f), DomainError);
}

TEST(GeneratingFunction, SeriesMatchesOracle) {
  const std::vector<std::vector<const char*>> sets = {
      {"11"}, {"101"}, {"111", "010"}, {"011100", "001110", "001111100"}, {"0110", "1001", "111"}};
  for (const auto& set : sets) {
    std::vector<BinaryWord> f;
    std::vector<std::string> names;
    for (const char* s : set) {
      f.push_back(BinaryWord::parse(s));
      names.emplace_back(s);
    }
    const CountTable s = gf_series(go_generating_function(f), 14);
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(s.at(n), oracle::count_avoiding(names, n)) << names[0] << " n=" << n;
  }
}

TEST(TernaryCapacity, WindowOneIsFull) { EXPECT_EQ(h3_1(), 1.0); }

TEST(TernaryCapacity, WindowTwo) {
  const H32Report r = h3_2_report();
  EXPECT_NEAR(r.gf_capacity, 0.96048, 5e-6);
  EXPECT_NEAR(r.gf_capacity, r.cover_capacity, 1e-8);
  EXPECT_NEAR(r.gf_root, 1.945958595, 1e-8);
  EXPECT_LT(h3_2(), 1.0);
}

TEST(TernaryCapacity, GapsToBinary) {
  EXPECT_GT(h3_1(), h2(1));
  EXPECT_GT(h3_2(), h2(2));
  EXPECT_NEAR(h_prime_3(2), h3_2(), 1e-8);
}

TEST(CountTable, RejectsOutOfOrderRows) {
  CountTable t;
  t.add(1, 2);
  EXPECT_THROW(t.add(1, 3), DomainError);
  EXPECT_THROW(t.at(5), DomainError);
}
