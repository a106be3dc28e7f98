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

// Capacities of the binary windowed constraint (roots of z^{t+1} - z^t - 1)
// and of the ternary window-2 constraint, the latter both from the
// generating function of words avoiding F(2) and from its Shannon cover.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghostpulse/constraints.hpp"
#include "ghostpulse/count_table.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/graph.hpp"
#include "ghostpulse/polynomial.hpp"
#include "ghostpulse/word.hpp"

namespace ghostpulse {

/// G(z) = numerator / denominator, read as a series sum g_n z^{-n}.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

namespace detail {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

/// Determinant by cofactor expansion along the first row; sizes stay tiny.
inline IntPolynomial poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  if (n == 1) return m[0][0];
  IntPolynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const IntPolynomial term = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Correlation polynomial in x = 1/z: a term x^{|b| - k} for every k such
/// that the length-k suffix of a equals the length-k prefix of b.
inline IntPolynomial correlation(const std::string& a, const std::string& b) {
  std::vector<std::int64_t> c(b.size() + 1, 0);
  for (std::size_t k = 1; k <= std::min(a.size(), b.size()); ++k) {
    if (a.compare(a.size() - k, k, b, 0, k) == 0) c[b.size() - k] += 1;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace detail

/// Generating function of the binary words avoiding every block of F, from
/// the correlation linear system. F must be reduced: no block may occur
/// inside another.
inline RationalGF go_generating_function(std::span<const BinaryWord> blocks) {
  std::vector<std::string> f;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("forbidden blocks must be nonempty");
    f.push_back(b.str());
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && f[j].find(f[i]) != std::string::npos) {
        throw DomainError("forbidden set is not reduced: " + f[i] + " occurs in " + f[j]);
      }
    }
  }
  const std::size_t m = f.size();
  // Transposed correlation matrix: row i, column j holds c(f_j, f_i).
  detail::PolyMatrix a(m, std::vector<IntPolynomial>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = detail::correlation(f[j], f[i]);
  }
  const IntPolynomial det = detail::poly_det(a);
  // 1^T adj(A) u, one Cramer determinant per column, u_i = x^{|f_i|}.
  IntPolynomial cramer;
  for (std::size_t col = 0; col < m; ++col) {
    detail::PolyMatrix b = a;
    for (std::size_t i = 0; i < m; ++i) b[i][col] = IntPolynomial::monomial(static_cast<int>(f[i].size()));
    cramer = cramer + detail::poly_det(b);
  }
  IntPolynomial num = det;
  IntPolynomial den = IntPolynomial{1, -2} * det + cramer;
  const IntPolynomial g = poly_gcd(num, den);
  num = poly_exact_div(num, g);
  den = poly_exact_div(den, g);
  if (den.coef(0) < 0) {
    num = -num;
    den = -den;
  }
  if (den.coef(0) != 1) throw DomainError("generating function denominator is not unit at the origin");
  const int k = std::max(num.degree(), den.degree());
  return {num.reversed(k), den.reversed(k)};
}

/// Exact coefficients g_0 .. g_{n_max} of the expansion in z^{-1}.
inline CountTable gf_series(const RationalGF& g, int n_max) {
  const int k = std::max(g.numerator.degree(), g.denominator.degree());
  if (g.denominator.is_zero()) throw DomainError("zero denominator");
  if (g.numerator.degree() > g.denominator.degree()) throw DomainError("not a series in z^-1");
  const IntPolynomial nw = g.numerator.reversed(k);
  const IntPolynomial dw = g.denominator.reversed(k);
  const std::int64_t d0 = dw.coef(0);
  std::vector<std::int64_t> s;
  CountTable table;
  for (int n = 0; n <= n_max; ++n) {
    std::int64_t acc = nw.coef(n);
    for (int i = 1; i <= std::min(n, dw.degree()); ++i) {
      acc = detail::checked_sub(acc, detail::checked_mul(dw.coef(i), s[static_cast<std::size_t>(n - i)]));
    }
    if (acc % d0 != 0) throw DomainError("series coefficients are not integral");
    acc /= d0;
    if (acc < 0) throw DomainError("negative series coefficient");
    s.push_back(acc);
    table.add(n, static_cast<std::uint64_t>(acc));
  }
  return table;
}

/// Largest root of z^{t+1} - z^t - 1, in (1, 2).
inline double rho_t(int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  IntPolynomial p = IntPolynomial::monomial(t + 1) - IntPolynomial::monomial(t) - IntPolynomial::constant(1);
  return dominant_real_root(p, 1.0, 2.0);
}

/// Capacity of the binary window-t constraint, equal to that of (t,inf)-RLL.
inline double h2(int t) { return std::log2(rho_t(t)); }

/// Capacity of the ternary constraint with window t = 1.
inline double h3_1() { return 1.0; }

inline const RationalGF& f2_generating_function() {
  static const RationalGF g = [] {
    const auto f = f2_blocks();
    return go_generating_function(f);
  }();
  return g;
}

/// Shannon cover of the binary words avoiding F(2).
inline DetGraph f2_shannon_cover() {
  const auto f = f2_blocks();
  return minimize(trim_essential(forbidden_block_presentation(f)));
}

struct H32Report {
  double gf_root = 0.0;
  double cover_root = 0.0;
  double gf_capacity = 0.0;
  double cover_capacity = 0.0;
};

inline H32Report h3_2_report() {
  H32Report r;
  r.gf_root = dominant_real_root(f2_generating_function().denominator, 1.0, 2.0);
  r.cover_root = spectral_radius(f2_shannon_cover().graph());
  r.gf_capacity = std::log2(r.gf_root);
  r.cover_capacity = std::log2(r.cover_root);
  return r;
}

/// Capacity of the ternary constraint with window t = 2.
inline double h3_2() { return h3_2_report().gf_capacity; }

}  // namespace ghostpulse
