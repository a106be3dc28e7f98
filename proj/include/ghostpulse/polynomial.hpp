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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ghostpulse/error.hpp"

namespace ghostpulse {

/// Polynomial with exact int64 coefficients, stored in ascending degree.
/// Arithmetic throws OverflowError instead of wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> ascending) : c_(ascending) { normalize(); }
  explicit IntPolynomial(std::vector<std::int64_t> ascending) : c_(std::move(ascending)) { normalize(); }

  static IntPolynomial constant(std::int64_t v) { return IntPolynomial({v}); }
  static IntPolynomial monomial(int degree, std::int64_t coef = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coef;
    return IntPolynomial(std::move(c));
  }
  /// Builds from coefficients listed highest degree first.
  static IntPolynomial from_descending(std::vector<std::int64_t> desc) {
    std::reverse(desc.begin(), desc.end());
    return IntPolynomial(std::move(desc));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coef(int i) const noexcept {
    return (i < 0 || i > degree()) ? 0 : c_[static_cast<std::size_t>(i)];
  }
  std::int64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  double eval(double x) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
  }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = detail::checked_add(detail::checked_mul(acc, x), *it);
    }
    return acc;
  }

  IntPolynomial derivative() const {
    std::vector<std::int64_t> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(detail::checked_mul(c_[static_cast<std::size_t>(i)], i));
    return IntPolynomial(std::move(d));
  }

  /// x^k p(1/x) with k = max(degree, at_least): reverses the coefficient order.
  IntPolynomial reversed(int at_least = 0) const {
    const int k = std::max(degree(), at_least);
    std::vector<std::int64_t> r(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(k - i)] = c_[static_cast<std::size_t>(i)];
    return IntPolynomial(std::move(r));
  }

  std::int64_t content() const noexcept {
    std::int64_t g = 0;
    for (auto v : c_) g = std::gcd(g, v);
    return g;
  }

  IntPolynomial exact_div(std::int64_t s) const {
    std::vector<std::int64_t> r(c_);
    for (auto& v : r) {
      if (v % s != 0) throw DomainError("inexact scalar division");
      v /= s;
    }
    return IntPolynomial(std::move(r));
  }

  IntPolynomial primitive_part() const {
    if (is_zero()) return *this;
    std::int64_t g = content();
    if (leading() < 0) g = -g;
    return exact_div(g);
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_add(a.coef(static_cast<int>(i)), b.coef(static_cast<int>(i)));
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<std::int64_t> r(a.c_);
    for (auto& v : r) v = detail::checked_sub(0, v);
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
      }
    }
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(std::int64_t s, const IntPolynomial& a) { return IntPolynomial::constant(s) * a; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form in descending powers of `var`, e.g. "z^2 - z - 1".
  std::string str(char var = 'z') const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const std::int64_t v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      const std::int64_t mag = v < 0 ? -v : v;
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += std::to_string(mag);
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

/// Remainder of a modulo b over Q[x], scaled to integer coefficients. Only
/// determined up to a nonzero constant factor, which is all gcd needs.
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const std::int64_t lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    const std::int64_t la = a.leading();
    a = lb * a - IntPolynomial::monomial(shift, la) * b;
    if (!a.is_zero()) a = a.exact_div(a.content());
  }
  return a;
}

/// Greatest common divisor over Q[x], returned primitive with positive leading
/// coefficient (primitive remainder sequence).
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

/// Exact quotient a / b over Z[x]; throws if b does not divide a.
inline IntPolynomial poly_exact_div(IntPolynomial a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<std::int64_t> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), 0);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    if (a.leading() % b.leading() != 0) throw DomainError("polynomial division is not exact over Z");
    const std::int64_t f = a.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = f;
    a = a - IntPolynomial::monomial(shift, f) * b;
  }
  if (!a.is_zero()) throw DomainError("polynomial division leaves a remainder");
  return IntPolynomial(std::move(q));
}

/// Real root of p in (lo, hi) where p changes sign: bisection down to a tight
/// bracket, then a few Newton steps that are only accepted inside the bracket.
inline double dominant_real_root(const IntPolynomial& p, double lo, double hi, double tol = 1e-12) {
  double flo = p.eval(lo);
  double fhi = p.eval(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) throw DomainError("polynomial has no sign change on the bracket");
  for (int it = 0; it < 200 && hi - lo > tol * 0.25; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p.eval(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  const IntPolynomial dp = p.derivative();
  for (int it = 0; it < 8; ++it) {
    const double d = dp.eval(x);
    if (d == 0.0) break;
    const double nx = x - p.eval(x) / d;
    if (!(nx >= lo - tol && nx <= hi + tol)) break;
    if (std::abs(nx - x) < 1e-16) {
      x = nx;
      break;
    }
    x = nx;
  }
  return x;
}

}  // namespace ghostpulse
