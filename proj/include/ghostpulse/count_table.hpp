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

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ghostpulse/error.hpp"

namespace ghostpulse {

struct CountRow {
  int n = 0;
  std::uint64_t count = 0;
  friend bool operator==(const CountRow&, const CountRow&) = default;
};

/// Exact counts indexed by word length, n strictly increasing.
struct CountTable {
  std::vector<CountRow> rows;

  void add(int n, std::uint64_t count) {
    if (!rows.empty() && n <= rows.back().n) throw DomainError("count table lengths must increase");
    rows.push_back({n, count});
  }
  std::size_t size() const noexcept { return rows.size(); }
  /// Count for length n; throws if n is absent.
  std::uint64_t at(int n) const {
    for (const auto& r : rows) {
      if (r.n == n) return r.count;
    }
    throw DomainError("length " + std::to_string(n) + " not in table");
  }
  friend bool operator==(const CountTable&, const CountTable&) = default;
};

struct RatePoint {
  int n = 0;
  double rate = 0.0;
};

/// log2(count) / n for every row.
inline std::vector<RatePoint> rate_series(const CountTable& table) {
  std::vector<RatePoint> out;
  for (const auto& r : table.rows) {
    if (r.count < 1 || r.n < 1) throw DomainError("rate series needs positive counts and lengths");
    out.push_back({r.n, std::log2(static_cast<double>(r.count)) / r.n});
  }
  return out;
}

inline void write_csv(std::ostream& os, const CountTable& table) {
  os << "n,count\n";
  for (const auto& r : table.rows) os << r.n << ',' << r.count << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<RatePoint>& series, int precision = 6) {
  const auto old = os.precision(precision);
  const auto flags = os.flags();
  os << std::fixed << "n,rate\n";
  for (const auto& p : series) os << p.n << ',' << p.rate << '\n';
  os.precision(old);
  os.flags(flags);
}

}  // namespace ghostpulse
