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

// Prints binary and ternary capacities side by side.

#include <cstdio>

#include "ghostpulse.hpp"

namespace gp = ghostpulse;

int main() {
  std::printf("t  binary  ternary\n");
  std::printf("1  %.4f  %.4f\n", gp::h2(1), gp::h3_1());
  std::printf("2  %.4f  %.4f\n", gp::h2(2), gp::h3_2());
  for (int t = 3; t <= 6; ++t) std::printf("%d  %.4f\n", t, gp::h2(t));

  const gp::HPrimeReport r = gp::h_prime_3_report(2);
  std::printf("window-2 graph pipeline: %zu -> %zu -> %zu -> %zu states, capacity %.8f\n", r.g3t_vertices,
              r.trimmed_vertices, r.determinized_states, r.minimized_states, r.capacity);

  const gp::RationalGF& g = gp::f2_generating_function();
  std::printf("G(z) = (%s) / (%s)\n", g.numerator.str().c_str(), g.denominator.str().c_str());
}
