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

// Acceptance run: one PASS/FAIL line per criterion, INFO lines for stretch
// measurements. Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ghostpulse.hpp"

#ifndef GHOSTPULSE_CLI
#error "GHOSTPULSE_CLI must point at the command-line binary"
#endif

namespace gp = ghostpulse;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, double secs, const std::string& detail) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << secs << " s)";
  if (!detail.empty()) os << " " << detail;
  std::cout << os.str() << std::endl;
  if (!ok) ++failures;
}

void info(const std::string& text) { std::cout << "INFO " << text << std::endl; }

// Runs one criterion, turning exceptions into a failure line.
void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  const auto start = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  report(id, name, ok, seconds_since(start), detail);
}

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(GHOSTPULSE_CLI) + " " + args;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  std::array<char, 256> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

gp::BinaryWord random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<gp::Symbol> v(n);
  for (auto& s : v) s = static_cast<gp::Symbol>(rng() & 1u);
  return gp::BinaryWord(std::move(v));
}

// Encodes and decodes `trials` random payloads; `emit` returns the decoded
// payload and sets `valid` from the constraint check of the emitted word.
bool round_trips(std::mt19937_64& rng, int trials, std::size_t unit, std::size_t max_units,
                 const std::function<gp::BinaryWord(const gp::BinaryWord&, bool&)>& emit, std::string& detail,
                 const std::string& label) {
  int bad_trip = 0, bad_word = 0;
  for (int i = 0; i < trials; ++i) {
    const gp::BinaryWord payload = random_bits(rng, unit * (1 + rng() % max_units));
    bool valid = false;
    if (emit(payload, valid) != payload) ++bad_trip;
    if (!valid) ++bad_word;
  }
  detail += label + "=" + std::to_string(bad_trip) + "/" + std::to_string(bad_word) + " ";
  return bad_trip == 0 && bad_word == 0;
}

}  // namespace

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  criterion(1, "binary windowed capacities via `capacity --bgpt t`", [](std::string& detail) {
    const double table[] = {0.6942, 0.5515, 0.4650, 0.4057, 0.3620, 0.3282, 0.3011, 0.2788, 0.2600, 0.2440,
                            0.2301, 0.2180, 0.2073, 0.1977, 0.1891, 0.1813, 0.1742, 0.1678, 0.1618, 0.1564};
    const auto start = Clock::now();
    int bad = 0;
    for (int t = 1; t <= 20; ++t) {
      int code = 0;
      const std::string out = run_cli("capacity --bgpt " + std::to_string(t), code);
      if (code != 0 || std::abs(std::stod(out) - table[t - 1]) > 5e-5) ++bad;
    }
    const double secs = seconds_since(start);
    detail = "mismatches=" + std::to_string(bad);
    return bad == 0 && secs < 1.0;
  });

  criterion(2, "ternary counts for n = 1..16", [&](std::string& detail) {
    const std::uint64_t expected[] = {2,   4,   8,   16,  32,  60,  100,  162,
                                      240, 358, 501, 705, 937, 1248, 1609, 2078};
    const gp::CountTable t = gp::b3_table(16, gp::Window::unbounded(), {.threads = threads});
    int bad = 0;
    for (int n = 1; n <= 16; ++n) bad += t.at(n) != expected[n - 1];
    detail = "mismatches=" + std::to_string(bad);
    return bad == 0;
  });

  {
    const std::uint64_t stretch[] = {2591, 3245, 3977, 4881, 5850, 7026, 8313, 9860};
    const auto start = Clock::now();
    const gp::CountTable t = gp::b3_table(24, gp::Window::unbounded(), {.threads = threads});
    bool ok = true;
    for (int n = 17; n <= 24; ++n) ok &= t.at(n) == stretch[n - 17];
    std::ostringstream os;
    os << "stretch ternary counts n = 17..24 " << (ok ? "match" : "DIFFER") << ", n=24 -> " << t.at(24) << " in "
       << seconds_since(start) << " s";
    info(os.str());
  }

  criterion(3, "closed-form binary count equals brute force for n = 1..20", [](std::string& detail) {
    const auto start = Clock::now();
    int bad = 0;
    for (int n = 1; n <= 20; ++n) {
      bad += gp::count_b2_closed(n) != gp::count_by_brute_force(gp::ConstraintSpec(2, gp::Window::unbounded()), n);
    }
    detail = "mismatches=" + std::to_string(bad);
    return bad == 0 && seconds_since(start) < 60.0;
  });

  criterion(4, "window-2 ternary capacity by generating function and Shannon cover", [](std::string& detail) {
    const gp::H32Report r = gp::h3_2_report();
    const gp::RationalGF& g = gp::f2_generating_function();
    const gp::DetGraph cover = gp::f2_shannon_cover();
    const bool num_ok = g.numerator == gp::IntPolynomial::from_descending({1, 0, 0, 0, 0, 1, -1, 1, 1, -1, 0});
    const gp::IntPolynomial den = gp::IntPolynomial::from_descending({1, -2, 0, 0, 0, 1, -1, 2, -1, -2, 1});
    const bool den_ok = g.denominator == den;
    const bool cover_ok = cover.vertex_count() == 10 && gp::char_poly(gp::adjacency(cover.graph())) == den;
    std::ostringstream os;
    os.precision(10);
    os << "gf=" << r.gf_capacity << " cover=" << r.cover_capacity;
    detail = os.str();
    return std::abs(r.gf_capacity - 0.96048) <= 5e-6 && std::abs(r.cover_capacity - 0.96048) <= 5e-6 &&
           std::abs(r.gf_capacity - r.cover_capacity) <= 1e-8 && num_ok && den_ok && cover_ok;
  });

  criterion(5, "brute-force membership equals characterized membership", [](std::string& detail) {
    std::uint64_t bad = 0, checked = 0;
    for (int t = 1; t <= 4; ++t) {
      for (int n = 1; n <= 14; ++n) {
        const auto hit = gp::brute_force_projections(gp::ConstraintSpec(2, gp::Window::of(t)), n);
        for (std::uint64_t m = 0; m < hit.size(); ++m, ++checked) {
          bad += hit[m] != gp::in_b2t_characterized(gp::word_from_mask(m, n), t);
        }
      }
    }
    for (int n = 1; n <= 14; ++n) {
      const auto hit = gp::brute_force_projections(gp::ConstraintSpec(3, gp::Window::of(2)), n);
      for (std::uint64_t m = 0; m < hit.size(); ++m, ++checked) {
        bad += hit[m] == gp::contains_forbidden_block(gp::word_from_mask(m, n), gp::f2_blocks());
      }
    }
    detail = "checked=" + std::to_string(checked) + " mismatches=" + std::to_string(bad);
    return bad == 0;
  });

  criterion(6, "sign assignment guarantee for all words n <= 16 avoiding F(2)", [](std::string& detail) {
    std::uint64_t bad = 0, checked = 0;
    for (int n = 1; n <= 16; ++n) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const gp::BinaryWord y = gp::word_from_mask(m, n);
        if (gp::contains_forbidden_block(y, gp::f2_blocks())) continue;
        const gp::TernaryWord x = gp::tgp2_sign_assign(y);
        ++checked;
        bad += !(gp::abs_project(x) == y && gp::check_gp_t(x, 2));
      }
    }
    detail = "checked=" + std::to_string(checked) + " failures=" + std::to_string(bad);
    return bad == 0;
  });

  criterion(7, "extendable-projection capacity for window 1", [](std::string& detail) {
    int filtered = 0;
    for (int code = 0; code < 81; ++code) {
      int x[4];
      for (int i = 3, c = code; i >= 0; --i, c /= 3) x[i] = c % 3 - 1;
      filtered += !(x[1] != 0 && x[1] == x[2] && (x[0] == 0 || x[3] == 0));
    }
    const gp::HPrimeReport r = gp::h_prime_3_report(1);
    std::ostringstream os;
    os.precision(12);
    os << "vertices=" << r.g3t_vertices << " filter=" << filtered << " value=" << r.capacity;
    detail = os.str();
    return r.g3t_vertices == 71 && filtered == 71 && std::abs(r.capacity - 1.0) <= 1e-9;
  });

  try {
    const auto start = Clock::now();
    const gp::HPrimeReport r = gp::h_prime_3_report(2);
    std::ostringstream os;
    os.precision(10);
    os << "stretch extendable-projection capacity, window 2: " << r.capacity << " (reference 0.96048), states "
       << r.g3t_vertices << " -> " << r.trimmed_vertices << " -> " << r.determinized_states << " -> "
       << r.minimized_states << ", " << seconds_since(start) << " s";
    info(os.str());
  } catch (const gp::BudgetExceeded& ex) {
    info(std::string("stretch window-2 pipeline exceeded its budget: ") + ex.what());
  }

  criterion(8, "codec round trips and constraint pass rates", [](std::string& detail) {
    std::mt19937_64 rng(2026);
    bool ok = true;
    const gp::BgpEnumCodec bgp(16);
    ok &= round_trips(rng, 10000, static_cast<std::size_t>(bgp.payload_bits()), 8,
                      [&](const gp::BinaryWord& p, bool& valid) {
                        const gp::BinaryWord w = bgp.encode(p);
                        valid = true;
                        for (std::size_t i = 0; i < w.size(); i += 16) valid &= gp::check_gp(w.slice(i, 16));
                        return bgp.decode(w);
                      },
                      detail, "bgp-enum");
    const gp::BlockEncoder rll = gp::build_block_encoder(gp::rll_presentation(1), 4, 7);
    ok &= round_trips(rng, 10000, 4, 16,
                      [&](const gp::BinaryWord& p, bool& valid) {
                        const gp::BinaryWord w = rll.encode(p);
                        valid = gp::check_rll(w, 1);
                        return rll.decode(w);
                      },
                      detail, "rll-block");
    for (int t = 1; t <= 3; ++t) {
      const gp::StuffConfig cfg = gp::StuffConfig::optimal(t);
      ok &= round_trips(rng, 10000, 1, 200,
                        [&](const gp::BinaryWord& p, bool& valid) {
                          const gp::BinaryWord w = gp::bit_stuff_encode(p, cfg);
                          valid = gp::check_rll(w, t);
                          return gp::bit_stuff_decode(w, cfg);
                        },
                        detail, "rll-stuff-t" + std::to_string(t));
    }
    ok &= round_trips(rng, 10000, 1, 64,
                      [&](const gp::BinaryWord& p, bool& valid) {
                        const gp::TernaryWord x = gp::tgp1_encode(p);
                        valid = gp::check_gp_t(x, 1);
                        return gp::tgp1_decode(x);
                      },
                      detail, "tgp1");
    const gp::Tgp2Codec& tgp2 = gp::default_tgp2_codec();
    ok &= round_trips(rng, 10000, static_cast<std::size_t>(tgp2.p()), 8,
                      [&](const gp::BinaryWord& p, bool& valid) {
                        const gp::TernaryWord x = tgp2.encode(p);
                        valid = gp::check_gp_t(x, 2);
                        return tgp2.decode(x);
                      },
                      detail, "tgp2-" + std::to_string(tgp2.p()) + ":" + std::to_string(tgp2.q()));
    const gp::BinaryWord payload = random_bits(rng, 1'000'000);
    for (int t = 1; t <= 3; ++t) {
      const gp::BinaryWord w = gp::bit_stuff_encode(payload, gp::StuffConfig::optimal(t));
      const double rate = static_cast<double>(payload.size()) / static_cast<double>(w.size());
      std::ostringstream os;
      os.precision(5);
      os << "rate-t" << t << "=" << rate << " ";
      detail += os.str();
      ok &= std::abs(rate - gp::h2(t)) <= 0.01;
    }
    return ok;
  });

  criterion(9, "one channel round is the identity exactly on constrained words", [](std::string& detail) {
    std::uint64_t bad = 0;
    for (int t = 1; t <= 3; ++t) {
      const gp::ChannelConfig cfg{gp::Window::of(t), 1};
      for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          const gp::BinaryWord b = gp::word_from_mask(m, n);
          bad += (gp::apply_ghost_pulses(b, cfg) == b) != gp::check_gp_t(b, t);
        }
      }
    }
    detail = "mismatches=" + std::to_string(bad);
    return bad == 0;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
