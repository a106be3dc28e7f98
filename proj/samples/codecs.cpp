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

// Encodes one payload with each codec and checks the emitted words.

#include <iostream>

#include "ghostpulse.hpp"

namespace gp = ghostpulse;

int main() {
  const gp::BinaryWord payload = gp::BinaryWord::parse("110100111010001011110000101101");

  const gp::BgpEnumCodec bgp(16);
  const gp::BinaryWord framed = gp::frame_payload(payload, bgp.payload_bits());
  const gp::BinaryWord w1 = bgp.encode(framed);
  std::cout << "bgp-enum  " << w1.size() << " bits, round trip "
            << (gp::unframe_payload(bgp.decode(w1)) == payload ? "ok" : "FAILED") << '\n';

  const gp::StuffConfig cfg = gp::StuffConfig::optimal(2);
  const gp::BinaryWord w2 = gp::bit_stuff_encode(payload, cfg);
  std::cout << "rll-stuff " << w2.str() << " rll(2)=" << gp::check_rll(w2, 2) << '\n';

  const gp::TernaryWord x1 = gp::tgp1_encode(payload);
  std::cout << "tgp1      " << x1.str() << " tgp(1)=" << gp::check_gp_t(x1, 1) << '\n';

  const gp::Tgp2Codec& tgp2 = gp::default_tgp2_codec();
  const gp::TernaryWord x2 = tgp2.encode(gp::frame_payload(payload, tgp2.p()));
  std::cout << "tgp2      rate " << tgp2.p() << ':' << tgp2.q() << ", " << x2.size()
            << " symbols, tgp(2)=" << gp::check_gp_t(x2, 2) << ", round trip "
            << (gp::unframe_payload(tgp2.decode(x2)) == payload ? "ok" : "FAILED") << '\n';

  const gp::BinaryWord block = w1.slice(w1.size() - 32, 16);
  const gp::BinaryWord received = gp::apply_ghost_pulses(block, {gp::Window::unbounded(), 4});
  std::cout << "channel   " << block.str() << " -> " << received.str() << '\n';
  const gp::BinaryWord loose = gp::BinaryWord::parse("0110100000000000");
  std::cout << "channel   " << loose.str() << " -> " << gp::apply_ghost_pulses(loose, {gp::Window::unbounded(), 4}).str()
            << '\n';
}
