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

// Umbrella header.

#pragma once

#include "ghostpulse/bgp_enum.hpp"
#include "ghostpulse/bit_stuffing.hpp"
#include "ghostpulse/block_encoder.hpp"
#include "ghostpulse/capacity.hpp"
#include "ghostpulse/channel.hpp"
#include "ghostpulse/constraints.hpp"
#include "ghostpulse/count_table.hpp"
#include "ghostpulse/enumeration.hpp"
#include "ghostpulse/error.hpp"
#include "ghostpulse/graph.hpp"
#include "ghostpulse/polynomial.hpp"
#include "ghostpulse/tgp.hpp"
#include "ghostpulse/word.hpp"
