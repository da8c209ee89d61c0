// Copyright 2026 The storient Authors
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

#include <cstdint>
#include <vector>

#include "storient/graph_io.hpp"
#include "storient/plan_gen.hpp"

namespace fixture {

using storient::PgInstance;

// s=0, v=1, t=2.
PgInstance triangle();
// s=0, a=1, t=2, b=3.
PgInstance four_cycle();
// Outer triangle 0,1,2 around center 3; s=0, t=1.
PgInstance k4();
// s=0, t=1.
PgInstance single_edge();
// s=0, a=1, t=2.
PgInstance path3();
// Triangles {0,1,2} and {2,3,4} sharing vertex 2; s=0, t=4.
PgInstance bowtie();

// Generated instances with n drawn uniformly from [n_min, n_max] and p_iv
// from {0.2, 0.5, 0.8}.
std::vector<storient::GeneratedInstance> generated(int count, int n_min, int n_max, std::uint64_t seed);

}  // namespace fixture
