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

#include "storient/plane_graph.hpp"

namespace storient::detail {

// Local search over valid angle labelings. small[a] marks S angles; outer
// angles are never S. Moves exchange labels along alternating face/vertex
// cycles, which keeps every face and vertex count intact, so each visited
// labeling is valid. Returns the best labeling found and its number of
// transitive edges.
struct SearchResult {
  std::vector<char> small;
  int value = 0;
  std::int64_t flips = 0;
};

// Zero disables a limit. The flip budget keeps results independent of timing.
struct SearchLimits {
  double time_limit_s = 0.0;
  std::int64_t max_flips = 0;
  int max_idle_rounds = 100;
  int max_cycle_faces = 6;
  std::uint64_t seed = 1;
};

SearchResult improve_labeling(const PlaneGraph& g, VertexId s, VertexId t, std::vector<char> small,
                              const SearchLimits& limits);

}  // namespace storient::detail
