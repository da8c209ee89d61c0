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

#include "storient/angle_labeling.hpp"
#include "storient/plane_graph.hpp"

namespace storient {

// Zero means unlimited. Without a time limit the result depends only on the
// input and the node limit.
struct SolveBudget {
  double time_limit_s = 0.0;
  std::int64_t node_limit = 0;
};

struct SolveStats {
  std::int64_t nodes = 0;
  double runtime_s = 0.0;
  int heuristic_objective = 0;  // transitive edges of the Even-Tarjan orientation
  int root_bound = 0;
};

struct Solution {
  StLabeling labeling;
  int objective_value = 0;
  int lower_bound = 0;
  bool proven_optimal = false;  // false when the budget ran out first
  SolveStats stats;
};

// Exact minimum number of transitive edges over the planar st-orientations of
// g with s,t on its outer face, as an angle labeling. Depth-first
// branch-and-bound over the angle variables: faces by ascending degree, angles
// by edge id, F before S. Among optimal labelings the lexicographically
// smallest one in that order is returned. When the budget runs out the best
// labeling found so far comes back with proven_optimal = false. Throws
// kNotAdmissible.
Solution solve_min_transitive(const PlaneGraph& g, VertexId s, VertexId t, const SolveBudget& budget = {});

// True iff the labeling satisfies the labeling properties for s,t, decodes to
// an st-orientation, and that orientation has exactly objective_value
// transitive edges.
bool verify_solution(const PlaneGraph& g, VertexId s, VertexId t, const Solution& solution);

}  // namespace storient
