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
#include <functional>
#include <optional>

#include "storient/graph.hpp"
#include "storient/st_core.hpp"

namespace storient {

// Zero means unlimited.
struct NtoBudget {
  std::int64_t node_limit = 0;
  double time_limit_s = 0.0;
};

enum class NtoStatus { kSat, kUnsat, kBudgetExhausted };

const char* to_string(NtoStatus status);

struct NtoResult {
  NtoStatus status = NtoStatus::kUnsat;
  std::optional<StOrientation> witness;
  std::int64_t nodes = 0;
};

// Backtracking search for an st-orientation without transitive edges. Works
// on any graph, planar or not. A graph that is not biconnected with (s,t)
// has no st-orientation and comes back kUnsat. Throws kNotAdmissible when s
// and t are not distinct vertices.
NtoResult nto_decide(const Graph& g, VertexId s, VertexId t, const NtoBudget& budget = {});

enum class EnumerationMode {
  kAllStOrientations,
  kNonTransitive,
};

struct EnumerationResult {
  std::int64_t count = 0;
  bool complete = true;
  std::int64_t nodes = 0;
};

// Calls visit once per st-orientation (restricted to non-transitive ones in
// kNonTransitive mode). Stops early when visit returns false or the budget
// runs out; `complete` says whether the whole space was covered.
EnumerationResult enumerate_orientations(const Graph& g, VertexId s, VertexId t, EnumerationMode mode,
                                         const std::function<bool(const StOrientation&)>& visit,
                                         const NtoBudget& budget = {});

}  // namespace storient
