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
#include <string>
#include <vector>

#include "storient/plane_graph.hpp"
#include "storient/rational.hpp"

namespace storient {

// How Insert-Edge picks its two endpoints. A rejected step adds nothing and
// the next step draws its operation type afresh. The vertex policies pick a
// uniform vertex u, an incident face f as described, and a uniform vertex of f
// not next to u on its boundary; they reject when f is a triangle or the pair
// is already adjacent.
enum class EdgePolicy {
  // Up to two independent uniform draws of f, keeping the first that is not a
  // triangle.
  kVertexTwoFaces,
  // One uniform draw of f.
  kVertexFace,
  // f uniform among the non-triangle faces at u.
  kVertexSplittableFace,
  // Uniform face, uniform vertex pair at boundary distance >= 2. A triangle or
  // an existing edge redraws the selection up to a retry cap, after which the
  // step is rejected.
  kFacePairRetry,
};

const char* to_string(EdgePolicy policy);
EdgePolicy edge_policy_from_string(const std::string& name);

struct GenConfig {
  int n = 3;
  double p_iv = 0.5;
  std::uint64_t seed = 0;
  EdgePolicy policy = EdgePolicy::kVertexTwoFaces;
};

struct GenStats {
  int insert_vertex = 0;
  int insert_edge = 0;
  int rejected = 0;
};

struct GeneratedInstance {
  PlaneGraph graph;
  VertexId s = kNone;
  VertexId t = kNone;
  GenStats stats;
};

// Grows a plane biconnected graph from a triangle until it has n vertices and
// picks s != t uniformly on the face that descends from the triangle's outer
// side. Deterministic in the config. Throws kInvalidInput on a bad config.
GeneratedInstance generate(const GenConfig& config);

Rational density(const Graph& g);

struct DensityStats {
  Rational avg;
  Rational min;
  Rational max;
  double sd = 0.0;  // population standard deviation
  int samples = 0;
};

// Throws kInvalidInput on an empty seed list.
DensityStats sample_stats(int n, double p_iv, const std::vector<std::uint64_t>& seeds,
                          EdgePolicy policy = EdgePolicy::kVertexTwoFaces);

}  // namespace storient
