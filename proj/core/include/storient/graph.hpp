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

#include <optional>
#include <span>
#include <vector>

namespace storient {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

inline constexpr int kNone = -1;

struct Edge {
  VertexId u = kNone;
  VertexId v = kNone;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with dense vertex and edge ids. The per-vertex
// incidence lists keep insertion order; PlaneGraph reuses them as rotations.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Throws kInvalidVertex for out-of-range endpoints or self-loops and
  // kDuplicateEdge for parallel edges.
  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incident_[v].size()); }

  VertexId opposite(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool valid_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

 protected:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

bool is_connected(const Graph& g);

// True iff g with the extra edge (s,t) (when absent) is connected and has no
// cut vertex. Graphs with fewer than three vertices count as biconnected when
// connected.
bool is_biconnected_with(const Graph& g, VertexId s, VertexId t);

bool is_biconnected(const Graph& g);

}  // namespace storient
