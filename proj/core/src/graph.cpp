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

#include "storient/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "storient/error.hpp"

namespace storient {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex count");
  incident_.resize(vertex_count);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw Error(ErrorCode::kInvalidVertex,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw Error(ErrorCode::kInvalidVertex, "self-loop at " + std::to_string(u));
  if (find_edge(u, v)) {
    throw Error(ErrorCode::kDuplicateEdge,
                "parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  const EdgeId id = edge_count();
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
  const VertexId scan = degree(u) <= degree(v) ? u : v;
  const VertexId other = scan == u ? v : u;
  for (EdgeId e : incident_[scan]) {
    if (opposite(e, scan) == other) return e;
  }
  return std::nullopt;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.opposite(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

namespace {

// Lowpoint DFS over an adjacency list of (neighbor, edge id) pairs.
bool has_no_cut_vertex(const std::vector<std::vector<std::pair<int, int>>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> stack{0};
  disc[0] = low[0] = 0;
  int timer = 1;
  int root_children = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    if (cursor[v] < adj[v].size()) {
      const auto [w, e] = adj[v][cursor[v]++];
      if (e == parent_edge[v]) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        parent_edge[w] = e;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) {
      const int p = stack.back();
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= disc[p]) return false;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) return false;
  }
  return root_children <= 1;
}

}  // namespace

bool is_biconnected_with(const Graph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    adj[ed.u].emplace_back(ed.v, e);
    adj[ed.v].emplace_back(ed.u, e);
  }
  if (g.valid_vertex(s) && g.valid_vertex(t) && s != t && !g.find_edge(s, t)) {
    adj[s].emplace_back(t, g.edge_count());
    adj[t].emplace_back(s, g.edge_count());
  }
  return has_no_cut_vertex(adj);
}

bool is_biconnected(const Graph& g) { return is_biconnected_with(g, kNone, kNone); }

}  // namespace storient
