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

#include <iosfwd>
#include <optional>
#include <vector>

#include "storient/graph.hpp"
#include "storient/plane_graph.hpp"
#include "storient/rational.hpp"

namespace storient {

// number[v] in 1..n; number[s] == 1 and number[t] == n.
struct StNumbering {
  std::vector<int> number;
};

struct Arc {
  VertexId tail = kNone;
  VertexId head = kNone;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// One arc per edge id.
struct StOrientation {
  std::vector<Arc> arcs;
  VertexId source = kNone;
  VertexId sink = kNone;

  friend bool operator==(const StOrientation&, const StOrientation&) = default;
};

// Even-Tarjan path-addition st-numbering. DFS starts at s along (s,t), real or
// virtual, and visits the remaining children by ascending edge id, so the
// result is a deterministic function of the input. Throws kNotAdmissible when
// g plus (s,t) is not biconnected.
StNumbering st_number(const Graph& g, VertexId s, VertexId t);

bool is_st_numbering(const Graph& g, const StNumbering& numbering, VertexId s, VertexId t);

StOrientation orient_by_numbering(const Graph& g, const StNumbering& numbering);

// Orientation from per-edge flags: forward[e] orients edge(e).u -> edge(e).v.
StOrientation orient_from_flags(const Graph& g, const std::vector<bool>& forward, VertexId s,
                                VertexId t);

struct OrientationReport {
  bool arcs_match_edges = true;
  bool acyclic = true;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  bool passed = false;
};

// Never throws; the report says what is wrong.
OrientationReport validate_st_orientation(const Graph& g, const StOrientation& o, VertexId s,
                                          VertexId t);

// Vertices in a topological order, or nullopt when o has a directed cycle.
std::optional<std::vector<VertexId>> topological_order(const Graph& g, const StOrientation& o);

// Edges (u,v) with a directed u->v path avoiding the edge itself. Sorted.
// Throws kCyclicInput.
std::vector<EdgeId> transitive_edges_reach(const Graph& g, const StOrientation& o);

// Same set via faces: an edge is transitive iff it forms a whole side of a face
// whose opposite side has length at least two. Both sides of the outer face are
// tested like internal ones. Throws kNotBipolarFace when a face boundary does
// not split into two directed paths.
std::vector<EdgeId> transitive_edges_faces(const PlaneGraph& g, const StOrientation& o);

// 100 * (tr_heur - tr_opt) / max(1, tr_heur).
Rational improvement_percent(int tr_heur, int tr_opt);

// Around every vertex other than the terminals, the incoming edges form one
// contiguous block of the rotation.
bool incoming_edges_consecutive(const PlaneGraph& g, const StOrientation& o);

// Heuristic baseline: orient_by_numbering(st_number(g, s, t)).
StOrientation heuristic_orientation(const Graph& g, VertexId s, VertexId t);

// ".ori" format, one line per edge: "eid: tail -> head".
void write_ori(std::ostream& out, const StOrientation& o);
StOrientation read_ori(std::istream& in, const Graph& g, VertexId s, VertexId t);

}  // namespace storient
