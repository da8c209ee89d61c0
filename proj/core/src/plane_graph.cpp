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

#include "storient/plane_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "storient/error.hpp"

namespace storient {

namespace {

std::string pair_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

PlaneGraph PlaneGraph::build(int vertex_count, std::span<const Edge> edges,
                             const std::vector<std::vector<EdgeId>>& rotations,
                             std::optional<VertexPair> outer_hint) {
  if (vertex_count < 2) throw Error(ErrorCode::kInvalidInput, "need at least two vertices");
  if (static_cast<int>(rotations.size()) != vertex_count) {
    throw Error(ErrorCode::kInvalidInput, "rotation count differs from vertex count");
  }
  PlaneGraph g;
  g.incident_.resize(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);

  for (VertexId v = 0; v < vertex_count; ++v) {
    std::vector<EdgeId> expected = g.incident_[v];
    std::vector<EdgeId> given = rotations[v];
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (expected != given) {
      throw Error(ErrorCode::kInvalidInput,
                  "rotation of vertex " + std::to_string(v) + " does not list its incident edges");
    }
    g.incident_[v] = rotations[v];
  }
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedGraph, "embedding must be connected");

  g.rotation_pos_.assign(2 * g.edge_count(), kNone);
  for (VertexId v = 0; v < vertex_count; ++v) {
    for (int i = 0; i < g.degree(v); ++i) g.rotation_pos_[g.dart(g.incident_[v][i], v)] = i;
  }
  g.trace();
  const int euler = g.vertex_count() - g.edge_count() + g.face_count();
  if (euler != 2) {
    throw Error(ErrorCode::kEulerViolation,
                "V - E + F = " + std::to_string(euler) + ", rotation system is not planar");
  }
  g.choose_outer(outer_hint);
  return g;
}

PlaneGraph PlaneGraph::from_neighbor_rotations(const std::vector<std::vector<VertexId>>& rotations,
                                               std::optional<VertexPair> outer_hint) {
  const int n = static_cast<int>(rotations.size());
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeId>> edge_rot(n);
  std::unordered_map<long long, EdgeId> ids;
  auto key = [n](VertexId a, VertexId b) {
    return static_cast<long long>(std::min(a, b)) * n + std::max(a, b);
  };
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rotations[v]) {
      if (w < 0 || w >= n || w == v) {
        throw Error(ErrorCode::kInvalidVertex, "bad neighbor " + std::to_string(w) + " of " +
                                                   std::to_string(v));
      }
      const auto [it, fresh] = ids.try_emplace(key(v, w), static_cast<EdgeId>(edges.size()));
      if (fresh) {
        edges.push_back({std::min(v, w), std::max(v, w)});
      } else if (std::find(edge_rot[v].begin(), edge_rot[v].end(), it->second) != edge_rot[v].end()) {
        throw Error(ErrorCode::kDuplicateEdge, "neighbor listed twice: " + pair_str(v, w));
      }
      edge_rot[v].push_back(it->second);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rotations[v]) {
      if (std::find(rotations[w].begin(), rotations[w].end(), v) == rotations[w].end()) {
        throw Error(ErrorCode::kInvalidInput, "inconsistent rotations: " + std::to_string(v) +
                                                  " lists " + std::to_string(w) + " but not vice versa");
      }
    }
  }
  return build(n, edges, edge_rot, outer_hint);
}

std::vector<std::vector<VertexId>> PlaneGraph::neighbor_rotations() const {
  std::vector<std::vector<VertexId>> out(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (EdgeId e : rotation(v)) out[v].push_back(opposite(e, v));
  }
  return out;
}

void PlaneGraph::trace() {
  const int darts = 2 * edge_count();
  dart_face_.assign(darts, kNone);
  faces_.clear();
  for (int start = 0; start < darts; ++start) {
    if (dart_face_[start] != kNone) continue;
    Face face;
    face.id = face_count();
    int d = start;
    do {
      dart_face_[d] = face.id;
      const EdgeId e = d / 2;
      const VertexId from = (d % 2 == 0) ? edges_[e].u : edges_[e].v;
      face.boundary.push_back({e, from});
      const VertexId head = opposite(e, from);
      const int pos = rotation_pos_[dart(e, head)];
      const EdgeId next = incident_[head][(pos + 1) % degree(head)];
      d = dart(next, head);
    } while (d != start);
    faces_.push_back(std::move(face));
  }

  angles_.clear();
  vertex_angles_.assign(vertex_count(), {});
  for (VertexId v = 0; v < vertex_count(); ++v) vertex_angles_[v].assign(degree(v), kNone);
  face_angles_.assign(faces_.size(), {});
  for (const Face& f : faces_) {
    const int len = f.degree();
    for (int i = 0; i < len; ++i) {
      const EdgeId prev = f.boundary[(i + len - 1) % len].edge;
      const FaceStep& step = f.boundary[i];
      const AngleId id = angle_count();
      angles_.push_back({f.id, prev, step.vertex, step.edge});
      vertex_angles_[step.vertex][rotation_pos_[dart(prev, step.vertex)]] = id;
      face_angles_[f.id].push_back(id);
    }
  }
}

void PlaneGraph::choose_outer(std::optional<VertexPair> hint) {
  FaceId best = kNone;
  if (hint) {
    for (FaceId f : common_faces(hint->first, hint->second)) {
      if (best == kNone || faces_[f].degree() > faces_[best].degree()) best = f;
    }
  }
  if (best == kNone) {
    for (const Face& f : faces_) {
      if (best == kNone || f.degree() > faces_[best].degree()) best = f.id;
    }
  }
  outer_face_ = best;
  for (Face& f : faces_) f.is_outer = (f.id == best);
}

bool PlaneGraph::on_face(VertexId v, FaceId f) const {
  const auto& b = faces_[f].boundary;
  return std::any_of(b.begin(), b.end(), [v](const FaceStep& s) { return s.vertex == v; });
}

std::vector<FaceId> PlaneGraph::common_faces(VertexId a, VertexId b) const {
  std::vector<FaceId> out;
  if (!valid_vertex(a) || !valid_vertex(b)) return out;
  for (AngleId x : vertex_angles_[a]) {
    const FaceId f = angles_[x].face;
    if (std::find(out.begin(), out.end(), f) == out.end() && on_face(b, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_st_admissible(const PlaneGraph& g, VertexId s, VertexId t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t) {
    throw Error(ErrorCode::kInvalidVertex, "bad terminals " + pair_str(s, t));
  }
  return is_biconnected_with(g, s, t) && !g.common_faces(s, t).empty();
}

bool st_on_outer_face(const PlaneGraph& g, VertexId s, VertexId t) {
  return check_st_admissible(g, s, t) && g.on_face(s, g.outer_face()) && g.on_face(t, g.outer_face());
}

std::vector<Face> trace_faces(const PlaneGraph& g) {
  std::vector<char> seen(2 * g.edge_count(), 0);
  auto dart = [&g](EdgeId e, VertexId from) { return 2 * e + (g.edge(e).u == from ? 0 : 1); };
  std::vector<Face> faces;
  for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
    for (VertexId from0 : {g.edge(e0).u, g.edge(e0).v}) {
      if (seen[dart(e0, from0)]) continue;
      Face face;
      face.id = static_cast<FaceId>(faces.size());
      EdgeId e = e0;
      VertexId from = from0;
      while (!seen[dart(e, from)]) {
        seen[dart(e, from)] = 1;
        face.boundary.push_back({e, from});
        const VertexId head = g.opposite(e, from);
        const int pos = g.rotation_index(e, head);
        e = g.rotation(head)[(pos + 1) % g.degree(head)];
        from = head;
      }
      face.is_outer = g.face_of_dart(e0, from0) == g.outer_face();
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<std::vector<EdgeId>> rotations_from_faces(const PlaneGraph& g) {
  std::vector<std::unordered_map<EdgeId, EdgeId>> next(g.vertex_count());
  for (const Face& f : g.faces()) {
    const int len = f.degree();
    for (int i = 0; i < len; ++i) {
      next[f.boundary[i].vertex][f.boundary[(i + len - 1) % len].edge] = f.boundary[i].edge;
    }
  }
  std::vector<std::vector<EdgeId>> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    EdgeId e = g.rotation(v)[0];
    for (int k = 0; k < g.degree(v); ++k) {
      rot[v].push_back(e);
      e = next[v].at(e);
    }
  }
  return rot;
}

}  // namespace storient
