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
#include <utility>
#include <vector>

#include "storient/graph.hpp"

namespace storient {

using AngleId = int;

// One step of a face walk: leave `vertex` along `edge`.
struct FaceStep {
  EdgeId edge = kNone;
  VertexId vertex = kNone;
};

struct Face {
  FaceId id = kNone;
  std::vector<FaceStep> boundary;
  bool is_outer = false;

  int degree() const { return static_cast<int>(boundary.size()); }
};

// The corner of face `face` at `vertex`, between the boundary edges
// `prev_edge` (arriving) and `next_edge` (leaving).
struct Angle {
  FaceId face = kNone;
  EdgeId prev_edge = kNone;
  VertexId vertex = kNone;
  EdgeId next_edge = kNone;
};

using VertexPair = std::pair<VertexId, VertexId>;

// Connected plane graph given by a clockwise rotation system. Incidence lists
// inherited from Graph are the rotations. Faces are traced by taking, at the
// head of each dart, the edge that follows it clockwise; every face then lies
// to the left of its darts. Immutable after construction.
class PlaneGraph : public Graph {
 public:
  PlaneGraph() = default;

  // rotations[v] lists the ids of the edges incident to v in clockwise order.
  // The outer face is the largest face containing both hint vertices (ties to
  // the smaller face id), or the largest face overall when no face does.
  static PlaneGraph build(int vertex_count, std::span<const Edge> edges,
                          const std::vector<std::vector<EdgeId>>& rotations,
                          std::optional<VertexPair> outer_hint = std::nullopt);

  // Rotations as clockwise neighbor lists. Edge ids are assigned in order of
  // first appearance scanning vertices by increasing id.
  static PlaneGraph from_neighbor_rotations(const std::vector<std::vector<VertexId>>& rotations,
                                            std::optional<VertexPair> outer_hint = std::nullopt);

  std::span<const EdgeId> rotation(VertexId v) const { return incident(v); }
  std::vector<std::vector<VertexId>> neighbor_rotations() const;

  // Position of e in the rotation of its endpoint v.
  int rotation_index(EdgeId e, VertexId v) const { return rotation_pos_[dart(e, v)]; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const Face& face(FaceId f) const { return faces_[f]; }
  std::span<const Face> faces() const { return faces_; }
  FaceId outer_face() const { return outer_face_; }
  bool is_internal(FaceId f) const { return f != outer_face_; }

  // Face to the left of the dart that leaves `from` along e.
  FaceId face_of_dart(EdgeId e, VertexId from) const { return dart_face_[dart(e, from)]; }

  int angle_count() const { return static_cast<int>(angles_.size()); }
  const Angle& angle(AngleId a) const { return angles_[a]; }
  std::span<const Angle> angles() const { return angles_; }

  // Angle between rotation(v)[i] and rotation(v)[i + 1 mod deg(v)].
  AngleId angle_at(VertexId v, int rotation_index) const { return vertex_angles_[v][rotation_index]; }
  std::span<const AngleId> angles_of_vertex(VertexId v) const { return vertex_angles_[v]; }

  // Aligned with face(f).boundary: entry i is the angle at boundary[i].vertex.
  std::span<const AngleId> angles_of_face(FaceId f) const { return face_angles_[f]; }

  bool on_face(VertexId v, FaceId f) const;
  std::vector<FaceId> common_faces(VertexId a, VertexId b) const;

 private:
  int dart(EdgeId e, VertexId from) const { return 2 * e + (edges_[e].u == from ? 0 : 1); }
  void trace();
  void choose_outer(std::optional<VertexPair> hint);

  std::vector<int> rotation_pos_;
  std::vector<FaceId> dart_face_;
  std::vector<Face> faces_;
  std::vector<Angle> angles_;
  std::vector<std::vector<AngleId>> vertex_angles_;
  std::vector<std::vector<AngleId>> face_angles_;
  FaceId outer_face_ = kNone;
};

// True iff g plus the edge (s,t) is biconnected and some face of g has both
// s and t on its boundary. Throws kInvalidVertex for bad ids or s == t.
bool check_st_admissible(const PlaneGraph& g, VertexId s, VertexId t);

// Admissible and both terminals on the designated outer face.
bool st_on_outer_face(const PlaneGraph& g, VertexId s, VertexId t);

// Face walk on an arbitrary rotation system; exposed for the embedding tests.
std::vector<Face> trace_faces(const PlaneGraph& g);

// Rebuilds clockwise rotations from face boundaries alone, with each rotation
// starting at the same edge as g.rotation(v). Inverse of the face walk.
std::vector<std::vector<EdgeId>> rotations_from_faces(const PlaneGraph& g);

}  // namespace storient
