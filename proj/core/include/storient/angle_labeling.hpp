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
#include <iosfwd>
#include <string>
#include <vector>

#include "storient/plane_graph.hpp"
#include "storient/st_core.hpp"

namespace storient {

enum class AngleLabel : std::uint8_t { kUnlabeled, kSmall, kFlat };

char to_char(AngleLabel label);

// S/F label per angle id of the plane graph. The outer-face angles at the two
// terminals are the only unlabeled ones in a valid labeling.
struct StLabeling {
  std::vector<AngleLabel> label;
  VertexId source = kNone;
  VertexId sink = kNone;

  friend bool operator==(const StLabeling&, const StLabeling&) = default;
};

enum class LabelingProperty { kAllLabeled, kFaceSmallCount, kVertexSmallCount, kTerminalSmall };

struct LabelingViolation {
  LabelingProperty property;
  int element;  // angle id for kAllLabeled/kTerminalSmall, face or vertex id otherwise
  std::string detail;
};

struct LabelingReport {
  bool all_labeled = true;         // every non-terminal-outer angle is S or F, those are unlabeled
  bool face_small_count = true;    // two S per internal face
  bool vertex_small_count = true;  // deg(v) - 2 S at each non-terminal vertex
  bool terminal_small = true;      // terminal angles in internal faces are S
  std::vector<LabelingViolation> violations;

  bool passed() const { return all_labeled && face_small_count && vertex_small_count && terminal_small; }
};

// Angle (e1, v, e2) is S when both edges enter or both leave v, F otherwise.
// Throws kInvalidOrientation if o is not an st-orientation with its terminals
// on the outer face.
StLabeling labels_from_orientation(const PlaneGraph& g, const StOrientation& o);

LabelingReport validate_labeling(const PlaneGraph& g, const StLabeling& labeling);

// Inverse of labels_from_orientation. Edges at the source leave it and edges at
// the sink enter it; around any other vertex an S angle keeps the direction of
// the previous edge and an F angle flips it. Directions spread from the source
// until every edge is fixed. Throws kInconsistentLabeling when two routes force
// opposite directions or the result is not an st-orientation realizing the
// labeling.
StOrientation orientation_from_labels(const PlaneGraph& g, const StLabeling& labeling);

// ".lab" format, one line per angle: "face vertex prev_edge next_edge S|F|-".
void write_lab(std::ostream& out, const PlaneGraph& g, const StLabeling& labeling);
StLabeling read_lab(std::istream& in, const PlaneGraph& g, VertexId s, VertexId t);

}  // namespace storient
