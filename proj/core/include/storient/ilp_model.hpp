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

#include <string>
#include <vector>

#include "storient/plane_graph.hpp"

namespace storient {

enum class VarKind { kX, kY, kZ };

// x: one binary per angle in scope (angle S). y: one binary per boundary edge
// of an internal face (both ends S in that face). z: one integer per edge
// (edge transitive).
struct Variable {
  VarKind kind = VarKind::kX;
  std::string name;
  VertexId vertex = kNone;  // x
  FaceId face = kNone;      // x, y
  EdgeId edge = kNone;      // y, z
  AngleId angle = kNone;    // x
};

enum class RowKind {
  kFaceSmall,    // sum of x over an internal face = 2
  kVertexSmall,  // sum of x at v = deg(v) - 2, v not a terminal
  kSourceSmall,  // x = 1 at each internal angle of s
  kSinkSmall,    // x = 1 at each internal angle of t
  kPairLink,     // x_u + x_v - y <= 1
  kTransitive,   // z - y >= 0
};

enum class Sense { kLe, kGe, kEq };

struct Term {
  int var = 0;
  int coef = 0;
};

struct Row {
  RowKind kind = RowKind::kFaceSmall;
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kEq;
  int rhs = 0;
};

struct IlpModel {
  VertexId s = kNone;
  VertexId t = kNone;
  std::vector<Variable> vars;
  std::vector<Row> rows;
  std::vector<int> objective;     // variables with coefficient 1, the z in edge order
  std::vector<int> var_of_angle;  // -1 for the unlabeled outer angles at s and t
  int x_count = 0;
  int y_count = 0;
  int z_count = 0;

  int row_count(RowKind kind) const;
};

// Throws kNotAdmissible unless s,t is admissible with both on the outer face.
IlpModel build_model(const PlaneGraph& g, VertexId s, VertexId t);

// CPLEX LP text. Deterministic for a fixed model.
std::string export_lp(const IlpModel& model);

}  // namespace storient
