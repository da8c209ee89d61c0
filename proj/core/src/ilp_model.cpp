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

#include "storient/ilp_model.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "storient/error.hpp"

namespace storient {

namespace {

// Appends "_2", "_3", ... to repeated base names.
class NameTable {
 public:
  std::string take(const std::string& base) {
    const int k = ++uses_[base];
    return k == 1 ? base : base + "_" + std::to_string(k);
  }

 private:
  std::map<std::string, int> uses_;
};

}  // namespace

int IlpModel::row_count(RowKind kind) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [kind](const Row& r) { return r.kind == kind; }));
}

IlpModel build_model(const PlaneGraph& g, VertexId s, VertexId t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t || !st_on_outer_face(g, s, t)) {
    throw Error(ErrorCode::kNotAdmissible, "terminals must be admissible and on the outer face");
  }
  IlpModel m;
  m.s = s;
  m.t = t;
  NameTable names;
  m.var_of_angle.assign(g.angle_count(), -1);
  const auto terminal = [&](VertexId v) { return v == s || v == t; };

  for (AngleId a = 0; a < g.angle_count(); ++a) {
    const Angle& angle = g.angle(a);
    if (terminal(angle.vertex) && !g.is_internal(angle.face)) continue;
    Variable x;
    x.kind = VarKind::kX;
    x.vertex = angle.vertex;
    x.face = angle.face;
    x.angle = a;
    x.name = names.take("x_v" + std::to_string(angle.vertex) + "_f" + std::to_string(angle.face));
    m.var_of_angle[a] = static_cast<int>(m.vars.size());
    m.vars.push_back(std::move(x));
    ++m.x_count;
  }
  // y per boundary step of each internal face; y_of_step[f][i] covers boundary[i].edge.
  std::vector<std::vector<int>> y_of_step(g.face_count());
  for (const Face& f : g.faces()) {
    if (!g.is_internal(f.id)) continue;
    for (const FaceStep& step : f.boundary) {
      Variable y;
      y.kind = VarKind::kY;
      y.face = f.id;
      y.edge = step.edge;
      y.name = names.take("y_e" + std::to_string(step.edge) + "_f" + std::to_string(f.id));
      y_of_step[f.id].push_back(static_cast<int>(m.vars.size()));
      m.vars.push_back(std::move(y));
      ++m.y_count;
    }
  }
  std::vector<int> z_of_edge(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Variable z;
    z.kind = VarKind::kZ;
    z.edge = e;
    z.name = names.take("z_e" + std::to_string(e));
    z_of_edge[e] = static_cast<int>(m.vars.size());
    m.objective.push_back(z_of_edge[e]);
    m.vars.push_back(std::move(z));
    ++m.z_count;
  }

  NameTable row_names;
  for (const Face& f : g.faces()) {
    if (!g.is_internal(f.id)) continue;
    Row r;
    r.kind = RowKind::kFaceSmall;
    r.name = row_names.take("face_f" + std::to_string(f.id));
    for (AngleId a : g.angles_of_face(f.id)) r.terms.push_back({m.var_of_angle[a], 1});
    r.sense = Sense::kEq;
    r.rhs = 2;
    m.rows.push_back(std::move(r));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (terminal(v)) continue;
    Row r;
    r.kind = RowKind::kVertexSmall;
    r.name = row_names.take("vertex_v" + std::to_string(v));
    for (AngleId a : g.angles_of_vertex(v)) r.terms.push_back({m.var_of_angle[a], 1});
    r.sense = Sense::kEq;
    r.rhs = g.degree(v) - 2;
    m.rows.push_back(std::move(r));
  }
  for (VertexId v : {s, t}) {
    for (AngleId a : g.angles_of_vertex(v)) {
      if (!g.is_internal(g.angle(a).face)) continue;
      Row r;
      r.kind = v == s ? RowKind::kSourceSmall : RowKind::kSinkSmall;
      r.name = row_names.take((v == s ? "source_" : "sink_") + m.vars[m.var_of_angle[a]].name);
      r.terms.push_back({m.var_of_angle[a], 1});
      r.sense = Sense::kEq;
      r.rhs = 1;
      m.rows.push_back(std::move(r));
    }
  }
  for (const Face& f : g.faces()) {
    if (!g.is_internal(f.id)) continue;
    const auto angles = g.angles_of_face(f.id);
    const int len = f.degree();
    for (int i = 0; i < len; ++i) {
      const int y = y_of_step[f.id][i];
      Row r;
      r.kind = RowKind::kPairLink;
      r.name = row_names.take("pair_" + m.vars[y].name);
      r.terms = {{m.var_of_angle[angles[i]], 1}, {m.var_of_angle[angles[(i + 1) % len]], 1}, {y, -1}};
      r.sense = Sense::kLe;
      r.rhs = 1;
      m.rows.push_back(std::move(r));
    }
  }
  for (const Face& f : g.faces()) {
    if (!g.is_internal(f.id)) continue;
    for (int i = 0; i < f.degree(); ++i) {
      const int y = y_of_step[f.id][i];
      Row r;
      r.kind = RowKind::kTransitive;
      r.name = row_names.take("trans_" + m.vars[y].name);
      r.terms = {{z_of_edge[f.boundary[i].edge], 1}, {y, -1}};
      r.sense = Sense::kGe;
      r.rhs = 0;
      m.rows.push_back(std::move(r));
    }
  }
  return m;
}

}  // namespace storient
