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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "storient/angle_labeling.hpp"
#include "storient/error.hpp"
#include "storient/ilp_model.hpp"

namespace {

using namespace storient;

TEST(Model, TriangleCounts) {
  const auto tri = fixture::triangle();
  const IlpModel m = build_model(tri.graph, tri.s, tri.t);
  EXPECT_EQ(m.x_count, 4);
  EXPECT_EQ(m.y_count, 3);
  EXPECT_EQ(m.z_count, 3);
  EXPECT_EQ(m.row_count(RowKind::kFaceSmall), 1);
  EXPECT_EQ(m.row_count(RowKind::kVertexSmall), 1);
  EXPECT_EQ(m.row_count(RowKind::kSourceSmall), 1);
  EXPECT_EQ(m.row_count(RowKind::kSinkSmall), 1);
  EXPECT_EQ(m.row_count(RowKind::kPairLink), 3);
  EXPECT_EQ(m.row_count(RowKind::kTransitive), 3);
}

TEST(Model, FourCycleCounts) {
  const auto cyc = fixture::four_cycle();
  const IlpModel m = build_model(cyc.graph, cyc.s, cyc.t);
  EXPECT_EQ(m.x_count, 6);
  EXPECT_EQ(m.y_count, 4);
  EXPECT_EQ(m.z_count, 4);
}

TEST(Model, GeneratedCountsMatchClosedForm) {
  for (const auto& inst : fixture::generated(5, 100, 100, 51)) {
    const PlaneGraph& g = inst.graph;
    const IlpModel m = build_model(g, inst.s, inst.t);
    const int e = g.edge_count();
    const int outer = g.face(g.outer_face()).degree();
    int s_angles = 0;
    int t_angles = 0;
    for (AngleId a = 0; a < g.angle_count(); ++a) {
      if (g.angle(a).face == g.outer_face()) continue;
      s_angles += g.angle(a).vertex == inst.s;
      t_angles += g.angle(a).vertex == inst.t;
    }
    EXPECT_EQ(m.x_count, 2 * e - 2);
    EXPECT_EQ(m.y_count, 2 * e - outer);
    EXPECT_EQ(m.z_count, e);
    EXPECT_EQ(m.row_count(RowKind::kFaceSmall), g.face_count() - 1);
    EXPECT_EQ(m.row_count(RowKind::kVertexSmall), g.vertex_count() - 2);
    EXPECT_EQ(m.row_count(RowKind::kSourceSmall), s_angles);
    EXPECT_EQ(m.row_count(RowKind::kSinkSmall), t_angles);
    EXPECT_EQ(s_angles, g.degree(inst.s) - 1);
    EXPECT_EQ(t_angles, g.degree(inst.t) - 1);
    EXPECT_EQ(m.row_count(RowKind::kPairLink), m.y_count);
    EXPECT_EQ(m.row_count(RowKind::kTransitive), m.y_count);
    EXPECT_EQ(static_cast<int>(m.vars.size()), m.x_count + m.y_count + m.z_count);
  }
}

TEST(Model, LabelingSatisfiesRows) {
  for (const auto& inst : fixture::generated(20, 4, 60, 52)) {
    const PlaneGraph& g = inst.graph;
    const IlpModel m = build_model(g, inst.s, inst.t);
    const StOrientation o = oracle::random_st_orientation(g, inst.s, inst.t, 7);
    const StLabeling l = labels_from_orientation(g, o);
    std::vector<int> value(m.vars.size(), 0);
    for (AngleId a = 0; a < g.angle_count(); ++a) {
      if (m.var_of_angle[a] >= 0) value[m.var_of_angle[a]] = l.label[a] == AngleLabel::kSmall;
    }
    const auto transitive = oracle::transitive_edges(g, o);
    for (std::size_t v = 0; v < m.vars.size(); ++v) {
      if (m.vars[v].kind == VarKind::kZ) value[v] = transitive.count(m.vars[v].edge);
    }
    // y as tight as the pair rows allow.
    for (const Row& r : m.rows) {
      if (r.kind == RowKind::kPairLink) value[r.terms[2].var] = value[r.terms[0].var] && value[r.terms[1].var];
    }
    for (const Row& r : m.rows) {
      int lhs = 0;
      for (const Term& t : r.terms) lhs += t.coef * value[t.var];
      switch (r.sense) {
        case Sense::kEq: EXPECT_EQ(lhs, r.rhs) << r.name; break;
        case Sense::kLe: EXPECT_LE(lhs, r.rhs) << r.name; break;
        case Sense::kGe: EXPECT_GE(lhs, r.rhs) << r.name; break;
      }
    }
  }
}

TEST(Model, RejectsTerminalsOffTheOuterFace) {
  const auto k = fixture::k4();
  try {
    build_model(k.graph, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
}

TEST(LpExport, TriangleObjective) {
  const auto tri = fixture::triangle();
  const std::string lp = export_lp(build_model(tri.graph, tri.s, tri.t));
  EXPECT_NE(lp.find("obj: z_e0 + z_e1 + z_e2\n"), std::string::npos);
}

TEST(LpExport, ParsesAndCountsRows) {
  for (const auto& inst : fixture::generated(15, 3, 150, 53)) {
    const IlpModel m = build_model(inst.graph, inst.s, inst.t);
    const std::string lp = export_lp(m);
    const oracle::LpSummary summary = oracle::parse_lp(lp);
    ASSERT_EQ(summary.error, "");
    EXPECT_EQ(summary.rows, static_cast<int>(m.rows.size()));
    EXPECT_EQ(summary.objective_terms, m.z_count);
    EXPECT_EQ(summary.generals, m.z_count);
    EXPECT_EQ(summary.binaries, m.x_count + m.y_count);
    EXPECT_EQ(export_lp(m), lp);
  }
}

TEST(LpExport, NamesAreUnique) {
  for (const auto& inst : fixture::generated(10, 3, 80, 54)) {
    const IlpModel m = build_model(inst.graph, inst.s, inst.t);
    std::set<std::string> names;
    for (const Variable& v : m.vars) EXPECT_TRUE(names.insert(v.name).second) << v.name;
  }
}

}  // namespace
