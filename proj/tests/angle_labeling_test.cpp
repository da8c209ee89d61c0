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

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "storient/angle_labeling.hpp"
#include "storient/error.hpp"

namespace {

using namespace storient;

AngleLabel label_at(const PlaneGraph& g, const StLabeling& l, VertexId v, bool outer) {
  for (AngleId a : g.angles_of_vertex(v)) {
    if ((g.angle(a).face == g.outer_face()) == outer) return l.label[a];
  }
  return AngleLabel::kUnlabeled;
}

TEST(Labels, TriangleFromOrientation) {
  const auto tri = fixture::triangle();
  const StOrientation o = heuristic_orientation(tri.graph, tri.s, tri.t);
  const StLabeling l = labels_from_orientation(tri.graph, o);
  EXPECT_EQ(label_at(tri.graph, l, 0, false), AngleLabel::kSmall);
  EXPECT_EQ(label_at(tri.graph, l, 2, false), AngleLabel::kSmall);
  EXPECT_EQ(label_at(tri.graph, l, 1, false), AngleLabel::kFlat);
  EXPECT_EQ(label_at(tri.graph, l, 1, true), AngleLabel::kFlat);
  EXPECT_EQ(label_at(tri.graph, l, 0, true), AngleLabel::kUnlabeled);
  EXPECT_EQ(label_at(tri.graph, l, 2, true), AngleLabel::kUnlabeled);
  EXPECT_TRUE(validate_labeling(tri.graph, l).passed());
}

TEST(Labels, TriangleDecodes) {
  const auto tri = fixture::triangle();
  StLabeling l;
  l.source = 0;
  l.sink = 2;
  l.label.assign(tri.graph.angle_count(), AngleLabel::kUnlabeled);
  for (AngleId a = 0; a < tri.graph.angle_count(); ++a) {
    const Angle& ang = tri.graph.angle(a);
    const bool outer = ang.face == tri.graph.outer_face();
    if (ang.vertex == 1) l.label[a] = AngleLabel::kFlat;
    else if (!outer) l.label[a] = AngleLabel::kSmall;
  }
  const StOrientation o = orientation_from_labels(tri.graph, l);
  EXPECT_EQ(o.arcs[*tri.graph.find_edge(0, 1)], (Arc{0, 1}));
  EXPECT_EQ(o.arcs[*tri.graph.find_edge(1, 2)], (Arc{1, 2}));
  EXPECT_EQ(o.arcs[*tri.graph.find_edge(0, 2)], (Arc{0, 2}));
}

TEST(Labels, FourCycleTwoPaths) {
  const auto cyc = fixture::four_cycle();
  const StOrientation o = heuristic_orientation(cyc.graph, cyc.s, cyc.t);
  const StLabeling l = labels_from_orientation(cyc.graph, o);
  EXPECT_EQ(label_at(cyc.graph, l, 1, false), AngleLabel::kFlat);
  EXPECT_EQ(label_at(cyc.graph, l, 3, false), AngleLabel::kFlat);
  EXPECT_EQ(orientation_from_labels(cyc.graph, l), o);
  EXPECT_TRUE(oracle::transitive_edges(cyc.graph, o).empty());
}

TEST(Validate, ThreeSmallAnglesInTriangle) {
  const auto tri = fixture::triangle();
  StLabeling l = labels_from_orientation(tri.graph, heuristic_orientation(tri.graph, 0, 2));
  for (AngleId a = 0; a < tri.graph.angle_count(); ++a) {
    if (tri.graph.angle(a).face != tri.graph.outer_face()) l.label[a] = AngleLabel::kSmall;
  }
  const LabelingReport r = validate_labeling(tri.graph, l);
  EXPECT_FALSE(r.face_small_count);
  EXPECT_FALSE(r.passed());
}

TEST(Validate, FlippedAngleAtInternalVertex) {
  const auto gen = generate({30, 0.5, 41});
  StLabeling l = labels_from_orientation(gen.graph, heuristic_orientation(gen.graph, gen.s, gen.t));
  VertexId v = 0;
  while (v == gen.s || v == gen.t || gen.graph.degree(v) < 3) ++v;
  const AngleId a = gen.graph.angles_of_vertex(v)[0];
  l.label[a] = l.label[a] == AngleLabel::kSmall ? AngleLabel::kFlat : AngleLabel::kSmall;
  const LabelingReport r = validate_labeling(gen.graph, l);
  EXPECT_FALSE(r.vertex_small_count);
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(orientation_from_labels(gen.graph, l), Error);
}

TEST(Validate, UnlabeledAngleAndTerminalRule) {
  const auto tri = fixture::triangle();
  const StLabeling good = labels_from_orientation(tri.graph, heuristic_orientation(tri.graph, 0, 2));
  StLabeling missing = good;
  for (AngleId a = 0; a < tri.graph.angle_count(); ++a) {
    if (tri.graph.angle(a).vertex == 1) missing.label[a] = AngleLabel::kUnlabeled;
  }
  EXPECT_FALSE(validate_labeling(tri.graph, missing).all_labeled);
  StLabeling terminal = good;
  for (AngleId a = 0; a < tri.graph.angle_count(); ++a) {
    const Angle& ang = tri.graph.angle(a);
    if (ang.vertex == 0 && ang.face != tri.graph.outer_face()) terminal.label[a] = AngleLabel::kFlat;
  }
  EXPECT_FALSE(validate_labeling(tri.graph, terminal).terminal_small);
}

TEST(Roundtrip, OrientationToLabelsAndBack) {
  std::uint64_t seed = 0;
  for (const auto& inst : fixture::generated(200, 3, 120, 42)) {
    const StOrientation o = oracle::random_st_orientation(inst.graph, inst.s, inst.t, ++seed);
    const StLabeling l = labels_from_orientation(inst.graph, o);
    ASSERT_TRUE(validate_labeling(inst.graph, l).passed());
    const StOrientation back = orientation_from_labels(inst.graph, l);
    EXPECT_EQ(back, o);
    EXPECT_EQ(labels_from_orientation(inst.graph, back), l);
  }
}

TEST(Roundtrip, RejectsNonStOrientation) {
  const auto tri = fixture::triangle();
  StOrientation o = heuristic_orientation(tri.graph, 0, 2);
  const EdgeId e = *tri.graph.find_edge(1, 2);
  o.arcs[e] = {2, 1};
  try {
    labels_from_orientation(tri.graph, o);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kInvalidOrientation);
  }
}

TEST(LabFormat, Roundtrip) {
  for (const auto& inst : fixture::generated(10, 3, 60, 43)) {
    const StLabeling l = labels_from_orientation(inst.graph, heuristic_orientation(inst.graph, inst.s, inst.t));
    std::ostringstream out;
    write_lab(out, inst.graph, l);
    std::istringstream in(out.str());
    EXPECT_EQ(read_lab(in, inst.graph, inst.s, inst.t), l);
  }
}

TEST(LabFormat, RejectsUnknownLabel) {
  const auto tri = fixture::triangle();
  const StLabeling l = labels_from_orientation(tri.graph, heuristic_orientation(tri.graph, 0, 2));
  std::ostringstream out;
  write_lab(out, tri.graph, l);
  std::string text = out.str();
  const auto pos = text.find_first_of("SF");
  text[pos] = 'Q';
  std::istringstream in(text);
  EXPECT_THROW(read_lab(in, tri.graph, 0, 2), Error);
}

}  // namespace
