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

#include <algorithm>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "storient/error.hpp"
#include "storient/st_core.hpp"

namespace {

using namespace storient;

StOrientation orient(const Graph& g, VertexId s, VertexId t, std::initializer_list<Arc> arcs) {
  StOrientation o;
  o.source = s;
  o.sink = t;
  o.arcs.resize(g.edge_count());
  for (const Arc& a : arcs) o.arcs[*g.find_edge(a.tail, a.head)] = a;
  return o;
}

std::set<EdgeId> as_set(const std::vector<EdgeId>& v) { return {v.begin(), v.end()}; }

TEST(StNumber, TriangleIsForced) {
  const auto inst = fixture::triangle();
  const StNumbering num = st_number(inst.graph, inst.s, inst.t);
  EXPECT_EQ(num.number, (std::vector<int>{1, 2, 3}));
}

TEST(StNumber, FourCycleIsDeterministic) {
  const auto inst = fixture::four_cycle();
  const StNumbering num = st_number(inst.graph, inst.s, inst.t);
  EXPECT_EQ(num.number[0], 1);
  EXPECT_EQ(num.number[2], 4);
  EXPECT_EQ(std::set<int>({num.number[1], num.number[3]}), std::set<int>({2, 3}));
  EXPECT_EQ(st_number(inst.graph, inst.s, inst.t).number, num.number);
  EXPECT_TRUE(is_st_numbering(inst.graph, num, inst.s, inst.t));
}

TEST(StNumber, RejectsNonAdmissibleGraph) {
  const auto inst = fixture::bowtie();
  try {
    st_number(inst.graph, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
  }
}

TEST(StNumber, GeneratedInstancesYieldStOrientations) {
  for (const auto& inst : fixture::generated(200, 3, 150, 31)) {
    const StNumbering num = st_number(inst.graph, inst.s, inst.t);
    ASSERT_TRUE(is_st_numbering(inst.graph, num, inst.s, inst.t));
    const StOrientation o = orient_by_numbering(inst.graph, num);
    EXPECT_TRUE(oracle::is_st_orientation(inst.graph, o, inst.s, inst.t));
    EXPECT_TRUE(validate_st_orientation(inst.graph, o, inst.s, inst.t).passed);
    EXPECT_TRUE(incoming_edges_consecutive(inst.graph, o));
  }
}

TEST(OrientByNumbering, TriangleAndFourCycle) {
  const auto tri = fixture::triangle();
  const StOrientation o = orient_by_numbering(tri.graph, st_number(tri.graph, 0, 2));
  EXPECT_EQ(o, orient(tri.graph, 0, 2, {{0, 1}, {1, 2}, {0, 2}}));
  const auto cyc = fixture::four_cycle();
  const StOrientation c = orient_by_numbering(cyc.graph, st_number(cyc.graph, 0, 2));
  EXPECT_EQ(c, orient(cyc.graph, 0, 2, {{0, 1}, {1, 2}, {0, 3}, {3, 2}}));
}

TEST(Validate, Examples) {
  const auto tri = fixture::triangle();
  EXPECT_TRUE(validate_st_orientation(tri.graph, orient(tri.graph, 0, 2, {{0, 1}, {1, 2}, {0, 2}}), 0, 2).passed);
  const OrientationReport sink_v =
      validate_st_orientation(tri.graph, orient(tri.graph, 0, 2, {{0, 1}, {2, 1}, {0, 2}}), 0, 2);
  EXPECT_FALSE(sink_v.passed);
  EXPECT_NE(std::find(sink_v.sinks.begin(), sink_v.sinks.end(), 1), sink_v.sinks.end());
  const OrientationReport cyclic =
      validate_st_orientation(tri.graph, orient(tri.graph, 0, 2, {{0, 1}, {1, 2}, {2, 0}}), 0, 2);
  EXPECT_FALSE(cyclic.passed);
  EXPECT_FALSE(cyclic.acyclic);
}

TEST(Validate, DetectsMismatchedArcs) {
  const auto tri = fixture::triangle();
  StOrientation o = orient(tri.graph, 0, 2, {{0, 1}, {1, 2}, {0, 2}});
  std::swap(o.arcs[0], o.arcs[1]);
  const OrientationReport r = validate_st_orientation(tri.graph, o, 0, 2);
  EXPECT_FALSE(r.arcs_match_edges);
  EXPECT_FALSE(r.passed);
}

TEST(Transitive, TriangleAndFourCycle) {
  const auto tri = fixture::triangle();
  const StOrientation o = orient(tri.graph, 0, 2, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<EdgeId> st{*tri.graph.find_edge(0, 2)};
  EXPECT_EQ(transitive_edges_reach(tri.graph, o), st);
  EXPECT_EQ(transitive_edges_faces(tri.graph, o), st);
  const auto cyc = fixture::four_cycle();
  const StOrientation c = orient(cyc.graph, 0, 2, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
  EXPECT_TRUE(transitive_edges_reach(cyc.graph, c).empty());
  EXPECT_TRUE(transitive_edges_faces(cyc.graph, c).empty());
}

TEST(Transitive, ReachThrowsOnCycle) {
  const auto tri = fixture::triangle();
  try {
    transitive_edges_reach(tri.graph, orient(tri.graph, 0, 2, {{0, 1}, {1, 2}, {2, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCyclicInput);
  }
}

TEST(Transitive, FaceAndReachAgreeWithOracle) {
  int seed = 0;
  for (const auto& inst : fixture::generated(60, 3, 200, 32)) {
    const StOrientation o = oracle::random_st_orientation(inst.graph, inst.s, inst.t, ++seed);
    ASSERT_TRUE(oracle::is_st_orientation(inst.graph, o, inst.s, inst.t));
    const auto expected = oracle::transitive_edges(inst.graph, o);
    EXPECT_EQ(as_set(transitive_edges_reach(inst.graph, o)), expected);
    EXPECT_EQ(as_set(transitive_edges_faces(inst.graph, o)), expected);
  }
}

TEST(Improvement, Examples) {
  EXPECT_EQ(improvement_percent(8, 4), Rational(50));
  EXPECT_EQ(improvement_percent(0, 0), Rational(0));
  EXPECT_EQ(improvement_percent(5, 0), Rational(100));
  EXPECT_EQ(improvement_percent(3, 1), Rational(200, 3));
  EXPECT_THROW(improvement_percent(-1, 0), Error);
  EXPECT_THROW(improvement_percent(1, 2), Error);
}

TEST(OriFormat, Roundtrip) {
  for (const auto& inst : fixture::generated(10, 3, 60, 33)) {
    const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
    std::ostringstream out;
    write_ori(out, o);
    std::istringstream in(out.str());
    EXPECT_EQ(read_ori(in, inst.graph, inst.s, inst.t), o);
  }
}

TEST(OriFormat, RejectsBadLines) {
  const auto tri = fixture::triangle();
  std::istringstream missing("0: 0 -> 1\n");
  EXPECT_THROW(read_ori(missing, tri.graph, 0, 2), Error);
  std::istringstream wrong("0: 0 -> 2\n1: 0 -> 1\n2: 1 -> 2\n");
  EXPECT_THROW(read_ori(wrong, tri.graph, 0, 2), Error);
}

TEST(TopologicalOrder, RespectsArcs) {
  for (const auto& inst : fixture::generated(20, 3, 100, 34)) {
    const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
    const auto order = topological_order(inst.graph, o);
    ASSERT_TRUE(order.has_value());
    std::vector<int> pos(inst.graph.vertex_count());
    for (int i = 0; i < static_cast<int>(order->size()); ++i) pos[(*order)[i]] = i;
    for (const Arc& a : o.arcs) EXPECT_LT(pos[a.tail], pos[a.head]);
  }
}

}  // namespace
