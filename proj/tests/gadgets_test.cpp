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

#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "storient/error.hpp"
#include "storient/gadgets.hpp"
#include "storient/nto_decide.hpp"

namespace {

using namespace storient;

// Directions of chosen edges in every non-transitive st-orientation.
std::set<std::vector<bool>> classes(const Graph& g, VertexId s, VertexId t,
                                    const std::vector<std::pair<EdgeId, VertexId>>& probes) {
  std::set<std::vector<bool>> out;
  const EnumerationResult r =
      enumerate_orientations(g, s, t, EnumerationMode::kNonTransitive, [&](const StOrientation& o) {
        EXPECT_TRUE(oracle::is_st_orientation(g, o, s, t));
        EXPECT_TRUE(oracle::transitive_edges(g, o).empty());
        std::vector<bool> key;
        for (const auto& [e, tail] : probes) key.push_back(o.arcs[e].tail == tail);
        out.insert(key);
        return true;
      });
  EXPECT_TRUE(r.complete);
  return out;
}

struct Harness {
  Graph graph;
  EdgeId e1 = kNone;
  EdgeId e9 = kNone;
  EdgeId e10 = kNone;
  ForkGadget fork;
};

// Fork with e1, e9 and e10 tied to the middles of three s-t paths.
Harness fork_harness(int path_length) {
  GadgetBuilder b;
  Harness h;
  h.fork = b.add_fork();
  h.e1 = b.add_edge(b.add_st_path(path_length), h.fork.a, EdgeRole::kAttach);
  h.e9 = b.add_edge(h.fork.w, b.add_st_path(path_length), EdgeRole::kGadget);
  h.e10 = b.add_edge(h.fork.z, b.add_st_path(path_length), EdgeRole::kGadget);
  h.graph = b.graph();
  return h;
}

TEST(Fork, Degrees) {
  const StandaloneFork f = build_fork();
  EXPECT_EQ(f.graph.vertex_count(), 9);
  EXPECT_EQ(f.graph.edge_count(), 10);
  const std::map<VertexId, int> expected{{f.fork.a, 4}, {f.fork.p, 2}, {f.fork.q, 2},
                                         {f.fork.v, 3}, {f.fork.w, 3}, {f.fork.z, 3}};
  for (const auto& [v, d] : expected) EXPECT_EQ(f.graph.degree(v), d) << v;
  for (VertexId end : {f.end1, f.end9, f.end10}) EXPECT_EQ(f.graph.degree(end), 1);
  for (int i = 1; i <= 10; ++i) EXPECT_NE(f.fork.e[i], kNone) << i;
  EXPECT_EQ(f.graph.edge(f.fork.e[1]), (Edge{f.end1, f.fork.a}));
}

TEST(Fork, FourPathHarnessShowsBothPatterns) {
  const Harness h = fork_harness(4);
  // e1 entering a, e9 leaving w, e10 leaving z.
  const auto found = classes(h.graph, 0, 1, {{h.e1, h.graph.opposite(h.e1, h.fork.a)}, {h.e9, h.fork.w}, {h.e10, h.fork.z}});
  const std::set<std::vector<bool>> expected{{true, true, true}, {false, false, false}};
  EXPECT_EQ(found, expected);
}

TEST(Fork, TwoPathHarnessHasNoNonTransitiveOrientation) {
  const Harness h = fork_harness(2);
  const auto found = classes(h.graph, 0, 1, {{h.e1, h.graph.opposite(h.e1, h.fork.a)}, {h.e9, h.fork.w}, {h.e10, h.fork.z}});
  EXPECT_TRUE(found.empty());
}

TEST(VariableGadget, TwoOppositeClasses) {
  const VariableInstance v = build_variable_gadget();
  const auto found = classes(v.instance.graph, v.instance.s, v.instance.t,
                             {{v.x, v.gadget.x_port}, {v.not_x, v.gadget.not_x_port}});
  const std::set<std::vector<bool>> expected{{true, false}, {false, true}};
  EXPECT_EQ(found, expected);
}

TEST(VariableGadget, Shape) {
  const VariableInstance v = build_variable_gadget();
  const Graph& g = v.instance.graph;
  EXPECT_EQ(g.vertex_count(), 26);
  EXPECT_EQ(g.edge_count(), 35);
  EXPECT_EQ(v.instance.roles[v.x], EdgeRole::kTerminator);
  EXPECT_EQ(v.instance.roles[v.not_x], EdgeRole::kTerminator);
  EXPECT_EQ(v.gadget.x_port, v.gadget.fx.z);
  EXPECT_EQ(v.gadget.not_x_port, v.gadget.fnx.w);
  int shared = 0;
  for (EdgeRole r : v.instance.roles) shared += r == EdgeRole::kShared;
  EXPECT_EQ(shared, 1);
  EXPECT_TRUE(oracle::biconnected_with(g, v.instance.s, v.instance.t));
}

TEST(Split, TwoIsOneFork) {
  const SplitInstance sp = build_split(2);
  ASSERT_EQ(sp.split.forks.size(), 1u);
  EXPECT_EQ(sp.split.output_ports, (std::vector<VertexId>{sp.split.forks[0].z, sp.split.forks[0].w}));
}

TEST(Split, RejectsSmallK) {
  for (int k : {-1, 0, 1}) {
    try {
      build_split(k);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidK);
    }
  }
}

TEST(Split, OutputsFollowTheInput) {
  for (int k = 2; k <= 4; ++k) {
    const SplitInstance sp = build_split(k);
    ASSERT_EQ(static_cast<int>(sp.outputs.size()), k);
    ASSERT_EQ(static_cast<int>(sp.split.forks.size()), k - 1);
    const Graph& g = sp.instance.graph;
    std::vector<std::pair<EdgeId, VertexId>> probes{{sp.split.input, g.opposite(sp.split.input, sp.split.forks[0].a)}};
    for (int i = 0; i < k; ++i) probes.push_back({sp.outputs[i], sp.split.output_ports[i]});
    const auto found = classes(g, sp.instance.s, sp.instance.t, probes);
    const std::set<std::vector<bool>> expected{std::vector<bool>(k + 1, true), std::vector<bool>(k + 1, false)};
    EXPECT_EQ(found, expected) << "k=" << k;
  }
}

// Vertex and edge totals recomputed from literal occurrence counts.
std::pair<int, int> expected_size(const Nae3SatFormula& f) {
  std::map<int, int> uses;
  for (const auto& c : f.clauses) {
    for (int lit : c) ++uses[lit];
  }
  int vertices = 2 + 18 * f.variables + static_cast<int>(f.clauses.size());
  int edges = 25 * f.variables;
  for (int x = 1; x <= f.variables; ++x) {
    for (int lit : {x, -x}) {
      const int k = uses[lit];
      if (k == 0) {
        vertices += 3;
        edges += 5;
      } else if (k == 1) {
        edges += 1;
      } else {
        vertices += 6 * (k - 1);
        edges += 1 + 7 * (k - 1) + (k - 2) + k;
      }
    }
  }
  return {vertices, edges};
}

TEST(Reduce, OneClauseThreeVariables) {
  const Nae3SatFormula f{3, {{1, 2, 3}}};
  const NtoInstance inst = reduce_nae3sat(f);
  EXPECT_EQ(inst.variables.size(), 3u);
  EXPECT_EQ(inst.clause_vertices.size(), 1u);
  for (EdgeRole r : inst.roles) {
    EXPECT_NE(r, EdgeRole::kSplitLink);
    EXPECT_NE(r, EdgeRole::kSplitOutput);
  }
  EXPECT_EQ(inst.graph.degree(inst.clause_vertices[0]), 3);
}

TEST(Reduce, TripleLiteralUsesOneSplit) {
  const NtoInstance inst = reduce_nae3sat({1, {{1, 1, 1}}});
  int outputs = 0;
  int links = 0;
  for (EdgeRole r : inst.roles) {
    outputs += r == EdgeRole::kSplitOutput;
    links += r == EdgeRole::kSplitLink;
  }
  EXPECT_EQ(outputs, 3);
  EXPECT_EQ(links, 1);
}

TEST(Reduce, SizesMatchClosedForm) {
  const std::vector<Nae3SatFormula> formulas{
      {1, {{1, 1, 1}}}, {3, {{1, 2, 3}}}, {2, {{1, -2, 1}, {-1, 2, 2}}}, {4, {{1, 2, 3}, {-1, -2, 4}, {1, -3, -4}}}};
  for (const auto& f : formulas) {
    const NtoInstance inst = reduce_nae3sat(f);
    const auto [v, e] = expected_size(f);
    EXPECT_EQ(inst.graph.vertex_count(), v);
    EXPECT_EQ(inst.graph.edge_count(), e);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      for (EdgeId edge : inst.clause_edges[c]) {
        const Edge& ed = inst.graph.edge(edge);
        EXPECT_TRUE(ed.u == inst.clause_vertices[c] || ed.v == inst.clause_vertices[c]);
      }
    }
  }
}

TEST(Reduce, RejectsBadLiterals) {
  EXPECT_THROW(reduce_nae3sat({1, {{1, 2, 1}}}), Error);
  EXPECT_THROW(reduce_nae3sat({2, {{1, 0, 2}}}), Error);
}

TEST(Nae3Sat, BruteForceExamples) {
  EXPECT_FALSE(nae3sat_brute({1, {{1, 1, 1}}}));
  EXPECT_TRUE(nae3sat_brute({1, {{1, 1, -1}}}));
  EXPECT_TRUE(nae3sat_brute({3, {{1, 2, 3}}}));
  EXPECT_TRUE(nae3sat_brute({0, {}}));
  EXPECT_THROW(nae3sat_brute({26, {}}), Error);
}

TEST(Nae3Sat, ReadWriteRoundtrip) {
  std::istringstream in("c sample\np nae3sat 3 2\n1 -2 3 0\n-1 2 2\n");
  const Nae3SatFormula f = read_nae3sat(in);
  EXPECT_EQ(f.variables, 3);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[1], (std::array<int, 3>{-1, 2, 2}));
  std::ostringstream out;
  write_nae3sat(out, f);
  std::istringstream back(out.str());
  const Nae3SatFormula g = read_nae3sat(back);
  EXPECT_EQ(g.clauses, f.clauses);
}

TEST(Nae3Sat, RejectsMalformedText) {
  for (const char* text : {"", "p nae3sat 2 1\n", "p nae3sat 2 1\n1 2\n", "p nae3sat 2 1\n1 2 5\n", "1 2 3\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_nae3sat(in), Error) << text;
  }
}

TEST(Reduce, EquivalentOnSmallFormulas) {
  const std::vector<Nae3SatFormula> formulas{{1, {{1, 1, 1}}},         {3, {{1, 2, 3}}},          {1, {{1, 1, -1}}},
                                             {2, {{1, 2, -1}, {1, 1, 2}}}, {2, {{1, 1, 1}, {1, 2, -2}}}, {2, {{1, 2, 2}, {-1, -2, -2}}}};
  for (const auto& f : formulas) {
    const NtoInstance inst = reduce_nae3sat(f);
    const NtoResult r = nto_decide(inst.graph, inst.s, inst.t);
    ASSERT_NE(r.status, NtoStatus::kBudgetExhausted);
    EXPECT_EQ(r.status == NtoStatus::kSat, nae3sat_brute(f));
    if (r.witness) {
      EXPECT_TRUE(oracle::is_st_orientation(inst.graph, *r.witness, inst.s, inst.t));
      EXPECT_TRUE(oracle::transitive_edges(inst.graph, *r.witness).empty());
      // The literal directions of the witness satisfy the formula.
      std::vector<int> value(f.variables + 1);
      for (int x = 1; x <= f.variables; ++x) {
        const LiteralEdges& le = inst.variables[x - 1];
        value[x] = r.witness->arcs[le.x].tail == le.x_port;
        EXPECT_NE(value[x], r.witness->arcs[le.not_x].tail == le.not_x_port);
      }
      for (const auto& c : f.clauses) {
        std::set<bool> seen;
        for (int lit : c) seen.insert(lit > 0 ? value[lit] : !value[-lit]);
        EXPECT_EQ(seen.size(), 2u);
      }
    }
  }
}

}  // namespace
