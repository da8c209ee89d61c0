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

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "storient/graph.hpp"

namespace storient {

// Literals are signed, 1-based variable indices: 3 is x3, -3 is its negation.
struct Nae3SatFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws kInvalidInput on a zero literal or one outside [1, variables].
void validate_formula(const Nae3SatFormula& formula);

// `p nae3sat V C`, then one clause per line. A trailing 0 is accepted, and
// lines starting with `c` are comments. Throws kParseError.
Nae3SatFormula read_nae3sat(std::istream& in);
void write_nae3sat(std::ostream& out, const Nae3SatFormula& formula);

// True iff some assignment gives every clause a true and a false literal.
// Throws kTooLarge above 25 variables.
bool nae3sat_brute(const Nae3SatFormula& formula);

enum class EdgeRole {
  kGadget,      // inside a fork
  kPath,        // on an s-t path
  kAttach,      // e1 of a variable fork, to the middle of its path
  kShared,      // e9 of F_x, which is also e10 of F_not_x
  kLiteral,     // variable output x or not_x
  kSplitLink,   // e9 of one split fork, which is e1 of the next
  kSplitOutput, // split output toward a clause
  kTerminator,  // ties an unused literal to a fresh s-t path
};

const char* to_string(EdgeRole role);

// Fork vertices and edge ids. e[1..10] follow the usual numbering, e[0] is
// unused. The stubs e1, e9 and e10 are kNone until attached.
struct ForkGadget {
  VertexId a = kNone;
  VertexId p = kNone;
  VertexId q = kNone;
  VertexId v = kNone;
  VertexId w = kNone;
  VertexId z = kNone;
  std::array<EdgeId, 11> e{kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone};
};

// Standalone fork: a..z are vertices 0..5, and the far ends of e1, e9, e10
// are vertices 6, 7, 8. Ten edges.
struct StandaloneFork {
  Graph graph;
  ForkGadget fork;
  VertexId end1 = kNone;
  VertexId end9 = kNone;
  VertexId end10 = kNone;
};

StandaloneFork build_fork();

// Incrementally builds a reduction-style graph. Vertices 0 and 1 are s and t.
class GadgetBuilder {
 public:
  GadgetBuilder();

  VertexId s() const { return 0; }
  VertexId t() const { return 1; }

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v, EdgeRole role);

  // Six vertices and the seven inner edges; stubs left open.
  ForkGadget add_fork();

  // Path s - ... - t with `length` edges; returns the middle vertex. Length
  // must be even and at least 2.
  VertexId add_st_path(int length);

  int vertex_count() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeRole>& roles() const { return roles_; }
  Graph graph() const;

 private:
  int vertices_ = 2;
  std::vector<Edge> edges_;
  std::vector<EdgeRole> roles_;
};

// A variable gadget leaves its two literal edges open: x leaves z of F_x and
// not_x leaves w of F_not_x. The edge is "exiting" when directed away from
// that inner vertex.
struct VariableGadget {
  ForkGadget fx;
  ForkGadget fnx;
  VertexId path_x_middle = kNone;
  VertexId path_nx_middle = kNone;
  VertexId x_port = kNone;
  VertexId not_x_port = kNone;
};

VariableGadget add_variable_gadget(GadgetBuilder& b);

// Chain of k-1 forks fed by a new edge (input, a of the first fork). Output
// ports are z of each fork, then w of the last. Throws kInvalidK for k < 2.
struct SplitGadget {
  std::vector<ForkGadget> forks;
  EdgeId input = kNone;
  std::vector<VertexId> output_ports;
};

SplitGadget add_split(GadgetBuilder& b, VertexId input, int k);

// Closed instances used by tests and the CLI: every open port is tied to the
// middle of a fresh s-t path of length 4.
struct GadgetInstance {
  Graph graph;
  VertexId s = kNone;
  VertexId t = kNone;
  std::vector<EdgeRole> roles;
};

struct VariableInstance {
  GadgetInstance instance;
  VariableGadget gadget;
  EdgeId x = kNone;
  EdgeId not_x = kNone;
};

VariableInstance build_variable_gadget();

struct SplitInstance {
  GadgetInstance instance;
  SplitGadget split;
  std::vector<EdgeId> outputs;
};

SplitInstance build_split(int k);

struct LiteralEdges {
  EdgeId x = kNone;
  VertexId x_port = kNone;
  EdgeId not_x = kNone;
  VertexId not_x_port = kNone;
};

struct NtoInstance {
  Graph graph;
  VertexId s = kNone;
  VertexId t = kNone;
  std::vector<EdgeRole> roles;
  std::vector<LiteralEdges> variables;
  std::vector<VertexId> clause_vertices;
  std::vector<std::array<EdgeId, 3>> clause_edges;
};

NtoInstance reduce_nae3sat(const Nae3SatFormula& formula);

}  // namespace storient
