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

#include "storient/gadgets.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "storient/error.hpp"

namespace storient {

void validate_formula(const Nae3SatFormula& formula) {
  if (formula.variables < 0) throw Error(ErrorCode::kInvalidInput, "negative variable count");
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) {
      if (lit == 0 || lit > formula.variables || -lit > formula.variables) {
        throw Error(ErrorCode::kInvalidInput, "literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

Nae3SatFormula read_nae3sat(std::istream& in) {
  Nae3SatFormula formula;
  std::string line;
  bool header = false;
  int expected = 0;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      if (header || !(ls >> kind >> formula.variables >> expected) || kind != "nae3sat" ||
          formula.variables < 0 || expected < 0) {
        fail("bad header");
      }
      header = true;
      continue;
    }
    if (!header) fail("clause before header");
    std::vector<int> lits;
    ls.clear();
    ls.str(line);
    int lit = 0;
    while (ls >> lit) lits.push_back(lit);
    if (!ls.eof()) fail("non-integer token");
    if (lits.size() == 4 && lits[3] == 0) lits.pop_back();
    if (lits.size() != 3) fail("clause needs exactly three literals");
    formula.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  if (!header) throw Error(ErrorCode::kParseError, "missing header");
  if (static_cast<int>(formula.clauses.size()) != expected) {
    throw Error(ErrorCode::kParseError, "clause count does not match header");
  }
  try {
    validate_formula(formula);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return formula;
}

void write_nae3sat(std::ostream& out, const Nae3SatFormula& formula) {
  out << "p nae3sat " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const auto& c : formula.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

bool nae3sat_brute(const Nae3SatFormula& formula) {
  validate_formula(formula);
  if (formula.variables > 25) throw Error(ErrorCode::kTooLarge, "brute force supports at most 25 variables");
  const std::uint32_t limit = std::uint32_t{1} << formula.variables;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (const auto& clause : formula.clauses) {
      int trues = 0;
      for (int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        trues += (lit > 0) == value;
      }
      if (trues == 0 || trues == 3) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

const char* to_string(EdgeRole role) {
  switch (role) {
    case EdgeRole::kGadget: return "gadget";
    case EdgeRole::kPath: return "path";
    case EdgeRole::kAttach: return "attach";
    case EdgeRole::kShared: return "shared";
    case EdgeRole::kLiteral: return "literal";
    case EdgeRole::kSplitLink: return "split-link";
    case EdgeRole::kSplitOutput: return "split-output";
    case EdgeRole::kTerminator: return "terminator";
  }
  return "?";
}

namespace {

void add_inner_edges(ForkGadget& f, const std::function<EdgeId(VertexId, VertexId)>& add) {
  f.e[2] = add(f.a, f.p);
  f.e[3] = add(f.a, f.v);
  f.e[4] = add(f.a, f.q);
  f.e[5] = add(f.p, f.w);
  f.e[6] = add(f.v, f.w);
  f.e[7] = add(f.z, f.v);
  f.e[8] = add(f.q, f.z);
}

}  // namespace

StandaloneFork build_fork() {
  StandaloneFork out;
  out.graph = Graph(9);
  ForkGadget& f = out.fork;
  f.a = 0;
  f.p = 1;
  f.q = 2;
  f.v = 3;
  f.w = 4;
  f.z = 5;
  out.end1 = 6;
  out.end9 = 7;
  out.end10 = 8;
  Graph& g = out.graph;
  f.e[1] = g.add_edge(out.end1, f.a);
  add_inner_edges(f, [&](VertexId u, VertexId v) { return g.add_edge(u, v); });
  f.e[9] = g.add_edge(f.w, out.end9);
  f.e[10] = g.add_edge(f.z, out.end10);
  return out;
}

GadgetBuilder::GadgetBuilder() = default;

VertexId GadgetBuilder::add_vertex() { return vertices_++; }

EdgeId GadgetBuilder::add_edge(VertexId u, VertexId v, EdgeRole role) {
  edges_.push_back({u, v});
  roles_.push_back(role);
  return static_cast<EdgeId>(edges_.size()) - 1;
}

ForkGadget GadgetBuilder::add_fork() {
  ForkGadget f;
  f.a = add_vertex();
  f.p = add_vertex();
  f.q = add_vertex();
  f.v = add_vertex();
  f.w = add_vertex();
  f.z = add_vertex();
  add_inner_edges(f, [this](VertexId u, VertexId v) { return add_edge(u, v, EdgeRole::kGadget); });
  return f;
}

VertexId GadgetBuilder::add_st_path(int length) {
  if (length < 2 || length % 2 != 0) throw Error(ErrorCode::kInvalidInput, "path length must be even and >= 2");
  VertexId prev = s();
  VertexId middle = kNone;
  for (int i = 1; i < length; ++i) {
    const VertexId v = add_vertex();
    add_edge(prev, v, EdgeRole::kPath);
    if (i == length / 2) middle = v;
    prev = v;
  }
  add_edge(prev, t(), EdgeRole::kPath);
  return middle;
}

Graph GadgetBuilder::graph() const {
  Graph g(vertices_);
  for (const Edge& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

VariableGadget add_variable_gadget(GadgetBuilder& b) {
  VariableGadget out;
  out.path_x_middle = b.add_st_path(4);
  out.fx = b.add_fork();
  out.path_nx_middle = b.add_st_path(4);
  out.fnx = b.add_fork();
  out.fx.e[1] = b.add_edge(out.path_x_middle, out.fx.a, EdgeRole::kAttach);
  out.fnx.e[1] = b.add_edge(out.path_nx_middle, out.fnx.a, EdgeRole::kAttach);
  const EdgeId shared = b.add_edge(out.fx.w, out.fnx.z, EdgeRole::kShared);
  out.fx.e[9] = shared;
  out.fnx.e[10] = shared;
  out.x_port = out.fx.z;
  out.not_x_port = out.fnx.w;
  return out;
}

SplitGadget add_split(GadgetBuilder& b, VertexId input, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidK, "split needs k >= 2, got " + std::to_string(k));
  SplitGadget out;
  for (int i = 0; i + 1 < k; ++i) out.forks.push_back(b.add_fork());
  out.input = b.add_edge(input, out.forks[0].a, EdgeRole::kLiteral);
  out.forks[0].e[1] = out.input;
  for (std::size_t i = 0; i + 1 < out.forks.size(); ++i) {
    const EdgeId link = b.add_edge(out.forks[i].w, out.forks[i + 1].a, EdgeRole::kSplitLink);
    out.forks[i].e[9] = link;
    out.forks[i + 1].e[1] = link;
  }
  for (const ForkGadget& f : out.forks) out.output_ports.push_back(f.z);
  out.output_ports.push_back(out.forks.back().w);
  return out;
}

namespace {

EdgeId terminate(GadgetBuilder& b, VertexId port) {
  const VertexId middle = b.add_st_path(4);
  return b.add_edge(port, middle, EdgeRole::kTerminator);
}

GadgetInstance closed(const GadgetBuilder& b) { return {b.graph(), b.s(), b.t(), b.roles()}; }

}  // namespace

VariableInstance build_variable_gadget() {
  GadgetBuilder b;
  VariableInstance out;
  out.gadget = add_variable_gadget(b);
  out.x = terminate(b, out.gadget.x_port);
  out.gadget.fx.e[10] = out.x;
  out.not_x = terminate(b, out.gadget.not_x_port);
  out.gadget.fnx.e[9] = out.not_x;
  out.instance = closed(b);
  return out;
}

SplitInstance build_split(int k) {
  GadgetBuilder b;
  SplitInstance out;
  const VertexId feed = b.add_st_path(4);
  out.split = add_split(b, feed, k);
  for (VertexId port : out.split.output_ports) out.outputs.push_back(terminate(b, port));
  for (std::size_t i = 0; i < out.split.forks.size(); ++i) out.split.forks[i].e[10] = out.outputs[i];
  out.split.forks.back().e[9] = out.outputs.back();
  out.instance = closed(b);
  return out;
}

NtoInstance reduce_nae3sat(const Nae3SatFormula& formula) {
  validate_formula(formula);
  GadgetBuilder b;
  NtoInstance out;
  std::vector<VariableGadget> gadgets;
  for (int i = 0; i < formula.variables; ++i) gadgets.push_back(add_variable_gadget(b));
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) out.clause_vertices.push_back(b.add_vertex());

  // Occurrences per literal, in clause order: (clause, slot).
  std::map<int, std::vector<std::pair<int, int>>> uses;
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    for (int j = 0; j < 3; ++j) uses[formula.clauses[c][j]].push_back({static_cast<int>(c), j});
  }
  out.clause_edges.assign(formula.clauses.size(), {kNone, kNone, kNone});
  out.variables.resize(formula.variables);

  // Wires one literal port to its clauses and returns the literal edge.
  auto wire = [&](VertexId port, int literal) {
    const auto it = uses.find(literal);
    if (it == uses.end()) return terminate(b, port);
    const auto& occ = it->second;
    if (occ.size() == 1) {
      const auto [c, j] = occ[0];
      const EdgeId e = b.add_edge(port, out.clause_vertices[c], EdgeRole::kLiteral);
      out.clause_edges[c][j] = e;
      return e;
    }
    const SplitGadget split = add_split(b, port, static_cast<int>(occ.size()));
    for (std::size_t i = 0; i < occ.size(); ++i) {
      const auto [c, j] = occ[i];
      out.clause_edges[c][j] = b.add_edge(split.output_ports[i], out.clause_vertices[c], EdgeRole::kSplitOutput);
    }
    return split.input;
  };

  for (int i = 0; i < formula.variables; ++i) {
    LiteralEdges& lit = out.variables[i];
    lit.x_port = gadgets[i].x_port;
    lit.not_x_port = gadgets[i].not_x_port;
    lit.x = wire(lit.x_port, i + 1);
    lit.not_x = wire(lit.not_x_port, -(i + 1));
  }
  out.graph = b.graph();
  out.s = b.s();
  out.t = b.t();
  out.roles = b.roles();
  return out;
}

}  // namespace storient
