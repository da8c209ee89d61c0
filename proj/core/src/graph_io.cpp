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

#include "storient/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "storient/error.hpp"

namespace storient {

namespace {

struct RawFile {
  int n = 0;
  int m = 0;
  bool nonplanar = false;
  std::vector<std::vector<VertexId>> neighbors;
  VertexId s = kNone;
  VertexId t = kNone;
};

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + msg);
}

RawFile read_raw(std::istream& in) {
  RawFile raw;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool have_st = false;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> raw.n >> raw.m) || raw.n < 0 || raw.m < 0) parse_fail(line_no, "expected 'n m'");
      raw.neighbors.assign(raw.n, {});
      seen.assign(raw.n, 0);
      have_header = true;
      continue;
    }
    std::string head;
    ls >> head;
    if (head == "nonplanar") {
      raw.nonplanar = true;
      continue;
    }
    if (head == "st:") {
      if (!(ls >> raw.s >> raw.t)) parse_fail(line_no, "expected 'st: s t'");
      have_st = true;
      continue;
    }
    if (head.empty() || head.back() != ':') parse_fail(line_no, "expected 'v: neighbors'");
    int v = 0;
    try {
      v = std::stoi(head.substr(0, head.size() - 1));
    } catch (const std::exception&) {
      parse_fail(line_no, "bad vertex id '" + head + "'");
    }
    if (v < 0 || v >= raw.n) parse_fail(line_no, "vertex id out of range");
    if (seen[v]) parse_fail(line_no, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    VertexId w = 0;
    while (ls >> w) raw.neighbors[v].push_back(w);
    if (!ls.eof()) parse_fail(line_no, "bad neighbor list");
  }
  if (!have_header) parse_fail(line_no, "missing header");
  for (int v = 0; v < raw.n; ++v) {
    if (!seen[v]) parse_fail(line_no, "missing line for vertex " + std::to_string(v));
  }
  if (!have_st) parse_fail(line_no, "missing 'st:' line");
  return raw;
}

void write_lists(std::ostream& out, const std::vector<std::vector<VertexId>>& lists) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    out << v << ':';
    for (VertexId w : lists[v]) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace

PgInstance read_pg(std::istream& in) {
  RawFile raw = read_raw(in);
  if (raw.nonplanar) throw Error(ErrorCode::kParseError, "file is marked nonplanar");
  PgInstance inst;
  inst.graph = PlaneGraph::from_neighbor_rotations(raw.neighbors, VertexPair{raw.s, raw.t});
  if (inst.graph.edge_count() != raw.m) {
    throw Error(ErrorCode::kParseError, "header declares " + std::to_string(raw.m) +
                                            " edges, rotations define " +
                                            std::to_string(inst.graph.edge_count()));
  }
  if (!inst.graph.valid_vertex(raw.s) || !inst.graph.valid_vertex(raw.t) || raw.s == raw.t) {
    throw Error(ErrorCode::kInvalidVertex, "bad terminals in 'st:' line");
  }
  inst.s = raw.s;
  inst.t = raw.t;
  return inst;
}

PgInstance read_pg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path.string());
  return read_pg(in);
}

void write_pg(std::ostream& out, const PlaneGraph& g, VertexId s, VertexId t) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  write_lists(out, g.neighbor_rotations());
  out << "st: " << s << ' ' << t << '\n';
}

void write_adjacency(std::ostream& out, const Graph& g, VertexId s, VertexId t) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n' << "nonplanar\n";
  std::vector<std::vector<VertexId>> lists(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : g.incident(v)) lists[v].push_back(g.opposite(e, v));
  }
  write_lists(out, lists);
  out << "st: " << s << ' ' << t << '\n';
}

AdjacencyInstance read_adjacency(std::istream& in) {
  RawFile raw = read_raw(in);
  AdjacencyInstance inst;
  inst.graph = Graph(raw.n);
  for (VertexId v = 0; v < raw.n; ++v) {
    for (VertexId w : raw.neighbors[v]) {
      if (w < 0 || w >= raw.n) throw Error(ErrorCode::kInvalidVertex, "neighbor out of range");
      const auto& back = raw.neighbors[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::kParseError, "asymmetric adjacency at " + std::to_string(v));
      }
      if (v < w) inst.graph.add_edge(v, w);
    }
  }
  if (inst.graph.edge_count() != raw.m) throw Error(ErrorCode::kParseError, "edge count mismatch");
  if (!inst.graph.valid_vertex(raw.s) || !inst.graph.valid_vertex(raw.t) || raw.s == raw.t) {
    throw Error(ErrorCode::kInvalidVertex, "bad terminals in 'st:' line");
  }
  inst.s = raw.s;
  inst.t = raw.t;
  return inst;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorCode::kInvalidInput, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace storient
