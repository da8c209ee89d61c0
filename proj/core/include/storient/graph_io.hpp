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

#include <filesystem>
#include <iosfwd>

#include "storient/graph.hpp"
#include "storient/plane_graph.hpp"

namespace storient {

// Plane graph with its prescribed terminals, as stored in a .pg file:
//
//   n m
//   v: w1 w2 ... wk      (one line per vertex, clockwise neighbor order)
//   st: s t
//
// Vertex ids are 0-based. Blank lines and lines starting with '#' are ignored.
struct PgInstance {
  PlaneGraph graph;
  VertexId s = kNone;
  VertexId t = kNone;
};

PgInstance read_pg(std::istream& in);
PgInstance read_pg_file(const std::filesystem::path& path);
void write_pg(std::ostream& out, const PlaneGraph& g, VertexId s, VertexId t);

// Same layout with a `nonplanar` line after the header; the neighbor lists are
// plain adjacency and carry no rotation.
struct AdjacencyInstance {
  Graph graph;
  VertexId s = kNone;
  VertexId t = kNone;
};

void write_adjacency(std::ostream& out, const Graph& g, VertexId s, VertexId t);
AdjacencyInstance read_adjacency(std::istream& in);

// Writes via a sibling temporary file and rename, so readers never observe a
// partially written file.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace storient
