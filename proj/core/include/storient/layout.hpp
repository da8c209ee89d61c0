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
#include <utility>
#include <vector>

#include "storient/plane_graph.hpp"
#include "storient/st_core.hpp"

namespace storient {

// Vertex as a horizontal run of grid columns x_left..x_right at height y.
struct HSegment {
  int y = 0;
  int x_left = 0;
  int x_right = 0;
};

// Edge as a vertical segment in column x from y_low (tail) to y_high (head).
struct VSegment {
  int x = 0;
  int y_low = 0;
  int y_high = 0;
};

// width counts columns, height is y(t).
struct VisRep {
  std::vector<HSegment> vertices;
  std::vector<VSegment> edges;
  int width = 0;
  int height = 0;
};

// y is the longest-path distance from s; an edge sits in the column of its
// left face, numbered by longest path in the dual st-graph whose outer face is
// split into a left and a right copy. Throws kInvalidOrientation unless o is
// an st-orientation of g from s to t with both on the outer face.
VisRep visibility_representation(const PlaneGraph& g, const StOrientation& o, VertexId s, VertexId t);

// Empty when vr is a valid representation of g under o.
std::vector<std::string> check_visibility(const PlaneGraph& g, const StOrientation& o, const VisRep& vr);

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Edge polylines run tail to head. Coordinates lie in [0,width]x[0,height].
struct Drawing {
  std::vector<Point> vertices;
  std::vector<std::vector<Point>> edges;
  int width = 0;
  int height = 0;
};

// Vertices at the rounded-down midpoint of their segment. With y doubled, an
// edge leaves its tail with a bend at y+1 into its column and enters its head
// from a bend at y-1; bends that fall on the vertex column are dropped. When
// no edge needs a bend the y scale stays 1.
Drawing polyline_drawing(const PlaneGraph& g, const StOrientation& o, const VisRep& vr);

// Width times height of the bounding box, each side at least 1.
long long bounding_area(const Drawing& d);

int bend_count(const Drawing& d);

// Pairs of edges whose polylines meet anywhere other than a shared end
// vertex, plus (e, e) for a polyline that touches itself.
std::vector<std::pair<EdgeId, EdgeId>> find_crossings(const Graph& g, const Drawing& d);

// True iff every polyline strictly increases in y from tail to head.
bool is_upward(const Drawing& d);

struct SvgOptions {
  int scale = 20;
  int margin = 20;
  bool vertex_labels = false;
  std::vector<EdgeId> highlight;  // drawn red
};

std::string render_svg(const Drawing& d, const SvgOptions& options = {});

// {"width":..,"height":..,"vertices":[[x,y],..],"edges":[[[x,y],..],..]}
std::string drawing_to_json(const Drawing& d);

}  // namespace storient
