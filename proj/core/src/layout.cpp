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

#include "storient/layout.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "storient/error.hpp"

namespace storient {

namespace {

// Longest-path layering of a DAG given as arc lists; order is topological.
std::vector<int> longest_paths(int n, const std::vector<std::pair<int, int>>& arcs, int root) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [a, b] : arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> level(n, 0);
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v]) {
      level[w] = std::max(level[w], level[v] + 1);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (seen != n || level[root] != 0) throw Error(ErrorCode::kInvalidOrientation, "dual graph is not an st-graph");
  return level;
}

}  // namespace

VisRep visibility_representation(const PlaneGraph& g, const StOrientation& o, VertexId s, VertexId t) {
  if (o.source != s || o.sink != t || !validate_st_orientation(g, o, s, t).passed) {
    throw Error(ErrorCode::kInvalidOrientation, "not an st-orientation from s to t");
  }
  if (!g.on_face(s, g.outer_face()) || !g.on_face(t, g.outer_face())) {
    throw Error(ErrorCode::kInvalidOrientation, "terminals must lie on the outer face");
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(m);
  for (const Arc& a : o.arcs) arcs.push_back({a.tail, a.head});
  const std::vector<int> y = longest_paths(n, arcs, s);

  // Dual nodes: faces, with the outer face standing for the left copy, plus
  // one extra node for the right copy.
  const FaceId left_outer = g.outer_face();
  const int right_outer = g.face_count();
  std::vector<int> left(m);
  std::vector<int> right(m);
  std::vector<std::pair<int, int>> dual;
  dual.reserve(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Arc& a = o.arcs[e];
    left[e] = g.face_of_dart(e, a.tail);
    right[e] = g.face_of_dart(e, a.head);
    if (right[e] == left_outer) right[e] = right_outer;
    dual.push_back({left[e], right[e]});
  }
  const std::vector<int> psi = longest_paths(g.face_count() + 1, dual, left_outer);

  VisRep vr;
  vr.width = psi[right_outer];
  vr.height = y[t];
  vr.edges.resize(m);
  vr.vertices.resize(n);
  for (VertexId v = 0; v < n; ++v) vr.vertices[v] = {y[v], vr.width, -1};
  for (EdgeId e = 0; e < m; ++e) {
    const Arc& a = o.arcs[e];
    const int x = psi[left[e]];
    vr.edges[e] = {x, y[a.tail], y[a.head]};
    for (VertexId v : {a.tail, a.head}) {
      vr.vertices[v].x_left = std::min(vr.vertices[v].x_left, x);
      vr.vertices[v].x_right = std::max(vr.vertices[v].x_right, x);
    }
  }
  return vr;
}

std::vector<std::string> check_visibility(const PlaneGraph& g, const StOrientation& o, const VisRep& vr) {
  std::vector<std::string> problems;
  const int n = g.vertex_count();
  if (static_cast<int>(vr.vertices.size()) != n || static_cast<int>(vr.edges.size()) != g.edge_count()) {
    problems.push_back("size mismatch");
    return problems;
  }
  for (VertexId v = 0; v < n; ++v) {
    const HSegment& h = vr.vertices[v];
    if (h.y < 0 || h.x_left < 0 || h.x_left > h.x_right || h.x_right >= std::max(vr.width, 1)) {
      problems.push_back("vertex " + std::to_string(v) + " out of grid");
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const HSegment& p = vr.vertices[a];
      const HSegment& q = vr.vertices[b];
      if (p.y == q.y && p.x_left <= q.x_right && q.x_left <= p.x_right) {
        problems.push_back("vertices " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VSegment& s = vr.edges[e];
    const Arc& arc = o.arcs[e];
    const HSegment& tail = vr.vertices[arc.tail];
    const HSegment& head = vr.vertices[arc.head];
    const bool touches = s.y_low == tail.y && s.y_high == head.y && s.y_low < s.y_high &&
                         tail.x_left <= s.x && s.x <= tail.x_right && head.x_left <= s.x && s.x <= head.x_right;
    if (!touches) problems.push_back("edge " + std::to_string(e) + " misses an end");
    for (VertexId v = 0; v < n; ++v) {
      const HSegment& h = vr.vertices[v];
      if (v != arc.tail && v != arc.head && h.y >= s.y_low && h.y <= s.y_high && h.x_left <= s.x &&
          s.x <= h.x_right) {
        problems.push_back("edge " + std::to_string(e) + " hits vertex " + std::to_string(v));
      }
    }
  }
  return problems;
}

Drawing polyline_drawing(const PlaneGraph& g, const StOrientation& o, const VisRep& vr) {
  const int n = g.vertex_count();
  Drawing d;
  d.vertices.resize(n);
  std::vector<int> vx(n);
  for (VertexId v = 0; v < n; ++v) vx[v] = (vr.vertices[v].x_left + vr.vertices[v].x_right) / 2;
  bool straight = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Arc& a = o.arcs[e];
    const VSegment& s = vr.edges[e];
    if (vx[a.tail] != s.x || vx[a.head] != s.x) straight = false;
  }
  const int scale = straight ? 1 : 2;
  for (VertexId v = 0; v < n; ++v) d.vertices[v] = {vx[v], scale * vr.vertices[v].y};
  d.edges.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Arc& a = o.arcs[e];
    const VSegment& s = vr.edges[e];
    std::vector<Point>& line = d.edges[e];
    line.push_back(d.vertices[a.tail]);
    if (vx[a.tail] != s.x) line.push_back({s.x, d.vertices[a.tail].y + 1});
    if (vx[a.head] != s.x) {
      const Point bend{s.x, d.vertices[a.head].y - 1};
      if (!(bend == line.back())) line.push_back(bend);
    }
    line.push_back(d.vertices[a.head]);
  }
  int max_x = 0;
  int max_y = 0;
  for (const auto& line : d.edges) {
    for (const Point& p : line) {
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
  }
  for (const Point& p : d.vertices) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  d.width = max_x;
  d.height = max_y;
  return d;
}

long long bounding_area(const Drawing& d) {
  bool any = false;
  int lo_x = 0;
  int hi_x = 0;
  int lo_y = 0;
  int hi_y = 0;
  auto add = [&](const Point& p) {
    if (!any) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
      any = true;
      return;
    }
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };
  for (const Point& p : d.vertices) add(p);
  for (const auto& line : d.edges) {
    for (const Point& p : line) add(p);
  }
  const long long w = std::max(1, hi_x - lo_x);
  const long long h = std::max(1, hi_y - lo_y);
  return w * h;
}

int bend_count(const Drawing& d) {
  int bends = 0;
  for (const auto& line : d.edges) bends += std::max(0, static_cast<int>(line.size()) - 2);
  return bends;
}

namespace {

struct Segment {
  Point a;
  Point b;
  EdgeId edge;
  int index;
};

long long cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long long>(a.x - o.x) * (b.y - o.y) - static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sign(long long v) { return (v > 0) - (v < 0); }

bool intersects(const Segment& s, const Segment& r) {
  const int d1 = sign(cross(r.a, r.b, s.a));
  const int d2 = sign(cross(r.a, r.b, s.b));
  const int d3 = sign(cross(s.a, s.b, r.a));
  const int d4 = sign(cross(s.a, s.b, r.b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(s.a, r.a, r.b) || on_segment(s.b, r.a, r.b) || on_segment(r.a, s.a, s.b) ||
         on_segment(r.b, s.a, s.b);
}

bool collinear_overlap(const Segment& s, const Segment& r) {
  if (cross(s.a, s.b, r.a) != 0 || cross(s.a, s.b, r.b) != 0) return false;
  // Shared single point only when they meet end to end.
  int hits = 0;
  for (const Point& p : {r.a, r.b}) hits += on_segment(p, s.a, s.b);
  for (const Point& p : {s.a, s.b}) hits += on_segment(p, r.a, r.b);
  const bool share = s.a == r.a || s.a == r.b || s.b == r.a || s.b == r.b;
  return !(share && hits == 2);
}

// The one point both segments are allowed to meet at, if any.
bool meet_only_at(const Segment& s, const Segment& r, const Point& p) {
  const bool s_end = s.a == p || s.b == p;
  const bool r_end = r.a == p || r.b == p;
  return s_end && r_end && !collinear_overlap(s, r);
}

}  // namespace

std::vector<std::pair<EdgeId, EdgeId>> find_crossings(const Graph& g, const Drawing& d) {
  std::vector<Segment> segs;
  for (EdgeId e = 0; e < static_cast<EdgeId>(d.edges.size()); ++e) {
    const auto& line = d.edges[e];
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      segs.push_back({line[i], line[i + 1], e, static_cast<int>(i)});
    }
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& p, const Segment& q) {
    return std::min(p.a.x, p.b.x) < std::min(q.a.x, q.b.x);
  });
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const int right_i = std::max(segs[i].a.x, segs[i].b.x);
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (std::min(segs[j].a.x, segs[j].b.x) > right_i) break;
      const Segment& s = segs[i];
      const Segment& r = segs[j];
      if (!intersects(s, r)) continue;
      if (s.edge == r.edge) {
        if (std::abs(s.index - r.index) == 1) {
          const Point& joint = s.index < r.index ? s.b : s.a;
          if (meet_only_at(s, r, joint)) continue;
        }
        out.push_back({s.edge, s.edge});
        continue;
      }
      const Edge& es = g.edge(s.edge);
      const Edge& er = g.edge(r.edge);
      bool allowed = false;
      for (VertexId v : {es.u, es.v}) {
        if ((v == er.u || v == er.v) && meet_only_at(s, r, d.vertices[v])) allowed = true;
      }
      if (!allowed) out.push_back({std::min(s.edge, r.edge), std::max(s.edge, r.edge)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_upward(const Drawing& d) {
  for (const auto& line : d.edges) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i + 1].y <= line[i].y) return false;
    }
  }
  return true;
}

std::string drawing_to_json(const Drawing& d) {
  nlohmann::json j;
  j["width"] = d.width;
  j["height"] = d.height;
  j["area"] = bounding_area(d);
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point& p : d.vertices) vertices.push_back({p.x, p.y});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& line : d.edges) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point& p : line) pts.push_back({p.x, p.y});
    edges.push_back(std::move(pts));
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace storient
