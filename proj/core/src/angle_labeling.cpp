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

#include "storient/angle_labeling.hpp"

#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "storient/error.hpp"

namespace storient {

namespace {

bool enters(const StOrientation& o, EdgeId e, VertexId v) { return o.arcs[e].head == v; }

bool terminal_outer_angle(const PlaneGraph& g, const Angle& a, VertexId s, VertexId t) {
  return a.face == g.outer_face() && (a.vertex == s || a.vertex == t);
}

}  // namespace

char to_char(AngleLabel label) {
  switch (label) {
    case AngleLabel::kSmall: return 'S';
    case AngleLabel::kFlat: return 'F';
    case AngleLabel::kUnlabeled: return '-';
  }
  return '?';
}

StLabeling labels_from_orientation(const PlaneGraph& g, const StOrientation& o) {
  const OrientationReport report = validate_st_orientation(g, o, o.source, o.sink);
  if (!report.passed) throw Error(ErrorCode::kInvalidOrientation, "not an st-orientation");
  if (!g.on_face(o.source, g.outer_face()) || !g.on_face(o.sink, g.outer_face())) {
    throw Error(ErrorCode::kInvalidOrientation, "terminals are not on the outer face");
  }
  StLabeling out;
  out.source = o.source;
  out.sink = o.sink;
  out.label.resize(g.angle_count());
  for (AngleId id = 0; id < g.angle_count(); ++id) {
    const Angle& a = g.angle(id);
    if (terminal_outer_angle(g, a, o.source, o.sink)) {
      out.label[id] = AngleLabel::kUnlabeled;
      continue;
    }
    const bool same = enters(o, a.prev_edge, a.vertex) == enters(o, a.next_edge, a.vertex);
    out.label[id] = same ? AngleLabel::kSmall : AngleLabel::kFlat;
  }
  return out;
}

LabelingReport validate_labeling(const PlaneGraph& g, const StLabeling& labeling) {
  LabelingReport r;
  const VertexId s = labeling.source;
  const VertexId t = labeling.sink;
  if (static_cast<int>(labeling.label.size()) != g.angle_count()) {
    r.all_labeled = false;
    r.violations.push_back({LabelingProperty::kAllLabeled, kNone, "label vector has wrong size"});
    return r;
  }
  for (AngleId id = 0; id < g.angle_count(); ++id) {
    const Angle& a = g.angle(id);
    const AngleLabel l = labeling.label[id];
    const bool want_unlabeled = terminal_outer_angle(g, a, s, t);
    if (want_unlabeled != (l == AngleLabel::kUnlabeled)) {
      r.all_labeled = false;
      r.violations.push_back({LabelingProperty::kAllLabeled, id,
                              want_unlabeled ? "terminal outer angle carries a label"
                                             : "angle is unlabeled"});
    }
    if ((a.vertex == s || a.vertex == t) && g.is_internal(a.face) && l != AngleLabel::kSmall) {
      r.terminal_small = false;
      r.violations.push_back({LabelingProperty::kTerminalSmall, id, "terminal angle in internal face is not S"});
    }
  }
  for (const Face& f : g.faces()) {
    if (!g.is_internal(f.id)) continue;
    int small = 0;
    for (AngleId id : g.angles_of_face(f.id)) small += labeling.label[id] == AngleLabel::kSmall;
    if (small != 2) {
      r.face_small_count = false;
      r.violations.push_back({LabelingProperty::kFaceSmallCount, f.id,
                              "face has " + std::to_string(small) + " S angles"});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == s || v == t) continue;
    int small = 0, flat = 0;
    for (AngleId id : g.angles_of_vertex(v)) {
      small += labeling.label[id] == AngleLabel::kSmall;
      flat += labeling.label[id] == AngleLabel::kFlat;
    }
    if (small != g.degree(v) - 2 || flat != 2) {
      r.vertex_small_count = false;
      r.violations.push_back({LabelingProperty::kVertexSmallCount, v,
                              std::to_string(small) + " S and " + std::to_string(flat) + " F angles"});
    }
  }
  return r;
}

StOrientation orientation_from_labels(const PlaneGraph& g, const StLabeling& labeling) {
  const VertexId s = labeling.source;
  const VertexId t = labeling.sink;
  if (static_cast<int>(labeling.label.size()) != g.angle_count() || !g.valid_vertex(s) ||
      !g.valid_vertex(t)) {
    throw Error(ErrorCode::kInconsistentLabeling, "labeling does not match the graph");
  }
  // dir[e]: 0 unknown, 1 = edge(e).u -> edge(e).v, 2 = reverse.
  std::vector<int> dir(g.edge_count(), 0);
  std::vector<char> done(g.vertex_count(), 0);
  std::deque<VertexId> queue;

  auto set_dir = [&](EdgeId e, VertexId tail) {
    const int want = g.edge(e).u == tail ? 1 : 2;
    if (dir[e] == 0) {
      dir[e] = want;
      const VertexId head = g.opposite(e, tail);
      if (!done[head]) queue.push_back(head);
      if (!done[tail]) queue.push_back(tail);
    } else if (dir[e] != want) {
      throw Error(ErrorCode::kInconsistentLabeling,
                  "edge " + std::to_string(e) + " is forced in both directions");
    }
  };
  auto leaves = [&](EdgeId e, VertexId v) { return (dir[e] == 1) == (g.edge(e).u == v); };

  for (EdgeId e : g.rotation(s)) set_dir(e, s);
  for (EdgeId e : g.rotation(t)) set_dir(e, g.opposite(e, t));
  done[s] = done[t] = 1;

  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (done[v]) continue;
    const auto rot = g.rotation(v);
    const int deg = static_cast<int>(rot.size());
    int start = -1;
    for (int i = 0; i < deg; ++i) {
      if (dir[rot[i]] != 0) {
        start = i;
        break;
      }
    }
    if (start < 0) continue;
    done[v] = 1;
    bool out = leaves(rot[start], v);
    for (int k = 1; k <= deg; ++k) {
      const int i = (start + k) % deg;
      const AngleId between = g.angle_at(v, (i + deg - 1) % deg);
      const AngleLabel l = labeling.label[between];
      if (l == AngleLabel::kUnlabeled) {
        throw Error(ErrorCode::kInconsistentLabeling, "unlabeled angle at vertex " + std::to_string(v));
      }
      if (l == AngleLabel::kFlat) out = !out;
      const EdgeId e = rot[i];
      set_dir(e, out ? v : g.opposite(e, v));
    }
  }
  std::vector<bool> forward(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (dir[e] == 0) throw Error(ErrorCode::kInconsistentLabeling, "edge left undirected");
    forward[e] = dir[e] == 1;
  }
  StOrientation o = orient_from_flags(g, forward, s, t);
  if (!validate_st_orientation(g, o, s, t).passed) {
    throw Error(ErrorCode::kInconsistentLabeling, "decoded orientation is not an st-orientation");
  }
  if (labels_from_orientation(g, o) != labeling) {
    throw Error(ErrorCode::kInconsistentLabeling, "decoded orientation realizes a different labeling");
  }
  return o;
}

void write_lab(std::ostream& out, const PlaneGraph& g, const StLabeling& labeling) {
  for (AngleId id = 0; id < g.angle_count(); ++id) {
    const Angle& a = g.angle(id);
    out << a.face << ' ' << a.vertex << ' ' << a.prev_edge << ' ' << a.next_edge << ' '
        << to_char(labeling.label[id]) << '\n';
  }
}

StLabeling read_lab(std::istream& in, const PlaneGraph& g, VertexId s, VertexId t) {
  StLabeling out;
  out.source = s;
  out.sink = t;
  out.label.assign(g.angle_count(), AngleLabel::kUnlabeled);
  std::vector<char> seen(g.angle_count(), 0);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int face = 0, vertex = 0, prev = 0, next = 0;
    char c = 0;
    if (!(ls >> face >> vertex >> prev >> next >> c)) throw Error(ErrorCode::kParseError, "bad .lab line: " + line);
    if (!g.valid_vertex(vertex) || face < 0 || face >= g.face_count()) {
      throw Error(ErrorCode::kParseError, "bad .lab ids: " + line);
    }
    AngleId match = kNone;
    for (AngleId id : g.angles_of_vertex(vertex)) {
      const Angle& a = g.angle(id);
      if (a.face == face && a.prev_edge == prev && a.next_edge == next) match = id;
    }
    if (match == kNone || seen[match]) throw Error(ErrorCode::kParseError, "unknown angle: " + line);
    seen[match] = 1;
    switch (c) {
      case 'S': out.label[match] = AngleLabel::kSmall; break;
      case 'F': out.label[match] = AngleLabel::kFlat; break;
      case '-': out.label[match] = AngleLabel::kUnlabeled; break;
      default: throw Error(ErrorCode::kParseError, "bad label in: " + line);
    }
  }
  return out;
}

}  // namespace storient
