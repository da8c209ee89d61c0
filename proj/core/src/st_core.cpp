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

#include "storient/st_core.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "storient/error.hpp"

namespace storient {

namespace {

// DFS tree plus lowpoints for the path-addition algorithm. Edge id
// g.edge_count() stands for the virtual (s,t) edge when g lacks one.
struct PalmTree {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;
  std::vector<int> dfn;
  std::vector<int> low;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<EdgeId> low_edge;
};

PalmTree build_palm_tree(const Graph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  PalmTree p;
  p.adj.resize(n);
  EdgeId st_edge = g.edge_count();
  if (auto e = g.find_edge(s, t)) st_edge = *e;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<EdgeId> ids(g.incident(v).begin(), g.incident(v).end());
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids) p.adj[v].emplace_back(g.opposite(e, v), e);
  }
  if (st_edge == g.edge_count()) {
    p.adj[s].emplace_back(t, st_edge);
    p.adj[t].emplace_back(s, st_edge);
  }
  auto& sa = p.adj[s];
  std::stable_partition(sa.begin(), sa.end(), [&](const auto& x) { return x.second == st_edge; });

  p.dfn.assign(n, -1);
  p.low.assign(n, 0);
  p.parent.assign(n, kNone);
  p.parent_edge.assign(n, kNone);
  p.low_edge.assign(n, kNone);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<VertexId> stack{s};
  int timer = 0;
  p.dfn[s] = p.low[s] = timer++;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    if (cursor[v] < p.adj[v].size()) {
      const auto [w, e] = p.adj[v][cursor[v]++];
      if (e == p.parent_edge[v]) continue;
      if (p.dfn[w] < 0) {
        p.dfn[w] = p.low[w] = timer++;
        p.parent[w] = v;
        p.parent_edge[w] = e;
        stack.push_back(w);
      } else if (p.dfn[w] < p.low[v]) {
        p.low[v] = p.dfn[w];
        p.low_edge[v] = e;
      }
      continue;
    }
    stack.pop_back();
    if (v != s) {
      const VertexId u = p.parent[v];
      if (p.low[v] < p.low[u]) {
        p.low[u] = p.low[v];
        p.low_edge[u] = p.parent_edge[v];
      }
    }
  }
  return p;
}

}  // namespace

StNumbering st_number(const Graph& g, VertexId s, VertexId t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t) {
    throw Error(ErrorCode::kInvalidVertex, "bad terminals");
  }
  if (!is_biconnected_with(g, s, t)) {
    throw Error(ErrorCode::kNotAdmissible, "graph plus (s,t) is not biconnected");
  }
  const int n = g.vertex_count();
  const PalmTree p = build_palm_tree(g, s, t);
  std::vector<char> old_vertex(n, 0);
  std::vector<char> old_edge(g.edge_count() + 1, 0);
  old_vertex[s] = old_vertex[t] = 1;
  old_edge[p.parent_edge[t]] = 1;

  auto is_tree_edge = [&](VertexId v, VertexId w, EdgeId e) {
    return (p.parent[w] == v && p.parent_edge[w] == e) || (p.parent[v] == w && p.parent_edge[v] == e);
  };

  // Returns the new path starting at v (v first, old endpoint last), or an
  // empty path when every edge at v is old.
  auto find_path = [&](VertexId v) {
    std::vector<VertexId> path;
    // Back edge to an ancestor.
    for (const auto& [w, e] : p.adj[v]) {
      if (!old_edge[e] && p.dfn[w] < p.dfn[v] && !is_tree_edge(v, w, e)) {
        old_edge[e] = 1;
        return std::vector<VertexId>{v, w};
      }
    }
    // Tree edge to a child, then follow lowpoint edges down and back up.
    for (const auto& [w, e] : p.adj[v]) {
      if (!old_edge[e] && p.parent[w] == v && p.parent_edge[w] == e) {
        old_edge[e] = 1;
        path = {v, w};
        VertexId cur = w;
        while (!old_vertex[cur]) {
          old_vertex[cur] = 1;
          const EdgeId le = p.low_edge[cur];
          old_edge[le] = 1;
          cur = (g.edge_count() == le) ? (cur == s ? t : s) : g.opposite(le, cur);
          path.push_back(cur);
        }
        return path;
      }
    }
    // Back edge from a descendant, then climb tree edges.
    for (const auto& [w, e] : p.adj[v]) {
      if (!old_edge[e] && p.dfn[w] > p.dfn[v] && !is_tree_edge(v, w, e)) {
        old_edge[e] = 1;
        path = {v, w};
        VertexId cur = w;
        while (!old_vertex[cur]) {
          old_vertex[cur] = 1;
          old_edge[p.parent_edge[cur]] = 1;
          cur = p.parent[cur];
          path.push_back(cur);
        }
        return path;
      }
    }
    return path;
  };

  StNumbering out;
  out.number.assign(n, 0);
  std::vector<VertexId> stack{t, s};
  int next = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == t) {
      out.number[t] = ++next;
      continue;
    }
    const std::vector<VertexId> path = find_path(v);
    if (path.empty()) {
      out.number[v] = ++next;
      continue;
    }
    for (std::size_t i = path.size() - 1; i-- > 0;) stack.push_back(path[i]);
  }
  if (next != n) throw Error(ErrorCode::kNotAdmissible, "st-numbering did not reach every vertex");
  return out;
}

bool is_st_numbering(const Graph& g, const StNumbering& numbering, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  if (static_cast<int>(numbering.number.size()) != n) return false;
  std::vector<char> used(n + 1, 0);
  for (int x : numbering.number) {
    if (x < 1 || x > n || used[x]) return false;
    used[x] = 1;
  }
  if (numbering.number[s] != 1 || numbering.number[t] != n) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    bool lower = false, higher = false;
    for (EdgeId e : g.incident(v)) {
      const int other = numbering.number[g.opposite(e, v)];
      lower |= other < numbering.number[v];
      higher |= other > numbering.number[v];
    }
    if (!lower || !higher) return false;
  }
  return true;
}

StOrientation orient_by_numbering(const Graph& g, const StNumbering& numbering) {
  StOrientation o;
  o.arcs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    o.arcs.push_back(numbering.number[e.u] < numbering.number[e.v] ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (numbering.number[v] == 1) o.source = v;
    if (numbering.number[v] == g.vertex_count()) o.sink = v;
  }
  return o;
}

StOrientation orient_from_flags(const Graph& g, const std::vector<bool>& forward, VertexId s,
                                VertexId t) {
  StOrientation o;
  o.source = s;
  o.sink = t;
  o.arcs.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    o.arcs.push_back(forward[e] ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u});
  }
  return o;
}

std::optional<std::vector<VertexId>> topological_order(const Graph& g, const StOrientation& o) {
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<VertexId>> out(n);
  for (const Arc& a : o.arcs) {
    ++indeg[a.head];
    out[a.tail].push_back(a.head);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : out[order[i]]) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

OrientationReport validate_st_orientation(const Graph& g, const StOrientation& o, VertexId s,
                                          VertexId t) {
  OrientationReport r;
  if (static_cast<int>(o.arcs.size()) != g.edge_count()) {
    r.arcs_match_edges = false;
    return r;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Arc& a = o.arcs[e];
    if (!((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u))) {
      r.arcs_match_edges = false;
    }
  }
  if (!r.arcs_match_edges) return r;
  std::vector<int> indeg(g.vertex_count(), 0), outdeg(g.vertex_count(), 0);
  for (const Arc& a : o.arcs) {
    ++outdeg[a.tail];
    ++indeg[a.head];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (indeg[v] == 0) r.sources.push_back(v);
    if (outdeg[v] == 0) r.sinks.push_back(v);
  }
  r.acyclic = topological_order(g, o).has_value();
  r.passed = r.acyclic && r.sources == std::vector<VertexId>{s} && r.sinks == std::vector<VertexId>{t};
  return r;
}

std::vector<EdgeId> transitive_edges_reach(const Graph& g, const StOrientation& o) {
  const auto order = topological_order(g, o);
  if (!order) throw Error(ErrorCode::kCyclicInput, "orientation has a directed cycle");
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> out(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[o.arcs[e].tail].emplace_back(o.arcs[e].head, e);

  std::vector<int> stamp(n, -1);
  std::vector<VertexId> stack;
  std::vector<EdgeId> result;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId u = o.arcs[e].tail;
    const VertexId v = o.arcs[e].head;
    bool reached = false;
    stack.assign(1, u);
    stamp[u] = e;
    while (!stack.empty() && !reached) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const auto& [y, f] : out[x]) {
        if (f == e || pos[y] > pos[v] || stamp[y] == e) continue;
        if (y == v) {
          reached = true;
          break;
        }
        stamp[y] = e;
        stack.push_back(y);
      }
    }
    if (reached) result.push_back(e);
  }
  return result;
}

std::vector<EdgeId> transitive_edges_faces(const PlaneGraph& g, const StOrientation& o) {
  std::vector<char> hit(g.edge_count(), 0);
  for (const Face& f : g.faces()) {
    const int len = f.degree();
    std::vector<char> fwd(len);
    for (int i = 0; i < len; ++i) fwd[i] = o.arcs[f.boundary[i].edge].tail == f.boundary[i].vertex;
    int changes = 0;
    int fwd_start = -1;
    int bwd_start = -1;
    for (int i = 0; i < len; ++i) {
      const bool prev = fwd[(i + len - 1) % len];
      if (fwd[i] != prev) {
        ++changes;
        (fwd[i] ? fwd_start : bwd_start) = i;
      }
    }
    if (changes != 2) {
      throw Error(ErrorCode::kNotBipolarFace,
                  "face " + std::to_string(f.id) + " is not split into two directed paths");
    }
    const int fwd_len = (bwd_start - fwd_start + len) % len;
    const int bwd_len = len - fwd_len;
    if (fwd_len == 1 && bwd_len >= 2) hit[f.boundary[fwd_start].edge] = 1;
    if (bwd_len == 1 && fwd_len >= 2) hit[f.boundary[bwd_start].edge] = 1;
  }
  std::vector<EdgeId> result;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (hit[e]) result.push_back(e);
  }
  return result;
}

Rational improvement_percent(int tr_heur, int tr_opt) {
  if (tr_heur < 0 || tr_opt < 0) throw Error(ErrorCode::kNegativeCount, "transitive counts must be >= 0");
  if (tr_opt > tr_heur) throw Error(ErrorCode::kInvalidInput, "optimum exceeds heuristic count");
  return Rational(100LL * (tr_heur - tr_opt), std::max(1, tr_heur));
}

bool incoming_edges_consecutive(const PlaneGraph& g, const StOrientation& o) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == o.source || v == o.sink) continue;
    const auto rot = g.rotation(v);
    int changes = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const bool in_a = o.arcs[rot[i]].head == v;
      const bool in_b = o.arcs[rot[(i + 1) % rot.size()]].head == v;
      changes += in_a != in_b;
    }
    if (changes != 2) return false;
  }
  return true;
}

StOrientation heuristic_orientation(const Graph& g, VertexId s, VertexId t) {
  return orient_by_numbering(g, st_number(g, s, t));
}

void write_ori(std::ostream& out, const StOrientation& o) {
  for (std::size_t e = 0; e < o.arcs.size(); ++e) {
    out << e << ": " << o.arcs[e].tail << " -> " << o.arcs[e].head << '\n';
  }
}

StOrientation read_ori(std::istream& in, const Graph& g, VertexId s, VertexId t) {
  StOrientation o;
  o.source = s;
  o.sink = t;
  o.arcs.assign(g.edge_count(), Arc{});
  std::vector<char> seen(g.edge_count(), 0);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    EdgeId e = 0;
    char colon = 0;
    std::string arrow;
    Arc a;
    if (!(ls >> e >> colon >> a.tail >> arrow >> a.head) || colon != ':' || arrow != "->") {
      throw Error(ErrorCode::kParseError, "bad .ori line: " + line);
    }
    if (e < 0 || e >= g.edge_count() || seen[e]) throw Error(ErrorCode::kParseError, "bad edge id in .ori");
    const Edge& ed = g.edge(e);
    if (!((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u))) {
      throw Error(ErrorCode::kParseError, "arc does not match edge " + std::to_string(e));
    }
    seen[e] = 1;
    o.arcs[e] = a;
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw Error(ErrorCode::kParseError, "missing edges in .ori");
  return o;
}

}  // namespace storient
