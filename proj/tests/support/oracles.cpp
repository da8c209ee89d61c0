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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

namespace oracle {

namespace {

std::vector<std::vector<VertexId>> out_lists(const Graph& g, const StOrientation& o) {
  std::vector<std::vector<VertexId>> out(g.vertex_count());
  for (const auto& a : o.arcs) out[a.tail].push_back(a.head);
  return out;
}

bool reaches(const std::vector<std::vector<VertexId>>& out, VertexId from, VertexId to, VertexId skip_first) {
  std::vector<char> seen(out.size(), 0);
  std::vector<VertexId> stack;
  for (VertexId w : out[from]) {
    if (w == skip_first) continue;
    if (!seen[w]) {
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (VertexId w : out[x]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

bool is_st_orientation(const Graph& g, const StOrientation& o, VertexId s, VertexId t) {
  if (static_cast<int>(o.arcs.size()) != g.edge_count()) return false;
  std::vector<int> in(g.vertex_count(), 0);
  std::vector<int> out(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& a = o.arcs[e];
    const auto& ed = g.edge(e);
    if (!((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u))) return false;
    ++out[a.tail];
    ++in[a.head];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if ((in[v] == 0) != (v == s)) return false;
    if ((out[v] == 0) != (v == t)) return false;
  }
  // Kahn.
  std::vector<std::vector<VertexId>> adj = out_lists(g, o);
  std::vector<VertexId> ready{s};
  int seen = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++seen;
    for (VertexId w : adj[v]) {
      if (--in[w] == 0) ready.push_back(w);
    }
  }
  return seen == g.vertex_count();
}

std::set<EdgeId> transitive_edges(const Graph& g, const StOrientation& o) {
  const auto out = out_lists(g, o);
  std::set<EdgeId> result;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& a = o.arcs[e];
    if (reaches(out, a.tail, a.head, a.head)) result.insert(e);
  }
  return result;
}

std::optional<int> min_transitive_bruteforce(const Graph& g, VertexId s, VertexId t) {
  const int m = g.edge_count();
  std::optional<int> best;
  StOrientation o;
  o.source = s;
  o.sink = t;
  o.arcs.resize(m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    for (EdgeId e = 0; e < m; ++e) {
      const auto& ed = g.edge(e);
      o.arcs[e] = (mask >> e) & 1 ? storient::Arc{ed.v, ed.u} : storient::Arc{ed.u, ed.v};
    }
    if (!is_st_orientation(g, o, s, t)) continue;
    const int count = static_cast<int>(transitive_edges(g, o).size());
    if (!best || count < *best) best = count;
  }
  return best;
}

std::int64_t count_st_orientations(const Graph& g, VertexId s, VertexId t) {
  const int m = g.edge_count();
  std::int64_t count = 0;
  StOrientation o;
  o.arcs.resize(m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    for (EdgeId e = 0; e < m; ++e) {
      const auto& ed = g.edge(e);
      o.arcs[e] = (mask >> e) & 1 ? storient::Arc{ed.v, ed.u} : storient::Arc{ed.u, ed.v};
    }
    count += is_st_orientation(g, o, s, t);
  }
  return count;
}

bool biconnected_with(const Graph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  adj[s].push_back(t);
  adj[t].push_back(s);
  auto connected_without = [&](VertexId removed) {
    VertexId start = removed == 0 ? 1 : 0;
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    if (removed >= 0) seen[removed] = 1;
    std::vector<VertexId> stack{start};
    int count = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId w : adj[x]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n - (removed >= 0 ? 1 : 0);
  };
  if (!connected_without(-1)) return false;
  if (n < 3) return true;
  for (VertexId v = 0; v < n; ++v) {
    if (!connected_without(v)) return false;
  }
  return true;
}

PlaneGraph relabel(const PlaneGraph& g, const std::vector<VertexId>& perm) {
  std::vector<std::vector<VertexId>> rot(g.vertex_count());
  const auto old = g.neighbor_rotations();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : old[v]) rot[perm[v]].push_back(perm[w]);
  }
  const auto outer = g.face(g.outer_face()).boundary;
  return PlaneGraph::from_neighbor_rotations(rot, storient::VertexPair{perm[outer[0].vertex], perm[outer[1].vertex]});
}

StOrientation random_st_orientation(const PlaneGraph& g, VertexId s, VertexId t, std::uint64_t seed) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<VertexId>> rot(g.vertex_count());
  const auto old = g.neighbor_rotations();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : old[v]) rot[perm[v]].push_back(perm[w]);
  }
  Graph h(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : rot[v]) {
      if (v < w) h.add_edge(v, w);
    }
  }
  const StOrientation oh = storient::heuristic_orientation(h, perm[s], perm[t]);
  std::vector<VertexId> inv(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) inv[perm[v]] = v;
  StOrientation o;
  o.source = s;
  o.sink = t;
  o.arcs.resize(g.edge_count());
  for (const auto& a : oh.arcs) {
    const VertexId u = inv[a.tail];
    const VertexId v = inv[a.head];
    const EdgeId e = *g.find_edge(u, v);
    o.arcs[e] = {u, v};
  }
  return o;
}

int count_faces(const PlaneGraph& g) {
  // Dart (v, i): leave v along rotation(v)[i]. Next dart: at the head w, take
  // the edge after the arriving one in w's clockwise rotation.
  std::vector<std::vector<char>> used(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) used[v].assign(g.degree(v), 0);
  int faces = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      if (used[v][i]) continue;
      ++faces;
      VertexId x = v;
      int j = i;
      while (!used[x][j]) {
        used[x][j] = 1;
        const EdgeId e = g.rotation(x)[j];
        const VertexId w = g.opposite(e, x);
        const auto rw = g.rotation(w);
        const int pos = static_cast<int>(std::find(rw.begin(), rw.end(), e) - rw.begin());
        x = w;
        j = (pos + 1) % g.degree(w);
      }
    }
  }
  return faces;
}

namespace {

long long orient(Pt a, Pt b, Pt c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool between(Pt a, Pt b, Pt p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool same(Pt a, Pt b) { return a.x == b.x && a.y == b.y; }

// Number of common points, capped at 2 (2 meaning infinitely many).
int common_points(Pt a, Pt b, Pt c, Pt d, Pt& where) {
  const long long o1 = orient(a, b, c);
  const long long o2 = orient(a, b, d);
  const long long o3 = orient(c, d, a);
  const long long o4 = orient(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis.
    const bool use_x = a.x != b.x || c.x != d.x;
    auto key = [&](Pt p) { return use_x ? p.x : p.y; };
    const long long lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
    const long long hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
    if (lo > hi) return 0;
    if (lo < hi) return 2;
    for (Pt p : {a, b}) {
      if (key(p) == lo) where = p;
    }
    return 1;
  }
  const bool proper = ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
  if (proper) {
    where = {-1, -1};
    return 1;
  }
  if (o1 == 0 && between(a, b, c)) {
    where = c;
    return 1;
  }
  if (o2 == 0 && between(a, b, d)) {
    where = d;
    return 1;
  }
  if (o3 == 0 && between(c, d, a)) {
    where = a;
    return 1;
  }
  if (o4 == 0 && between(c, d, b)) {
    where = b;
    return 1;
  }
  return 0;
}

}  // namespace

bool plane_polylines(const Graph& g, const std::vector<Pt>& vertices, const std::vector<std::vector<Pt>>& edges) {
  struct Seg {
    Pt a;
    Pt b;
    EdgeId e;
    int i;
  };
  std::vector<Seg> segs;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    for (std::size_t i = 0; i + 1 < edges[e].size(); ++i) segs.push_back({edges[e][i], edges[e][i + 1], e, int(i)});
  }
  for (std::size_t p = 0; p < segs.size(); ++p) {
    for (std::size_t q = p + 1; q < segs.size(); ++q) {
      const Seg& s = segs[p];
      const Seg& r = segs[q];
      Pt where;
      const int k = common_points(s.a, s.b, r.a, r.b, where);
      if (k == 0) continue;
      if (k == 2) return false;
      if (s.e == r.e) {
        if (std::abs(s.i - r.i) != 1) return false;
        const Pt joint = s.i < r.i ? s.b : s.a;
        if (!same(where, joint)) return false;
        continue;
      }
      bool ok = false;
      for (VertexId v : {g.edge(s.e).u, g.edge(s.e).v}) {
        if (v != g.edge(r.e).u && v != g.edge(r.e).v) continue;
        const Pt at = vertices[v];
        const bool s_end = same(s.a, at) || same(s.b, at);
        const bool r_end = same(r.a, at) || same(r.b, at);
        if (s_end && r_end && same(where, at)) ok = true;
      }
      if (!ok) return false;
    }
  }
  return true;
}

namespace {

struct Statement {
  std::string name;
  std::vector<std::string> tokens;
};

bool is_name(const std::string& tok) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_.]*");
  return std::regex_match(tok, re);
}

bool is_number(const std::string& tok) {
  static const std::regex re("-?[0-9]+(\\.[0-9]+)?");
  return std::regex_match(tok, re);
}

// expr := [-] [coef] name { (+|-) [coef] name }
std::string check_expr(const std::vector<std::string>& toks, std::set<std::string>& names, int& terms) {
  std::size_t i = 0;
  bool need_sign = false;
  while (i < toks.size()) {
    if (need_sign) {
      if (toks[i] != "+" && toks[i] != "-") return "expected sign before " + toks[i];
      ++i;
    } else if (toks[i] == "-") {
      ++i;
    }
    if (i < toks.size() && is_number(toks[i])) ++i;
    if (i >= toks.size() || !is_name(toks[i])) return "expected variable name";
    names.insert(toks[i]);
    ++terms;
    ++i;
    need_sign = true;
  }
  return terms == 0 ? "empty expression" : "";
}

}  // namespace

LpSummary parse_lp(const std::string& text) {
  LpSummary out;
  static const char* kOrder[] = {"Minimize", "Subject To", "Bounds", "Generals", "Binaries", "End"};
  int section = -1;
  std::vector<std::vector<std::string>> body(6);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    int found = -1;
    for (int k = 0; k < 6; ++k) {
      if (line == kOrder[k]) found = k;
    }
    if (found >= 0) {
      if (found != section + 1) {
        out.error = std::string("section out of order: ") + kOrder[found];
        return out;
      }
      section = found;
      continue;
    }
    if (section < 0 || section == 5) {
      out.error = "text outside a section";
      return out;
    }
    body[section].push_back(line);
  }
  if (section != 5) {
    out.error = "missing End";
    return out;
  }
  auto statements = [&](const std::vector<std::string>& lines, std::vector<Statement>& st) {
    for (const std::string& l : lines) {
      std::istringstream ls(l);
      std::vector<std::string> toks;
      for (std::string tok; ls >> tok;) toks.push_back(tok);
      if (toks.empty()) continue;
      if (l[0] != ' ') return std::string("statement must be indented");
      if (l.size() > 1 && l[1] == ' ') {
        if (st.empty()) return std::string("continuation without statement");
        st.back().tokens.insert(st.back().tokens.end(), toks.begin(), toks.end());
        continue;
      }
      if (toks[0].size() < 2 || toks[0].back() != ':') return "unnamed statement: " + l;
      st.push_back({toks[0].substr(0, toks[0].size() - 1), {toks.begin() + 1, toks.end()}});
    }
    return std::string();
  };
  std::set<std::string> used;
  std::vector<Statement> obj;
  std::vector<Statement> rows;
  if (!(out.error = statements(body[0], obj)).empty()) return out;
  if (!(out.error = statements(body[1], rows)).empty()) return out;
  if (obj.size() != 1) {
    out.error = "objective must be one statement";
    return out;
  }
  if (!(out.error = check_expr(obj[0].tokens, used, out.objective_terms)).empty()) return out;
  for (const Statement& r : rows) {
    if (r.tokens.size() < 3) {
      out.error = "short row " + r.name;
      return out;
    }
    const std::string& sense = r.tokens[r.tokens.size() - 2];
    if (sense != "<=" && sense != ">=" && sense != "=") {
      out.error = "bad sense in " + r.name;
      return out;
    }
    if (!is_number(r.tokens.back())) {
      out.error = "bad rhs in " + r.name;
      return out;
    }
    int terms = 0;
    out.error = check_expr({r.tokens.begin(), r.tokens.end() - 2}, used, terms);
    if (!out.error.empty()) return out;
    if (!out.row_names.insert(r.name).second) {
      out.error = "duplicate row " + r.name;
      return out;
    }
    ++out.rows;
  }
  for (const std::string& l : body[2]) {
    std::istringstream ls(l);
    std::string name, op, value;
    if (!(ls >> name >> op >> value) || !is_name(name) || op != ">=" || !is_number(value)) {
      out.error = "bad bound: " + l;
      return out;
    }
  }
  std::set<std::string> declared;
  for (int k : {3, 4}) {
    for (const std::string& l : body[k]) {
      std::istringstream ls(l);
      for (std::string tok; ls >> tok;) {
        if (!is_name(tok) || !declared.insert(tok).second) {
          out.error = "bad or repeated declaration " + tok;
          return out;
        }
        ++(k == 3 ? out.generals : out.binaries);
      }
    }
  }
  for (const std::string& name : used) {
    if (!declared.count(name)) {
      out.error = "undeclared variable " + name;
      return out;
    }
  }
  return out;
}

}  // namespace oracle
