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

#include "storient/nto_decide.hpp"

#include <algorithm>
#include <chrono>

#include "storient/error.hpp"

namespace storient {

const char* to_string(NtoStatus status) {
  switch (status) {
    case NtoStatus::kSat: return "SAT";
    case NtoStatus::kUnsat: return "UNSAT";
    case NtoStatus::kBudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

enum Dir : std::uint8_t { kOpen = 0, kForward = 1, kBackward = 2 };

class Search {
 public:
  Search(const Graph& g, VertexId s, VertexId t, bool prune_transitive, const NtoBudget& budget,
         const std::function<bool(const StOrientation&)>& visit)
      : g_(g), s_(s), t_(t), prune_(prune_transitive), budget_(budget), visit_(visit), start_(Clock::now()) {
    const int n = g.vertex_count();
    dir_.assign(g.edge_count(), kOpen);
    in_.assign(n, 0);
    out_.assign(n, 0);
    open_.resize(n);
    for (VertexId v = 0; v < n; ++v) open_[v] = g.degree(v);
    mark_a_.assign(n, 0);
    mark_b_.assign(n, 0);
  }

  EnumerationResult run() {
    bool ok = true;
    for (EdgeId e : g_.incident(s_)) ok = ok && assign(e, s_);
    for (EdgeId e : g_.incident(t_)) {
      if (ok && dir_[e] == kOpen) ok = assign(e, g_.opposite(e, t_));
    }
    if (ok) {
      ++nodes_;
      branch();
    }
    return {count_, !stopped_, nodes_};
  }

 private:
  VertexId tail(EdgeId e) const { return dir_[e] == kForward ? g_.edge(e).u : g_.edge(e).v; }
  VertexId head(EdgeId e) const { return dir_[e] == kForward ? g_.edge(e).v : g_.edge(e).u; }

  // Marks vertices reachable from `from` along decided arcs, forward or
  // backward.
  void reach(VertexId from, bool forward, std::vector<int>& mark, std::vector<VertexId>& seen) {
    ++epoch_;
    seen.clear();
    stack_.assign(1, from);
    mark[from] = epoch_;
    seen.push_back(from);
    while (!stack_.empty()) {
      const VertexId x = stack_.back();
      stack_.pop_back();
      for (EdgeId e : g_.incident(x)) {
        if (dir_[e] == kOpen) continue;
        if ((forward ? tail(e) : head(e)) != x) continue;
        const VertexId y = g_.opposite(e, x);
        if (mark[y] == epoch_) continue;
        mark[y] = epoch_;
        seen.push_back(y);
        stack_.push_back(y);
      }
    }
  }

  // Directs e away from `from` and runs propagation to a fixpoint.
  bool assign(EdgeId e, VertexId from) {
    pending_.clear();
    pending_.push_back({e, from});
    while (!pending_.empty()) {
      const auto [edge, tail_v] = pending_.back();
      pending_.pop_back();
      if (dir_[edge] != kOpen) {
        if (tail(edge) != tail_v) return false;
        continue;
      }
      if (!place(edge, tail_v)) return false;
    }
    return true;
  }

  bool place(EdgeId e, VertexId u) {
    const VertexId v = g_.opposite(e, u);
    if (v == s_ || u == t_) return false;
    // Cycle: v already reaches u.
    reach(v, true, mark_b_, seen_b_);
    if (mark_b_[u] == epoch_) return false;
    if (prune_) {
      reach(u, true, mark_b_, seen_b_);
      if (mark_b_[v] == epoch_) return false;
    }
    dir_[e] = g_.edge(e).u == u ? kForward : kBackward;
    trail_.push_back(e);
    ++out_[u];
    ++in_[v];
    --open_[u];
    --open_[v];

    reach(u, false, mark_a_, seen_a_);
    reach(v, true, mark_b_, seen_b_);
    const int epoch_b = epoch_;
    for (VertexId x : seen_a_) {
      for (EdgeId f : g_.incident(x)) {
        if (f == e) continue;
        const VertexId y = g_.opposite(f, x);
        if (mark_b_[y] != epoch_b) continue;
        if (dir_[f] == kOpen) {
          if (prune_) return false;
          pending_.push_back({f, x});
        } else if (prune_ && tail(f) == x) {
          return false;
        }
      }
    }
    return degree_rule(u) && degree_rule(v);
  }

  bool degree_rule(VertexId x) {
    if (x == s_ || x == t_) return true;
    if (open_[x] == 0) return in_[x] > 0 && out_[x] > 0;
    if (open_[x] == 1 && (in_[x] == 0 || out_[x] == 0)) {
      for (EdgeId f : g_.incident(x)) {
        if (dir_[f] != kOpen) continue;
        // No incoming arc yet: f must enter x.
        pending_.push_back({f, in_[x] == 0 ? g_.opposite(f, x) : x});
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId e = trail_.back();
      trail_.pop_back();
      const VertexId u = tail(e);
      const VertexId v = head(e);
      --out_[u];
      --in_[v];
      ++open_[u];
      ++open_[v];
      dir_[e] = kOpen;
    }
  }

  bool out_of_budget() {
    if (stopped_) return true;
    if (budget_.node_limit > 0 && nodes_ >= budget_.node_limit) stopped_ = true;
    if (budget_.time_limit_s > 0 && (nodes_ & 255) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() >= budget_.time_limit_s) {
      stopped_ = true;
    }
    return stopped_;
  }

  void branch() {
    EdgeId pick = kNone;
    int best = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (dir_[e] != kOpen) continue;
      const int score = std::min(open_[g_.edge(e).u], open_[g_.edge(e).v]);
      if (pick == kNone || score < best) {
        pick = e;
        best = score;
      }
    }
    if (pick == kNone) {
      ++count_;
      if (!visit_(current())) stopped_ = true;
      return;
    }
    for (VertexId from : {g_.edge(pick).u, g_.edge(pick).v}) {
      if (out_of_budget()) return;
      ++nodes_;
      const std::size_t mark = trail_.size();
      if (assign(pick, from)) branch();
      undo(mark);
      if (stopped_) return;
    }
  }

  StOrientation current() const {
    StOrientation o;
    o.source = s_;
    o.sink = t_;
    o.arcs.reserve(g_.edge_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) o.arcs.push_back({tail(e), head(e)});
    return o;
  }

  const Graph& g_;
  VertexId s_;
  VertexId t_;
  bool prune_;
  NtoBudget budget_;
  const std::function<bool(const StOrientation&)>& visit_;
  Clock::time_point start_;

  std::vector<Dir> dir_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<int> open_;
  std::vector<EdgeId> trail_;
  std::vector<std::pair<EdgeId, VertexId>> pending_;
  std::vector<int> mark_a_;
  std::vector<int> mark_b_;
  std::vector<VertexId> seen_a_;
  std::vector<VertexId> seen_b_;
  std::vector<VertexId> stack_;
  int epoch_ = 0;

  std::int64_t nodes_ = 0;
  std::int64_t count_ = 0;
  bool stopped_ = false;
};

void check_terminals(const Graph& g, VertexId s, VertexId t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t) {
    throw Error(ErrorCode::kNotAdmissible, "terminals must be distinct vertices");
  }
}

}  // namespace

EnumerationResult enumerate_orientations(const Graph& g, VertexId s, VertexId t, EnumerationMode mode,
                                         const std::function<bool(const StOrientation&)>& visit,
                                         const NtoBudget& budget) {
  check_terminals(g, s, t);
  Search search(g, s, t, mode == EnumerationMode::kNonTransitive, budget, visit);
  return search.run();
}

NtoResult nto_decide(const Graph& g, VertexId s, VertexId t, const NtoBudget& budget) {
  NtoResult result;
  const std::function<bool(const StOrientation&)> keep = [&](const StOrientation& o) {
    result.witness = o;
    return false;
  };
  check_terminals(g, s, t);
  Search search(g, s, t, true, budget, keep);
  const EnumerationResult run = search.run();
  result.nodes = run.nodes;
  if (result.witness) {
    result.status = NtoStatus::kSat;
  } else {
    result.status = run.complete ? NtoStatus::kUnsat : NtoStatus::kBudgetExhausted;
  }
  return result;
}

}  // namespace storient
