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

#include "storient/ilp_solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

#include "label_search.hpp"
#include "storient/error.hpp"
#include "storient/st_core.hpp"

namespace storient {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-7;
constexpr int kRootIterations = 400;
constexpr int kNodeIterations = 25;
constexpr double kRootTheta = 2.0;
constexpr double kNodeTheta = 0.5;
constexpr std::int64_t kSearchFlipsPerAngle = 40000;

enum Status : std::uint8_t { kFree = 0, kSmall = 1, kFlat = 2 };

struct Pick {
  double value = kInf;
  int i = -1;
  int j = -1;
};

struct Side {
  FaceId face = kNone;
  int pos = 0;
};

class Solver {
 public:
  Solver(const PlaneGraph& g, VertexId s, VertexId t, const SolveBudget& budget)
      : g_(g), s_(s), t_(t), budget_(budget), start_(Clock::now()) {}

  Solution run();

 private:
  bool terminal(VertexId v) const { return v == s_ || v == t_; }

  void setup();
  void assign(AngleId a, Status value);
  void undo(std::size_t mark);
  bool propagate();
  void enqueue_angle(AngleId a);

  double mu(FaceId f, int pos) const;
  double cost(AngleId a) const { return terminal(g_.angle(a).vertex) ? 0.0 : -lambda_[g_.angle(a).vertex]; }
  Pick solve_face(FaceId f, int force_pos, Status force_value) const;
  double evaluate();
  void step_multipliers(double value, double target, double theta);
  // Returns false when the node can be pruned.
  bool bound_node(int iterations, double theta);
  bool reduced_cost_fixing();

  void dfs(std::size_t order_pos);
  bool out_of_budget();
  void record_incumbent();
  StLabeling labeling_from(const std::vector<Status>& status) const;

  const PlaneGraph& g_;
  VertexId s_;
  VertexId t_;
  SolveBudget budget_;
  Clock::time_point start_;

  std::vector<Status> status_;
  std::vector<int> face_small_;
  std::vector<int> face_free_;
  std::vector<int> vertex_small_;
  std::vector<int> vertex_free_;
  std::vector<int> vertex_need_;
  std::vector<std::vector<AngleId>> vertex_angles_;  // internal angles
  std::vector<int> pos_in_face_;
  std::vector<int> transitive_sides_;  // per edge, faces where both ends are S
  int committed_ = 0;
  std::vector<AngleId> trail_;
  std::vector<int> queue_;  // faces as f, vertices as face_count + v
  std::vector<char> queued_;

  std::vector<std::array<Side, 2>> sides_;  // internal sides per edge
  std::vector<int> side_count_;
  std::vector<AngleId> order_;

  std::vector<double> lambda_;
  std::vector<double> alpha_;  // weight of side 0 for edges with two internal sides
  std::vector<Pick> picks_;
  double last_value_ = 0.0;
  int root_bound_ = 0;
  std::vector<int> grad_vertex_;
  std::vector<int> grad_edge_;

  int cutoff_ = 0;
  bool have_dfs_incumbent_ = false;
  std::vector<Status> best_;
  int best_value_ = 0;
  bool exhausted_ = false;
  std::int64_t nodes_ = 0;
};

void Solver::setup() {
  const int na = g_.angle_count();
  status_.assign(na, kFree);
  face_small_.assign(g_.face_count(), 0);
  face_free_.assign(g_.face_count(), 0);
  vertex_small_.assign(g_.vertex_count(), 0);
  vertex_free_.assign(g_.vertex_count(), 0);
  vertex_need_.assign(g_.vertex_count(), 0);
  vertex_angles_.assign(g_.vertex_count(), {});
  pos_in_face_.assign(na, -1);
  transitive_sides_.assign(g_.edge_count(), 0);
  queued_.assign(g_.face_count() + g_.vertex_count(), 0);
  sides_.assign(g_.edge_count(), {});
  side_count_.assign(g_.edge_count(), 0);
  lambda_.assign(g_.vertex_count(), 0.0);
  alpha_.assign(g_.edge_count(), 0.5);
  picks_.assign(g_.face_count(), {});
  grad_vertex_.assign(g_.vertex_count(), 0);
  grad_edge_.assign(g_.edge_count(), 0);

  for (const Face& f : g_.faces()) {
    const auto angles = g_.angles_of_face(f.id);
    for (int i = 0; i < f.degree(); ++i) pos_in_face_[angles[i]] = i;
    if (!g_.is_internal(f.id)) continue;
    face_free_[f.id] = f.degree();
    for (int i = 0; i < f.degree(); ++i) {
      const EdgeId e = f.boundary[i].edge;
      if (side_count_[e] < 2) sides_[e][side_count_[e]++] = {f.id, i};
    }
  }
  for (VertexId v = 0; v < g_.vertex_count(); ++v) {
    for (AngleId a : g_.angles_of_vertex(v)) {
      if (g_.is_internal(g_.angle(a).face)) vertex_angles_[v].push_back(a);
    }
    vertex_free_[v] = static_cast<int>(vertex_angles_[v].size());
    vertex_need_[v] = g_.degree(v) - 2;
  }

  // Static branching order: faces by degree then id, angles by edge id.
  std::vector<FaceId> faces;
  for (const Face& f : g_.faces()) {
    if (g_.is_internal(f.id)) faces.push_back(f.id);
  }
  std::stable_sort(faces.begin(), faces.end(),
                   [&](FaceId a, FaceId b) { return g_.face(a).degree() < g_.face(b).degree(); });
  for (FaceId f : faces) {
    std::vector<AngleId> angles;
    for (AngleId a : g_.angles_of_face(f)) {
      if (!terminal(g_.angle(a).vertex)) angles.push_back(a);
    }
    std::sort(angles.begin(), angles.end(), [&](AngleId a, AngleId b) {
      const Angle& x = g_.angle(a);
      const Angle& y = g_.angle(b);
      return std::minmax(x.prev_edge, x.next_edge) < std::minmax(y.prev_edge, y.next_edge);
    });
    order_.insert(order_.end(), angles.begin(), angles.end());
  }
}

void Solver::enqueue_angle(AngleId a) {
  const Angle& angle = g_.angle(a);
  const int fi = angle.face;
  if (!queued_[fi]) {
    queued_[fi] = 1;
    queue_.push_back(fi);
  }
  if (!terminal(angle.vertex)) {
    const int vi = g_.face_count() + angle.vertex;
    if (!queued_[vi]) {
      queued_[vi] = 1;
      queue_.push_back(vi);
    }
  }
}

void Solver::assign(AngleId a, Status value) {
  const Angle& angle = g_.angle(a);
  status_[a] = value;
  trail_.push_back(a);
  --face_free_[angle.face];
  if (!terminal(angle.vertex)) --vertex_free_[angle.vertex];
  if (value == kSmall) {
    ++face_small_[angle.face];
    if (!terminal(angle.vertex)) ++vertex_small_[angle.vertex];
    const Face& f = g_.face(angle.face);
    const auto angles = g_.angles_of_face(angle.face);
    const int d = f.degree();
    const int p = pos_in_face_[a];
    if (status_[angles[(p + 1) % d]] == kSmall && ++transitive_sides_[f.boundary[p].edge] == 1) ++committed_;
    const int q = (p + d - 1) % d;
    if (status_[angles[q]] == kSmall && ++transitive_sides_[f.boundary[q].edge] == 1) ++committed_;
  }
  enqueue_angle(a);
}

void Solver::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const AngleId a = trail_.back();
    trail_.pop_back();
    const Angle& angle = g_.angle(a);
    if (status_[a] == kSmall) {
      const Face& f = g_.face(angle.face);
      const auto angles = g_.angles_of_face(angle.face);
      const int d = f.degree();
      const int p = pos_in_face_[a];
      if (status_[angles[(p + 1) % d]] == kSmall && --transitive_sides_[f.boundary[p].edge] == 0) --committed_;
      const int q = (p + d - 1) % d;
      if (status_[angles[q]] == kSmall && --transitive_sides_[f.boundary[q].edge] == 0) --committed_;
      --face_small_[angle.face];
      if (!terminal(angle.vertex)) --vertex_small_[angle.vertex];
    }
    status_[a] = kFree;
    ++face_free_[angle.face];
    if (!terminal(angle.vertex)) ++vertex_free_[angle.vertex];
  }
}

bool Solver::propagate() {
  bool ok = true;
  std::size_t head = 0;
  while (head < queue_.size()) {
    const int item = queue_[head++];
    queued_[item] = 0;
    if (!ok) continue;
    int small = 0;
    int free = 0;
    int need = 0;
    std::span<const AngleId> angles;
    if (item < g_.face_count()) {
      small = face_small_[item];
      free = face_free_[item];
      need = 2;
      angles = g_.angles_of_face(item);
    } else {
      const VertexId v = item - g_.face_count();
      small = vertex_small_[v];
      free = vertex_free_[v];
      need = vertex_need_[v];
      angles = vertex_angles_[v];
    }
    if (small > need || small + free < need) {
      ok = false;
      continue;
    }
    if (free == 0 || (small < need && small + free > need)) continue;
    const Status value = small == need ? kFlat : kSmall;
    for (AngleId a : angles) {
      if (status_[a] == kFree) assign(a, value);
    }
  }
  queue_.clear();
  return ok;
}

double Solver::mu(FaceId f, int pos) const {
  const EdgeId e = g_.face(f).boundary[pos].edge;
  if (side_count_[e] < 2) return 1.0;
  auto committed = [&](const Side& side) {
    const auto angles = g_.angles_of_face(side.face);
    const int d = static_cast<int>(angles.size());
    return status_[angles[side.pos]] == kSmall && status_[angles[(side.pos + 1) % d]] == kSmall;
  };
  const bool first = sides_[e][0].face == f && sides_[e][0].pos == pos;
  if (committed(sides_[e][0])) return first ? 1.0 : 0.0;
  if (committed(sides_[e][1])) return first ? 0.0 : 1.0;
  return first ? alpha_[e] : 1.0 - alpha_[e];
}

Pick Solver::solve_face(FaceId f, int force_pos, Status force_value) const {
  const auto angles = g_.angles_of_face(f);
  const int d = static_cast<int>(angles.size());
  auto status_at = [&](int p) { return p == force_pos ? force_value : status_[angles[p]]; };
  auto penalty = [&](int i, int j) {
    if (j == (i + 1) % d) return mu(f, i);
    if (i == (j + 1) % d) return mu(f, j);
    return 0.0;
  };
  int fixed[2];
  int nfixed = 0;
  for (int p = 0; p < d; ++p) {
    if (status_at(p) == kSmall) {
      if (nfixed == 2) return {};
      fixed[nfixed++] = p;
    }
  }
  Pick best;
  if (nfixed == 2) {
    best = {cost(angles[fixed[0]]) + cost(angles[fixed[1]]) + penalty(fixed[0], fixed[1]), fixed[0], fixed[1]};
    return best;
  }
  if (nfixed == 1) {
    const int i = fixed[0];
    const double ci = cost(angles[i]);
    for (int j = 0; j < d; ++j) {
      if (j == i || status_at(j) != kFree) continue;
      const double v = ci + cost(angles[j]) + penalty(i, j);
      if (v < best.value - kEps) best = {v, std::min(i, j), std::max(i, j)};
    }
    return best;
  }
  // Adjacent pairs.
  for (int i = 0; i < d; ++i) {
    const int j = (i + 1) % d;
    if (status_at(i) != kFree || status_at(j) != kFree) continue;
    const double v = cost(angles[i]) + cost(angles[j]) + mu(f, i);
    if (v < best.value - kEps) best = {v, std::min(i, j), std::max(i, j)};
  }
  // Non-adjacent pairs: the cheaper end is among the three cheapest free
  // angles and its partner among the six cheapest.
  constexpr int kTop = 6;
  std::array<int, kTop> top{};
  std::array<double, kTop> top_cost{};
  int ntop = 0;
  for (int p = 0; p < d; ++p) {
    if (status_at(p) != kFree) continue;
    const double c = cost(angles[p]);
    int k = ntop < kTop ? ntop++ : kTop;
    if (k == kTop) {
      if (c >= top_cost[kTop - 1]) continue;
      k = kTop - 1;
    }
    while (k > 0 && top_cost[k - 1] > c) {
      top[k] = top[k - 1];
      top_cost[k] = top_cost[k - 1];
      --k;
    }
    top[k] = p;
    top_cost[k] = c;
  }
  for (int a = 0; a < std::min(ntop, 3); ++a) {
    for (int b = a + 1; b < ntop; ++b) {
      const int i = top[a];
      const int j = top[b];
      if (j == (i + 1) % d || i == (j + 1) % d) continue;
      const double v = top_cost[a] + top_cost[b];
      if (v < best.value - kEps) best = {v, std::min(i, j), std::max(i, j)};
    }
  }
  return best;
}

double Solver::evaluate() {
  double value = 0.0;
  for (VertexId v = 0; v < g_.vertex_count(); ++v) {
    if (!terminal(v)) value += lambda_[v] * vertex_need_[v];
  }
  for (const Face& f : g_.faces()) {
    if (!g_.is_internal(f.id)) continue;
    picks_[f.id] = solve_face(f.id, -1, kFree);
    value += picks_[f.id].value;
  }
  last_value_ = value;
  return value;
}

void Solver::step_multipliers(double value, double target, double theta) {
  std::fill(grad_vertex_.begin(), grad_vertex_.end(), 0);
  for (VertexId v = 0; v < g_.vertex_count(); ++v) {
    if (!terminal(v)) grad_vertex_[v] = vertex_need_[v];
  }
  for (const Face& f : g_.faces()) {
    if (!g_.is_internal(f.id)) continue;
    const Pick& p = picks_[f.id];
    const auto angles = g_.angles_of_face(f.id);
    for (int k : {p.i, p.j}) {
      const VertexId v = g_.angle(angles[k]).vertex;
      if (!terminal(v)) --grad_vertex_[v];
    }
  }
  double norm = 0.0;
  for (VertexId v = 0; v < g_.vertex_count(); ++v) norm += static_cast<double>(grad_vertex_[v]) * grad_vertex_[v];
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    grad_edge_[e] = 0;
    if (side_count_[e] < 2) continue;
    int y[2];
    for (int k = 0; k < 2; ++k) {
      const Side& side = sides_[e][k];
      const Pick& p = picks_[side.face];
      const int d = g_.face(side.face).degree();
      y[k] = (p.i == side.pos && p.j == (side.pos + 1) % d) || (p.j == side.pos && p.i == (side.pos + 1) % d);
    }
    grad_edge_[e] = y[0] - y[1];
    norm += grad_edge_[e] * grad_edge_[e];
  }
  if (norm == 0.0) return;
  const double step = theta * std::max(target - value, 0.05) / norm;
  for (VertexId v = 0; v < g_.vertex_count(); ++v) lambda_[v] += step * grad_vertex_[v];
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    if (grad_edge_[e] != 0) alpha_[e] = std::clamp(alpha_[e] + step * grad_edge_[e], 0.0, 1.0);
  }
}

bool Solver::bound_node(int iterations, double theta) {
  const double target = cutoff_;
  double best = -kInf;
  int stall = 0;
  for (int it = 0;; ++it) {
    const double value = evaluate();
    if (value == kInf) return false;
    if (nodes_ == 1) root_bound_ = std::max(root_bound_, static_cast<int>(std::ceil(value - kEps)));
    if (std::ceil(value - kEps) >= cutoff_) return false;
    if (value > best + 1e-6) {
      best = value;
      stall = 0;
    } else if (++stall >= 5) {
      theta = std::max(theta * 0.5, 1e-3);
      stall = 0;
    }
    if (it + 1 >= iterations) return true;
    step_multipliers(value, target, theta);
  }
}

bool Solver::reduced_cost_fixing() {
  const double slack = cutoff_ - 1 + kEps;
  std::vector<std::pair<AngleId, Status>> fixes;
  for (const Face& f : g_.faces()) {
    if (!g_.is_internal(f.id)) continue;
    const Pick& p = picks_[f.id];
    const auto angles = g_.angles_of_face(f.id);
    for (int k = 0; k < f.degree(); ++k) {
      if (status_[angles[k]] != kFree) continue;
      const bool chosen = k == p.i || k == p.j;
      const Pick alt = solve_face(f.id, k, chosen ? kFlat : kSmall);
      if (last_value_ - p.value + alt.value > slack) fixes.emplace_back(angles[k], chosen ? kSmall : kFlat);
    }
  }
  for (const auto& [a, value] : fixes) assign(a, value);
  return propagate();
}

bool Solver::out_of_budget() {
  if (exhausted_) return true;
  if (budget_.node_limit > 0 && nodes_ >= budget_.node_limit) exhausted_ = true;
  if (budget_.time_limit_s > 0 && (nodes_ & 63) == 0) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    if (elapsed >= budget_.time_limit_s) exhausted_ = true;
  }
  return exhausted_;
}

void Solver::record_incumbent() {
  best_ = status_;
  best_value_ = committed_;
  cutoff_ = committed_;
  have_dfs_incumbent_ = true;
}

void Solver::dfs(std::size_t order_pos) {
  if (out_of_budget()) return;
  ++nodes_;
  if (committed_ >= cutoff_) return;
  const std::size_t mark = trail_.size();
  const bool root = nodes_ == 1;
  if (!bound_node(root ? kRootIterations : kNodeIterations, root ? kRootTheta : kNodeTheta) ||
      !reduced_cost_fixing()) {
    undo(mark);
    return;
  }
  while (order_pos < order_.size() && status_[order_[order_pos]] != kFree) ++order_pos;
  if (order_pos == order_.size()) {
    if (committed_ < cutoff_) record_incumbent();
    undo(mark);
    return;
  }
  const AngleId a = order_[order_pos];
  for (Status value : {kFlat, kSmall}) {
    const std::size_t branch_mark = trail_.size();
    assign(a, value);
    if (propagate()) dfs(order_pos + 1);
    undo(branch_mark);
    if (exhausted_) break;
  }
  undo(mark);
}

StLabeling Solver::labeling_from(const std::vector<Status>& status) const {
  StLabeling out;
  out.source = s_;
  out.sink = t_;
  out.label.resize(g_.angle_count());
  for (AngleId a = 0; a < g_.angle_count(); ++a) {
    const Angle& angle = g_.angle(a);
    if (!g_.is_internal(angle.face)) {
      out.label[a] = terminal(angle.vertex) ? AngleLabel::kUnlabeled : AngleLabel::kFlat;
    } else {
      out.label[a] = status[a] == kSmall ? AngleLabel::kSmall : AngleLabel::kFlat;
    }
  }
  return out;
}

Solution Solver::run() {
  const StOrientation heur = heuristic_orientation(g_, s_, t_);
  const StLabeling heur_labels = labels_from_orientation(g_, heur);
  const int heur_value = static_cast<int>(transitive_edges_faces(g_, heur).size());

  std::vector<char> small(g_.angle_count(), 0);
  for (AngleId a = 0; a < g_.angle_count(); ++a) small[a] = heur_labels.label[a] == AngleLabel::kSmall;
  detail::SearchLimits limits;
  limits.max_flips = kSearchFlipsPerAngle * g_.angle_count();
  if (budget_.time_limit_s > 0) limits.time_limit_s = 0.25 * budget_.time_limit_s;
  const detail::SearchResult searched = detail::improve_labeling(g_, s_, t_, std::move(small), limits);

  setup();
  cutoff_ = searched.value + 1;
  for (AngleId a = 0; a < g_.angle_count(); ++a) {
    const Angle& angle = g_.angle(a);
    if (g_.is_internal(angle.face) && terminal(angle.vertex)) assign(a, kSmall);
  }
  if (propagate()) dfs(0);
  const int root_bound = std::min(root_bound_, searched.value);

  Solution sol;
  if (have_dfs_incumbent_) {
    sol.labeling = labeling_from(best_);
    sol.objective_value = best_value_;
  } else {
    std::vector<Status> status(g_.angle_count(), kFlat);
    for (AngleId a = 0; a < g_.angle_count(); ++a) {
      if (searched.small[a]) status[a] = kSmall;
    }
    sol.labeling = labeling_from(status);
    sol.objective_value = searched.value;
  }
  sol.proven_optimal = !exhausted_;
  sol.lower_bound = sol.proven_optimal ? sol.objective_value : root_bound;
  sol.stats.nodes = nodes_;
  sol.stats.runtime_s = std::chrono::duration<double>(Clock::now() - start_).count();
  sol.stats.heuristic_objective = heur_value;
  sol.stats.root_bound = root_bound;
  return sol;
}

}  // namespace

Solution solve_min_transitive(const PlaneGraph& g, VertexId s, VertexId t, const SolveBudget& budget) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t || !st_on_outer_face(g, s, t)) {
    throw Error(ErrorCode::kNotAdmissible, "terminals must be admissible and on the outer face");
  }
  Solver solver(g, s, t, budget);
  return solver.run();
}

bool verify_solution(const PlaneGraph& g, VertexId s, VertexId t, const Solution& solution) {
  const StLabeling& l = solution.labeling;
  if (l.source != s || l.sink != t) return false;
  if (!validate_labeling(g, l).passed()) return false;
  try {
    const StOrientation o = orientation_from_labels(g, l);
    return static_cast<int>(transitive_edges_reach(g, o).size()) == solution.objective_value;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace storient
