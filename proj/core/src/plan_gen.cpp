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

#include "storient/plan_gen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "storient/error.hpp"
#include "storient/random.hpp"

namespace storient {

namespace {

constexpr int kRetryCap = 10000;

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Faces are vertex cycles with the face on the left of each step; a vertex
// occurs at most once per face.
class Builder {
 public:
  Builder() : faces_{{0, 1, 2}, {0, 2, 1}}, edges_{{0, 1}, {1, 2}, {0, 2}}, vertices_(3) {
    for (const Edge& e : edges_) adjacent_.insert(pair_key(e.u, e.v));
  }

  int vertex_count() const { return vertices_; }
  static constexpr int kOuter = 1;

  void insert_vertex(Rng& rng) {
      const int k = rng.index(static_cast<int>(edges_.size()));
    const Edge e = edges_[k];
    const VertexId w = vertices_++;
    adjacent_.erase(pair_key(e.u, e.v));
    adjacent_.insert(pair_key(e.u, w));
    adjacent_.insert(pair_key(w, e.v));
    edges_[k] = {e.u, w};
    edges_.push_back({w, e.v});
    for (auto& f : faces_) {
      const int len = static_cast<int>(f.size());
      for (int i = 0; i < len; ++i) {
        const VertexId a = f[i];
        const VertexId b = f[(i + 1) % len];
        if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) {
          f.insert(f.begin() + i + 1, w);
          break;
        }
      }
    }
  }

  bool try_insert_edge(Rng& rng, EdgePolicy policy) {
    if (policy == EdgePolicy::kFacePairRetry) {
      for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        const int f = rng.index(static_cast<int>(faces_.size()));
        const int len = static_cast<int>(faces_[f].size());
        // Pairs (i, j), i < j, at boundary distance >= 2, in lexicographic order.
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < len; ++i) {
          for (int j = i + 2; j < len; ++j) {
            if (!(i == 0 && j == len - 1)) pairs.emplace_back(i, j);
          }
        }
        if (pairs.empty()) continue;
        const auto [i, j] = pairs[rng.index(static_cast<int>(pairs.size()))];
        if (adjacent_.count(pair_key(faces_[f][i], faces_[f][j]))) continue;
        split(f, i, j);
        return true;
      }
      return false;
    }
    const VertexId u = rng.index(vertices_);
    std::vector<int> incident;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
      if (position(f, u) >= 0) incident.push_back(f);
    }
    auto draw = [&] { return incident[rng.index(static_cast<int>(incident.size()))]; };
    int f = kNone;
    switch (policy) {
      case EdgePolicy::kVertexTwoFaces:
        f = draw();
        if (faces_[f].size() <= 3) f = draw();
        break;
      case EdgePolicy::kVertexFace:
        f = draw();
        break;
      case EdgePolicy::kVertexSplittableFace: {
        std::erase_if(incident, [&](int g) { return faces_[g].size() <= 3; });
        if (incident.empty()) return false;
        f = draw();
        break;
      }
      case EdgePolicy::kFacePairRetry:
        break;
    }
    if (faces_[f].size() <= 3) return false;
    return split_from(rng, f, u);
  }

  std::vector<VertexId> outer_boundary() const { return faces_[kOuter]; }

  std::vector<std::vector<VertexId>> neighbor_rotations() const {
    // At vertex v entered from a and left towards b, b follows a clockwise.
    std::vector<std::vector<std::pair<VertexId, VertexId>>> succ(vertices_);
    for (const auto& f : faces_) {
      const int len = static_cast<int>(f.size());
      for (int i = 0; i < len; ++i) {
        succ[f[i]].emplace_back(f[(i + len - 1) % len], f[(i + 1) % len]);
      }
    }
    std::vector<std::vector<VertexId>> rot(vertices_);
    for (VertexId v = 0; v < vertices_; ++v) {
      auto& s = succ[v];
      std::sort(s.begin(), s.end());
      VertexId cur = s.front().first;
      for (std::size_t k = 0; k < s.size(); ++k) {
        rot[v].push_back(cur);
        cur = std::lower_bound(s.begin(), s.end(), std::make_pair(cur, VertexId{-1}))->second;
      }
    }
    return rot;
  }

 private:
  int position(int f, VertexId v) const {
    const auto& face = faces_[f];
    const auto it = std::find(face.begin(), face.end(), v);
    return it == face.end() ? -1 : static_cast<int>(it - face.begin());
  }

  bool split_from(Rng& rng, int f, VertexId u) {
    const int len = static_cast<int>(faces_[f].size());
    const int i = position(f, u);
    std::vector<int> partners;
    for (int j = 0; j < len; ++j) {
      if (j != i && j != (i + 1) % len && j != (i + len - 1) % len) partners.push_back(j);
    }
    const int j = partners[rng.index(static_cast<int>(partners.size()))];
    if (adjacent_.count(pair_key(u, faces_[f][j]))) return false;
    split(f, std::min(i, j), std::max(i, j));
    return true;
  }

  // Chord between positions i < j; the part from i to j keeps index f.
  void split(int f, int i, int j) {
    const std::vector<VertexId> face = faces_[f];
    std::vector<VertexId> first(face.begin() + i, face.begin() + j + 1);
    std::vector<VertexId> second(face.begin() + j, face.end());
    second.insert(second.end(), face.begin(), face.begin() + i + 1);
    faces_[f] = std::move(first);
    faces_.push_back(std::move(second));
    edges_.push_back({face[i], face[j]});
    adjacent_.insert(pair_key(face[i], face[j]));
  }

  std::vector<std::vector<VertexId>> faces_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> adjacent_;
  int vertices_;
};

}  // namespace

const char* to_string(EdgePolicy policy) {
  switch (policy) {
    case EdgePolicy::kVertexTwoFaces: return "vertex-two-faces";
    case EdgePolicy::kVertexFace: return "vertex-face";
    case EdgePolicy::kVertexSplittableFace: return "vertex-splittable-face";
    case EdgePolicy::kFacePairRetry: return "face-pair-retry";
  }
  return "unknown";
}

EdgePolicy edge_policy_from_string(const std::string& name) {
  for (EdgePolicy p : {EdgePolicy::kVertexTwoFaces, EdgePolicy::kVertexFace,
                        EdgePolicy::kVertexSplittableFace, EdgePolicy::kFacePairRetry}) {
    if (name == to_string(p)) return p;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown edge policy: " + name);
}

GeneratedInstance generate(const GenConfig& config) {
  if (config.n < 3) throw Error(ErrorCode::kInvalidInput, "n must be at least 3");
  if (!(config.p_iv >= 0.0 && config.p_iv <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "p_iv must lie in [0, 1]");
  }
  Rng rng(config.seed);
  Builder b;
  GenStats stats;
  while (b.vertex_count() < config.n) {
    if (rng.bernoulli(config.p_iv)) {
      b.insert_vertex(rng);
      ++stats.insert_vertex;
    } else if (b.try_insert_edge(rng, config.policy)) {
      ++stats.insert_edge;
    } else {
      ++stats.rejected;
    }
  }
  const std::vector<VertexId> outer = b.outer_boundary();
  const int len = static_cast<int>(outer.size());
  const int i = rng.index(len);
  const int j = (i + 1 + rng.index(len - 1)) % len;
  GeneratedInstance out;
  out.s = outer[i];
  out.t = outer[j];
  out.graph = PlaneGraph::from_neighbor_rotations(b.neighbor_rotations(), VertexPair{out.s, out.t});
  out.stats = stats;
  return out;
}

Rational density(const Graph& g) {
  if (g.vertex_count() == 0) return Rational(0);
  return Rational(g.edge_count(), g.vertex_count());
}

DensityStats sample_stats(int n, double p_iv, const std::vector<std::uint64_t>& seeds, EdgePolicy policy) {
  if (seeds.empty()) throw Error(ErrorCode::kInvalidInput, "seed list is empty");
  DensityStats st;
  st.samples = static_cast<int>(seeds.size());
  std::int64_t total_edges = 0;
  std::vector<int> edge_counts;
  for (std::uint64_t seed : seeds) {
    const GeneratedInstance inst = generate({n, p_iv, seed, policy});
    const Rational d = density(inst.graph);
    edge_counts.push_back(inst.graph.edge_count());
    total_edges += inst.graph.edge_count();
    if (edge_counts.size() == 1 || d < st.min) st.min = d;
    if (edge_counts.size() == 1 || d > st.max) st.max = d;
  }
  const std::int64_t k = st.samples;
  st.avg = Rational(total_edges, k * n);
  const double mean = st.avg.to_double();
  double acc = 0.0;
  for (int m : edge_counts) {
    const double diff = static_cast<double>(m) / n - mean;
    acc += diff * diff;
  }
  st.sd = std::sqrt(acc / static_cast<double>(k));
  return st;
}

}  // namespace storient
