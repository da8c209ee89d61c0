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

#include "label_search.hpp"

#include <algorithm>
#include <chrono>

#include "storient/random.hpp"

namespace storient::detail {

namespace {

using Clock = std::chrono::steady_clock;

class LabelSearch {
 public:
  LabelSearch(const PlaneGraph& g, VertexId s, VertexId t, std::vector<char> small, const SearchLimits& limits)
      : g_(g), s_(s), t_(t), limits_(limits), rng_(limits.seed), small_(std::move(small)) {
    pos_.assign(g.angle_count(), 0);
    for (const Face& f : g.faces()) {
      const auto angles = g.angles_of_face(f.id);
      for (int i = 0; i < f.degree(); ++i) pos_[angles[i]] = i;
    }
    sides_.assign(g.edge_count(), 0);
    for (const Face& f : g.faces()) {
      if (!g.is_internal(f.id)) continue;
      const auto angles = g.angles_of_face(f.id);
      for (int i = 0; i < f.degree(); ++i) {
        if (small_[angles[i]] && small_[angles[(i + 1) % f.degree()]] && sides_[f.boundary[i].edge]++ == 0) {
          ++value_;
        }
      }
    }
    for (AngleId a = 0; a < g.angle_count(); ++a) {
      if (movable(a)) movable_.push_back(a);
    }
    face_used_.assign(g.face_count(), 0);
    vertex_used_.assign(g.vertex_count(), 0);
  }

  SearchResult run() {
    const auto start = Clock::now();
    auto expired = [&] {
      if (limits_.max_flips > 0 && flips_ >= limits_.max_flips) return true;
      return limits_.time_limit_s > 0 &&
             std::chrono::duration<double>(Clock::now() - start).count() >= limits_.time_limit_s;
    };
    SearchResult best{small_, value_, 0};
    descend(expired);
    if (value_ < best.value) best = {small_, value_, 0};
    for (int idle = 0; idle < limits_.max_idle_rounds && !expired() && best.value > 0; ++idle) {
      for (int k = 0; k < 3; ++k) kick();
      descend(expired);
      if (value_ < best.value) {
        best = {small_, value_, 0};
        idle = -1;
      } else if (value_ > best.value) {
        restore(best.small);
      }
    }
    best.flips = flips_;
    return best;
  }

 private:
  bool movable(AngleId a) const {
    const Angle& angle = g_.angle(a);
    return g_.is_internal(angle.face) && angle.vertex != s_ && angle.vertex != t_;
  }

  void flip(AngleId a) {
    ++flips_;
    const Angle& angle = g_.angle(a);
    const Face& f = g_.face(angle.face);
    const auto angles = g_.angles_of_face(angle.face);
    const int d = f.degree();
    const int p = pos_[a];
    const int q = (p + d - 1) % d;
    if (small_[a]) {
      if (small_[angles[(p + 1) % d]] && --sides_[f.boundary[p].edge] == 0) --value_;
      if (small_[angles[q]] && --sides_[f.boundary[q].edge] == 0) --value_;
      small_[a] = 0;
    } else {
      small_[a] = 1;
      if (small_[angles[(p + 1) % d]] && sides_[f.boundary[p].edge]++ == 0) ++value_;
      if (small_[angles[q]] && sides_[f.boundary[q].edge]++ == 0) ++value_;
    }
  }

  void restore(const std::vector<char>& target) {
    for (AngleId a : movable_) {
      if (small_[a] != target[a]) flip(a);
    }
  }

  // Vertex v has lost an S angle; close the cycle at face `target`, which has
  // lost one too. With `improve` the cycle must lower the value below `base`,
  // otherwise any closing cycle is taken in random order.
  bool extend(VertexId v, FaceId target, int depth, bool improve, int base) {
    AngleId options[8];
    int n = 0;
    for (AngleId b : g_.angles_of_vertex(v)) {
      if (!small_[b] && movable(b) && n < 8) options[n++] = b;
    }
    if (!improve) std::shuffle(options, options + n, Shuffler{rng_});
    for (int k = 0; k < n; ++k) {
      const AngleId b = options[k];
      const FaceId fb = g_.angle(b).face;
      if (fb != target && face_used_[fb]) continue;
      flip(b);
      if (fb == target) {
        if (!improve || value_ < base) return true;
        flip(b);
        continue;
      }
      if (depth < limits_.max_cycle_faces) {
        face_used_[fb] = 1;
        AngleId next[8];
        int m = 0;
        for (AngleId c : g_.angles_of_face(fb)) {
          if (c != b && small_[c] && movable(c) && !vertex_used_[g_.angle(c).vertex] && m < 8) next[m++] = c;
        }
        if (!improve) std::shuffle(next, next + m, Shuffler{rng_});
        for (int r = 0; r < m; ++r) {
          const AngleId c = next[r];
          const VertexId w = g_.angle(c).vertex;
          flip(c);
          vertex_used_[w] = 1;
          const bool done = extend(w, target, depth + 1, improve, base);
          vertex_used_[w] = 0;
          if (done) {
            face_used_[fb] = 0;
            return true;
          }
          flip(c);
        }
        face_used_[fb] = 0;
      }
      flip(b);
    }
    return false;
  }

  bool cycle_from(AngleId a, bool improve) {
    const Angle& angle = g_.angle(a);
    const int base = value_;
    flip(a);
    vertex_used_[angle.vertex] = 1;
    const bool done = extend(angle.vertex, angle.face, 1, improve, base);
    vertex_used_[angle.vertex] = 0;
    if (!done) flip(a);
    return done;
  }

  template <typename Expired>
  void descend(const Expired& expired) {
    bool improved = true;
    while (improved && !expired()) {
      improved = false;
      std::shuffle(movable_.begin(), movable_.end(), Shuffler{rng_});
      for (AngleId a : movable_) {
        if (expired()) return;
        if (small_[a] && cycle_from(a, true)) improved = true;
      }
    }
  }

  void kick() {
    for (int tries = 0; tries < 32; ++tries) {
      const AngleId a = movable_[rng_.index(static_cast<int>(movable_.size()))];
      if (small_[a] && cycle_from(a, false)) return;
    }
  }

  // UniformRandomBitGenerator view of Rng for std::shuffle.
  struct Shuffler {
    Rng& rng;
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return rng.next(); }
  };

  const PlaneGraph& g_;
  VertexId s_;
  VertexId t_;
  SearchLimits limits_;
  Rng rng_;
  std::vector<char> small_;
  std::vector<int> pos_;
  std::vector<int> sides_;
  int value_ = 0;
  std::int64_t flips_ = 0;
  std::vector<AngleId> movable_;
  std::vector<char> face_used_;
  std::vector<char> vertex_used_;
};

}  // namespace

SearchResult improve_labeling(const PlaneGraph& g, VertexId s, VertexId t, std::vector<char> small,
                              const SearchLimits& limits) {
  LabelSearch search(g, s, t, std::move(small), limits);
  return search.run();
}

}  // namespace storient::detail
