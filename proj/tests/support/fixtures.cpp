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

#include "fixtures.hpp"

#include "storient/random.hpp"

namespace fixture {

namespace {

PgInstance make(const std::vector<std::vector<int>>& rotations, int s, int t) {
  PgInstance inst;
  inst.graph = storient::PlaneGraph::from_neighbor_rotations(rotations, storient::VertexPair{s, t});
  inst.s = s;
  inst.t = t;
  return inst;
}

}  // namespace

PgInstance triangle() { return make({{1, 2}, {2, 0}, {0, 1}}, 0, 2); }

PgInstance four_cycle() { return make({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, 0, 2); }

PgInstance k4() { return make({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, 0, 1); }

PgInstance single_edge() { return make({{1}, {0}}, 0, 1); }

PgInstance path3() { return make({{1}, {0, 2}, {1}}, 0, 2); }

PgInstance bowtie() { return make({{1, 2}, {2, 0}, {0, 1, 3, 4}, {4, 2}, {2, 3}}, 0, 4); }

std::vector<storient::GeneratedInstance> generated(int count, int n_min, int n_max, std::uint64_t seed) {
  static constexpr double kP[] = {0.2, 0.5, 0.8};
  storient::Rng rng(seed);
  std::vector<storient::GeneratedInstance> out;
  for (int i = 0; i < count; ++i) {
    const int n = n_min + rng.index(n_max - n_min + 1);
    const double p = kP[rng.index(3)];
    out.push_back(storient::generate({n, p, rng.next()}));
  }
  return out;
}

}  // namespace fixture
