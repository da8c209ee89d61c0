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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "storient/ilp_solver.hpp"
#include "storient/plan_gen.hpp"
#include "storient/rational.hpp"

namespace storient {

inline constexpr const char* kBenchSchema = "storient-bench/1";

enum class AreaOutcome { kBetter, kEqual, kWorse };

const char* to_string(AreaOutcome outcome);

// One generated instance through HeurST, OptST and both drawings. status is
// "ok", "skipped" when the sweep deadline passed first, or "error: ...".
struct BenchRecord {
  std::string instance_id;
  int n = 0;
  double p_iv = 0.0;
  std::uint64_t seed = 0;
  Rational density;
  int tr_heur = 0;
  int tr_opt = 0;
  Rational improvement_pct;
  long long area_heur = 0;
  long long area_opt = 0;
  AreaOutcome area_better = AreaOutcome::kEqual;
  double solve_ms = 0.0;
  std::int64_t nodes = 0;
  bool proven = false;
  bool verified = false;
  bool crossing_free = false;
  std::string status = "ok";
};

struct BenchConfig {
  std::vector<int> n_list;
  std::vector<double> p_list;
  int seeds = 10;
  std::uint64_t seed_base = 1;
  SolveBudget budget;
  EdgePolicy policy = EdgePolicy::kVertexTwoFaces;
  // 0 reads STORIENT_BENCH_WORKERS, falling back to 1.
  int workers = 0;
  // Instances not started by then are recorded as skipped. 0 is no deadline.
  double sweep_time_limit_s = 0.0;
};

// Stream seed of the i-th instance of a grid cell.
std::uint64_t instance_seed(std::uint64_t seed_base, int n, double p_iv, int index);

BenchRecord run_instance(int n, double p_iv, std::uint64_t seed, const BenchConfig& config);

struct BenchRun {
  std::vector<BenchRecord> records;  // (n, p_iv, seed index) order
  bool complete = true;
};

// Never throws for per-instance failures. Throws kInvalidInput on an empty
// grid or a bad cell.
BenchRun run_benchmark(const BenchConfig& config);

// Header comment with the schema tag, then a column row. With timing off the
// solve_ms column holds "NA" so replays compare byte for byte.
std::string bench_csv(const std::vector<BenchRecord>& records, bool timing = true);
void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records, bool timing = true);

struct BenchSummary {
  int records = 0;
  int ok = 0;
  double mean_improvement_pct = 0.0;
  int better = 0;
  int equal = 0;
  int worse = 0;
  int proven = 0;
  int violations = 0;  // tr_opt > tr_heur, unverified, or crossing
};

BenchSummary summarize(const std::vector<BenchRecord>& records);

}  // namespace storient
