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

#include "storient/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "storient/error.hpp"
#include "storient/graph_io.hpp"
#include "storient/layout.hpp"
#include "storient/random.hpp"
#include "storient/st_core.hpp"

namespace storient {

const char* to_string(AreaOutcome outcome) {
  switch (outcome) {
    case AreaOutcome::kBetter: return "better";
    case AreaOutcome::kEqual: return "equal";
    case AreaOutcome::kWorse: return "worse";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t permille(double p) { return static_cast<std::uint64_t>(std::llround(p * 1000.0)); }

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string cell_id(int n, double p, int index) {
  return "n" + std::to_string(n) + "_p" + fixed(p, 2) + "_i" + std::to_string(index);
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STORIENT_BENCH_WORKERS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed_base, int n, double p_iv, int index) {
  return derive_seed(seed_base, {static_cast<std::uint64_t>(n), permille(p_iv), static_cast<std::uint64_t>(index)});
}

BenchRecord run_instance(int n, double p_iv, std::uint64_t seed, const BenchConfig& config) {
  BenchRecord r;
  r.n = n;
  r.p_iv = p_iv;
  r.seed = seed;
  try {
    const GeneratedInstance inst = generate({n, p_iv, seed, config.policy});
    const PlaneGraph& g = inst.graph;
    r.density = density(g);
    const StOrientation heur = heuristic_orientation(g, inst.s, inst.t);
    r.tr_heur = static_cast<int>(transitive_edges_faces(g, heur).size());

    const Solution sol = solve_min_transitive(g, inst.s, inst.t, config.budget);
    r.tr_opt = sol.objective_value;
    r.solve_ms = sol.stats.runtime_s * 1000.0;
    r.nodes = sol.stats.nodes;
    r.proven = sol.proven_optimal;
    r.verified = verify_solution(g, inst.s, inst.t, sol);
    r.improvement_pct = improvement_percent(r.tr_heur, r.tr_opt);
    const StOrientation opt = orientation_from_labels(g, sol.labeling);

    const Drawing dh = polyline_drawing(g, heur, visibility_representation(g, heur, inst.s, inst.t));
    const Drawing dopt = polyline_drawing(g, opt, visibility_representation(g, opt, inst.s, inst.t));
    r.area_heur = bounding_area(dh);
    r.area_opt = bounding_area(dopt);
    r.area_better = r.area_opt < r.area_heur    ? AreaOutcome::kBetter
                    : r.area_opt == r.area_heur ? AreaOutcome::kEqual
                                                : AreaOutcome::kWorse;
    r.crossing_free = find_crossings(g, dh).empty() && find_crossings(g, dopt).empty();
  } catch (const std::exception& e) {
    r.status = std::string("error: ") + e.what();
  }
  return r;
}

BenchRun run_benchmark(const BenchConfig& config) {
  if (config.n_list.empty() || config.p_list.empty() || config.seeds < 1) {
    throw Error(ErrorCode::kInvalidInput, "benchmark grid is empty");
  }
  for (int n : config.n_list) {
    if (n < 3) throw Error(ErrorCode::kInvalidInput, "n must be at least 3");
  }
  for (double p : config.p_list) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidInput, "p_iv must lie in [0, 1]");
  }

  BenchRun run;
  for (int n : config.n_list) {
    for (double p : config.p_list) {
      for (int i = 0; i < config.seeds; ++i) {
        BenchRecord r;
        r.instance_id = cell_id(n, p, i);
        r.n = n;
        r.p_iv = p;
        r.seed = instance_seed(config.seed_base, n, p, i);
        r.status = "skipped";
        run.records.push_back(std::move(r));
      }
    }
  }

  const auto start = Clock::now();
  std::atomic<std::size_t> next{0};
  std::atomic<bool> late{false};
  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= run.records.size()) return;
      if (config.sweep_time_limit_s > 0 &&
          std::chrono::duration<double>(Clock::now() - start).count() >= config.sweep_time_limit_s) {
        late = true;
        continue;
      }
      BenchRecord& slot = run.records[k];
      BenchRecord r = run_instance(slot.n, slot.p_iv, slot.seed, config);
      r.instance_id = slot.instance_id;
      slot = std::move(r);
    }
  };
  const int workers = worker_count(config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  run.complete = !late;
  return run;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool timing) {
  std::ostringstream out;
  out << "# " << kBenchSchema << '\n';
  out << "instance_id,n,p_iv,seed,density,tr_heur,tr_opt,improvement_pct,area_heur,area_opt,area_better,"
         "solve_ms,nodes,proven,verified,crossing_free,status\n";
  for (const BenchRecord& r : records) {
    std::string status = r.status;
    for (char& c : status) {
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    }
    out << r.instance_id << ',' << r.n << ',' << fixed(r.p_iv, 2) << ',' << r.seed << ','
        << fixed(r.density.to_double(), 4) << ',' << r.tr_heur << ',' << r.tr_opt << ','
        << fixed(r.improvement_pct.to_double(), 2) << ',' << r.area_heur << ',' << r.area_opt << ','
        << to_string(r.area_better) << ',' << (timing ? fixed(r.solve_ms, 1) : std::string("NA")) << ','
        << r.nodes << ',' << int{r.proven} << ',' << int{r.verified} << ',' << int{r.crossing_free} << ','
        << status << '\n';
  }
  return out.str();
}

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records, bool timing) {
  write_file_atomically(path, bench_csv(records, timing));
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  BenchSummary s;
  s.records = static_cast<int>(records.size());
  double total = 0.0;
  for (const BenchRecord& r : records) {
    if (r.status != "ok") continue;
    ++s.ok;
    total += r.improvement_pct.to_double();
    s.better += r.area_better == AreaOutcome::kBetter;
    s.equal += r.area_better == AreaOutcome::kEqual;
    s.worse += r.area_better == AreaOutcome::kWorse;
    s.proven += r.proven;
    s.violations += r.tr_opt > r.tr_heur || !r.verified || !r.crossing_free;
  }
  if (s.ok > 0) s.mean_improvement_pct = total / s.ok;
  return s;
}

}  // namespace storient
