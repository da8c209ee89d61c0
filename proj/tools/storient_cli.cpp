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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "storient/angle_labeling.hpp"
#include "storient/bench.hpp"
#include "storient/error.hpp"
#include "storient/gadgets.hpp"
#include "storient/graph_io.hpp"
#include "storient/ilp_model.hpp"
#include "storient/ilp_solver.hpp"
#include "storient/layout.hpp"
#include "storient/nto_decide.hpp"
#include "storient/plan_gen.hpp"
#include "storient/st_core.hpp"

namespace fs = std::filesystem;
using namespace storient;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBudget = 3;

// Raised for unreadable or unwritable files; maps to the data exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

void save(const std::string& path, const std::string& contents) {
  try {
    write_file_atomically(path, contents);
  } catch (const std::exception& e) {
    throw IoError("cannot write " + path + ": " + e.what());
  }
}

StOrientation load_ori(const std::string& path, const PgInstance& inst) {
  std::ifstream in = open_in(path);
  return read_ori(in, inst.graph, inst.s, inst.t);
}

std::string orientation_text(const StOrientation& o) {
  std::ostringstream out;
  write_ori(out, o);
  return out.str();
}

std::string edge_list(const Graph& g, const std::vector<EdgeId>& edges) {
  std::ostringstream out;
  for (EdgeId e : edges) out << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  return out.str();
}

struct SolveFlags {
  double time_limit = 60.0;
  long long node_limit = 0;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--time-limit", f.time_limit, "Solver time limit in seconds, 0 for none")->check(CLI::NonNegativeNumber);
  cmd->add_option("--node-limit", f.node_limit, "Solver node limit, 0 for none")->check(CLI::NonNegativeNumber);
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar st-orientations with few transitive edges"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // gen
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  int gen_count = 1;
  std::string gen_out;
  std::string gen_policy = to_string(EdgePolicy::kVertexTwoFaces);
  auto* gen = app.add_subcommand("gen", "Generate a random plane biconnected graph");
  gen->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::Range(3, 1 << 24));
  gen->add_option("--piv", gen_p, "Probability of Insert-Vertex")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Seed of the first instance");
  gen->add_option("--count", gen_count, "Batch size: seeds seed..seed+count-1")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output .pg file, or directory in batch mode")->required();
  gen->add_option("--policy", gen_policy, "Insert-Edge endpoint policy");

  // orient-heur
  std::string heur_in;
  std::string heur_out;
  auto* heur = app.add_subcommand("orient-heur", "st-orientation from an st-numbering");
  heur->add_option("graph", heur_in, "Input .pg")->required();
  heur->add_option("--out", heur_out, "Output .ori");

  // orient-opt
  std::string opt_in;
  std::string opt_out;
  std::string opt_lab;
  SolveFlags opt_flags;
  auto* opt = app.add_subcommand("orient-opt", "st-orientation with the fewest transitive edges");
  opt->add_option("graph", opt_in, "Input .pg")->required();
  opt->add_option("--out", opt_out, "Output .ori");
  opt->add_option("--lab", opt_lab, "Output .lab");
  add_solve_flags(opt, opt_flags);

  // transitive
  std::string tr_in;
  std::string tr_ori;
  auto* tr = app.add_subcommand("transitive", "List transitive edges of an orientation");
  tr->add_option("graph", tr_in, "Input .pg")->required();
  tr->add_option("orientation", tr_ori, "Input .ori")->required();

  // label
  std::string lab_in;
  std::string lab_ori;
  std::string lab_out;
  auto* lab = app.add_subcommand("label", "Angle labeling of an orientation");
  lab->add_option("graph", lab_in, "Input .pg")->required();
  lab->add_option("orientation", lab_ori, "Input .ori")->required();
  lab->add_option("--out", lab_out, "Output .lab");

  // draw
  std::string draw_in;
  std::string draw_ori;
  std::string draw_out;
  std::string draw_json;
  bool draw_opt = false;
  bool draw_highlight = false;
  bool draw_labels = false;
  int draw_scale = 20;
  SolveFlags draw_flags;
  auto* draw = app.add_subcommand("draw", "Polyline drawing through a visibility representation");
  draw->add_option("graph", draw_in, "Input .pg")->required();
  draw->add_option("--ori", draw_ori, "Orientation to draw; default is the heuristic one");
  draw->add_flag("--opt", draw_opt, "Draw the optimal orientation");
  draw->add_option("--out", draw_out, "Output .svg");
  draw->add_option("--json", draw_json, "Output coordinates as JSON");
  draw->add_option("--scale", draw_scale, "Pixels per grid unit")->check(CLI::PositiveNumber);
  draw->add_flag("--highlight-transitive", draw_highlight, "Draw transitive edges in red");
  draw->add_flag("--labels", draw_labels, "Print vertex ids");
  add_solve_flags(draw, draw_flags);

  // export-lp
  std::string lp_in;
  std::string lp_out;
  auto* lp = app.add_subcommand("export-lp", "Write the ILP model in CPLEX LP format");
  lp->add_option("graph", lp_in, "Input .pg")->required();
  lp->add_option("--out", lp_out, "Output .lp; default stdout");

  // reduce
  std::string red_in;
  std::string red_out;
  bool red_decide = false;
  long long red_nodes = 0;
  auto* red = app.add_subcommand("reduce", "Build the non-transitive orientation instance of a NAE3SAT formula");
  red->add_option("--in", red_in, "Input formula")->required();
  red->add_option("--out", red_out, "Output graph in adjacency form");
  red->add_flag("--decide", red_decide, "Search for a non-transitive st-orientation");
  red->add_option("--node-limit", red_nodes, "Node limit for --decide, 0 for none")->check(CLI::NonNegativeNumber);

  // bench
  bool bench_quick = false;
  bool bench_full = false;
  bool bench_no_timing = false;
  std::string bench_n;
  std::string bench_p;
  int bench_seeds = 10;
  std::uint64_t bench_seed_base = 1;
  int bench_workers = 0;
  double bench_sweep_limit = 0.0;
  std::string bench_out = "bench.csv";
  std::string bench_svg_dir;
  SolveFlags bench_flags;
  bench_flags.time_limit = 0.0;
  bench_flags.node_limit = 2000;
  auto* bench = app.add_subcommand("bench", "Run the HeurST versus OptST sweep");
  auto* quick_flag = bench->add_flag("--quick", bench_quick, "Small grid with n <= 60");
  bench->add_flag("--full", bench_full, "Full grid up to n = 1000")->excludes(quick_flag);
  bench->add_option("--n", bench_n, "Comma-separated vertex counts");
  bench->add_option("--piv", bench_p, "Comma-separated Insert-Vertex probabilities");
  bench->add_option("--seeds", bench_seeds, "Instances per cell")->check(CLI::PositiveNumber);
  bench->add_option("--seed-base", bench_seed_base, "Base of the per-instance seed streams");
  bench->add_option("--workers", bench_workers, "Worker threads; default from STORIENT_BENCH_WORKERS");
  bench->add_option("--sweep-time-limit", bench_sweep_limit, "Skip instances not started by then (s)");
  bench->add_flag("--no-timing", bench_no_timing, "Write NA in the timing column");
  bench->add_option("--out", bench_out, "Output CSV");
  bench->add_option("--svg-dir", bench_svg_dir, "Also write both drawings of every instance here");
  add_solve_flags(bench, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const EdgePolicy policy = edge_policy_from_string(gen_policy);
      if (gen_count == 1) {
        const GeneratedInstance inst = generate({gen_n, gen_p, gen_seed, policy});
        std::ostringstream out;
        write_pg(out, inst.graph, inst.s, inst.t);
        save(gen_out, out.str());
        std::cout << "vertices " << inst.graph.vertex_count() << "\nedges " << inst.graph.edge_count()
                  << "\ndensity " << density(inst.graph).to_double() << '\n';
      } else {
        fs::create_directories(gen_out);
        std::ostringstream manifest;
        manifest << "file,n,p_iv,seed,edges,density,s,t\n";
        for (int i = 0; i < gen_count; ++i) {
          const std::uint64_t seed = gen_seed + static_cast<std::uint64_t>(i);
          const GeneratedInstance inst = generate({gen_n, gen_p, seed, policy});
          const std::string name = "n" + std::to_string(gen_n) + "_s" + std::to_string(seed) + ".pg";
          std::ostringstream out;
          write_pg(out, inst.graph, inst.s, inst.t);
          save((fs::path(gen_out) / name).string(), out.str());
          manifest << name << ',' << gen_n << ',' << gen_p << ',' << seed << ',' << inst.graph.edge_count() << ','
                   << density(inst.graph).to_double() << ',' << inst.s << ',' << inst.t << '\n';
        }
        save((fs::path(gen_out) / "manifest.csv").string(), manifest.str());
        std::cout << "wrote " << gen_count << " instances to " << gen_out << '\n';
      }
    } else if (*heur) {
      const PgInstance inst = read_pg_file(heur_in);
      const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
      if (!heur_out.empty()) save(heur_out, orientation_text(o));
      std::cout << "transitive " << transitive_edges_faces(inst.graph, o).size() << '\n';
    } else if (*opt) {
      const PgInstance inst = read_pg_file(opt_in);
      const Solution sol = solve_min_transitive(inst.graph, inst.s, inst.t,
                                                {opt_flags.time_limit, opt_flags.node_limit});
      const StOrientation o = orientation_from_labels(inst.graph, sol.labeling);
      if (!opt_out.empty()) save(opt_out, orientation_text(o));
      if (!opt_lab.empty()) {
        std::ostringstream out;
        write_lab(out, inst.graph, sol.labeling);
        save(opt_lab, out.str());
      }
      std::cout << "objective " << sol.objective_value << "\nlower_bound " << sol.lower_bound << "\nproven "
                << (sol.proven_optimal ? "yes" : "no") << "\nheuristic " << sol.stats.heuristic_objective
                << "\nnodes " << sol.stats.nodes << '\n';
      if (!sol.proven_optimal) exit_code = kExitBudget;
    } else if (*tr) {
      const PgInstance inst = read_pg_file(tr_in);
      const StOrientation o = load_ori(tr_ori, inst);
      const std::vector<EdgeId> edges = transitive_edges_faces(inst.graph, o);
      std::cout << "transitive " << edges.size() << '\n' << edge_list(inst.graph, edges);
    } else if (*lab) {
      const PgInstance inst = read_pg_file(lab_in);
      const StOrientation o = load_ori(lab_ori, inst);
      const StLabeling labels = labels_from_orientation(inst.graph, o);
      std::ostringstream out;
      write_lab(out, inst.graph, labels);
      if (lab_out.empty()) {
        std::cout << out.str();
      } else {
        save(lab_out, out.str());
        std::cout << "valid " << (validate_labeling(inst.graph, labels).passed() ? "yes" : "no") << '\n';
      }
    } else if (*draw) {
      const PgInstance inst = read_pg_file(draw_in);
      StOrientation o;
      if (!draw_ori.empty()) {
        o = load_ori(draw_ori, inst);
      } else if (draw_opt) {
        const Solution sol = solve_min_transitive(inst.graph, inst.s, inst.t,
                                                  {draw_flags.time_limit, draw_flags.node_limit});
        o = orientation_from_labels(inst.graph, sol.labeling);
      } else {
        o = heuristic_orientation(inst.graph, inst.s, inst.t);
      }
      const Drawing d = polyline_drawing(inst.graph, o, visibility_representation(inst.graph, o, inst.s, inst.t));
      SvgOptions options;
      options.scale = draw_scale;
      options.vertex_labels = draw_labels;
      if (draw_highlight) options.highlight = transitive_edges_faces(inst.graph, o);
      if (!draw_out.empty()) save(draw_out, render_svg(d, options));
      if (!draw_json.empty()) save(draw_json, drawing_to_json(d) + "\n");
      std::cout << "width " << d.width << "\nheight " << d.height << "\narea " << bounding_area(d) << "\nbends "
                << bend_count(d) << '\n';
    } else if (*lp) {
      const PgInstance inst = read_pg_file(lp_in);
      const std::string text = export_lp(build_model(inst.graph, inst.s, inst.t));
      if (lp_out.empty()) {
        std::cout << text;
      } else {
        save(lp_out, text);
      }
    } else if (*red) {
      std::ifstream in = open_in(red_in);
      const Nae3SatFormula formula = read_nae3sat(in);
      const NtoInstance inst = reduce_nae3sat(formula);
      if (!red_out.empty()) {
        std::ostringstream out;
        write_adjacency(out, inst.graph, inst.s, inst.t);
        save(red_out, out.str());
      }
      std::cout << "vertices " << inst.graph.vertex_count() << "\nedges " << inst.graph.edge_count()
                << "\nclause_vertices " << inst.clause_vertices.size() << '\n';
      if (red_decide) {
        const NtoResult r = nto_decide(inst.graph, inst.s, inst.t, {red_nodes, 0.0});
        std::cout << "decision " << to_string(r.status) << "\nnodes " << r.nodes << '\n';
        if (r.status == NtoStatus::kSat) {
          for (std::size_t i = 0; i < inst.variables.size(); ++i) {
            const bool value = r.witness->arcs[inst.variables[i].x].tail == inst.variables[i].x_port;
            std::cout << "x" << i + 1 << ' ' << (value ? "true" : "false") << '\n';
          }
        }
        if (r.status == NtoStatus::kBudgetExhausted) exit_code = kExitBudget;
      }
    } else if (*bench) {
      BenchConfig config;
      if (bench_quick) {
        config.n_list = {20, 40, 60};
      } else if (bench_full) {
        config.n_list = {100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
      } else {
        config.n_list = {100, 200, 300};
      }
      config.p_list = bench_full ? std::vector<double>{0.2, 0.4, 0.5, 0.6, 0.8} : std::vector<double>{0.2, 0.5, 0.8};
      if (!bench_n.empty()) config.n_list = parse_ints(bench_n);
      if (!bench_p.empty()) config.p_list = parse_doubles(bench_p);
      config.seeds = bench_seeds;
      config.seed_base = bench_seed_base;
      config.workers = bench_workers;
      config.sweep_time_limit_s = bench_sweep_limit;
      config.budget = {bench_flags.time_limit, bench_flags.node_limit};
      const BenchRun run = run_benchmark(config);
      write_bench_csv(bench_out, run.records, !bench_no_timing);
      if (!bench_svg_dir.empty()) {
        fs::create_directories(bench_svg_dir);
        for (const BenchRecord& r : run.records) {
          if (r.status != "ok") continue;
          const GeneratedInstance inst = generate({r.n, r.p_iv, r.seed, config.policy});
          const Solution sol = solve_min_transitive(inst.graph, inst.s, inst.t, config.budget);
          const StOrientation h = heuristic_orientation(inst.graph, inst.s, inst.t);
          const StOrientation o = orientation_from_labels(inst.graph, sol.labeling);
          for (const auto& [tag, ori] : {std::pair{"heur", &h}, std::pair{"opt", &o}}) {
            SvgOptions options;
            options.scale = 8;
            options.highlight = transitive_edges_faces(inst.graph, *ori);
            const Drawing d =
                polyline_drawing(inst.graph, *ori, visibility_representation(inst.graph, *ori, inst.s, inst.t));
            save((fs::path(bench_svg_dir) / (r.instance_id + "_" + tag + ".svg")).string(), render_svg(d, options));
          }
        }
      }
      const BenchSummary s = summarize(run.records);
      std::printf("records %d\nok %d\nproven %d\nmean_improvement_pct %.2f\narea better %d equal %d worse %d\n",
                  s.records, s.ok, s.proven, s.mean_improvement_pct, s.better, s.equal, s.worse);
      if (!run.complete) exit_code = kExitBudget;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number in list\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return exit_code;
}
