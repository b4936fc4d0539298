// Copyright 2026 The l2plan Authors
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

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "l2plan/io.hpp"
#include "l2plan/linf.hpp"
#include "l2plan/planner.hpp"
#include "l2plan/rendezvous.hpp"
#include "l2plan/simulate.hpp"
#include "l2plan/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitValidation = 4;

using l2plan::Query;
using l2plan::QueryRecord;
using l2plan::Vec2;
using nlohmann::json;

Vec2 parse_vec2(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("expected \"x,y\", got: " + s);
  }
  size_t done1 = 0, done2 = 0;
  const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
  const double x = std::stod(xs, &done1);
  const double y = std::stod(ys, &done2);
  if (done1 != xs.size() || done2 != ys.size()) {
    throw std::invalid_argument("expected \"x,y\", got: " + s);
  }
  return Vec2(x, y);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

int exit_code_for(const l2plan::SolverError& e) {
  (void)e;
  return kExitNoConvergence;
}

struct PlanArgs {
  std::string query_file, verify_file;
  std::string p0 = "0,0", v0 = "0,0", goal = "1,0", vg;
  bool stop = false, free_goal = false;
  double a_m = 1.0, v_m = 1.0;
  std::string out, csv, svg;
  double dt = 0.0;
  double e_min = 1e-12;
};

int run_plan_record(const QueryRecord& rec, const PlanArgs& args) {
  l2plan::SolverConfig cfg;
  cfg.e_min = args.e_min;
  l2plan::Plan plan;
  try {
    plan = l2plan::plan_query(rec.query, cfg);
  } catch (const l2plan::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  const l2plan::ValidationReport report = l2plan::validate(plan, rec.query, 1e-9);
  write_output(args.out, l2plan::plan_to_json(rec, plan, report).dump(2) + "\n");
  if (!args.csv.empty()) {
    const auto samples = l2plan::sample_trajectory(rec.query, plan, args.dt);
    write_output(args.csv, l2plan::trajectory_csv(samples));
  }
  if (!args.svg.empty()) {
    const auto samples = l2plan::sample_trajectory(rec.query, plan, args.dt);
    write_output(args.svg, l2plan::trajectory_svg(rec.query, plan, samples));
  }
  return report.pass ? kExitOk : kExitValidation;
}

int cmd_plan(const PlanArgs& args) {
  if (!args.verify_file.empty()) {
    const l2plan::PlanRecord rec =
        l2plan::plan_record_from_json(json::parse(read_file(args.verify_file)));
    const l2plan::State end =
        l2plan::simulate(rec.query.query.start, rec.plan, rec.query.query.limits.a_max);
    const double scale =
        std::max(1.0, (rec.query.query.goal_position - rec.query.query.start.position).norm());
    const double pos_err = (end.position - rec.terminal.position).norm();
    const double vel_err = (end.velocity - rec.terminal.velocity).norm();
    const bool ok = pos_err <= 1e-9 * scale && vel_err <= 1e-9 * rec.query.query.limits.v_max;
    std::cout << (ok ? "verify: ok" : "verify: MISMATCH") << " (position "
              << l2plan::format_double(pos_err) << ", velocity "
              << l2plan::format_double(vel_err) << ")\n";
    return ok ? kExitOk : kExitValidation;
  }

  QueryRecord rec;
  if (!args.query_file.empty()) {
    const auto records = l2plan::parse_query_file(read_file(args.query_file));
    if (records.size() != 1) {
      throw std::invalid_argument("plan expects exactly one query; use batch for files");
    }
    rec = records.front();
  } else {
    rec.query.start.position = parse_vec2(args.p0);
    rec.query.start.velocity = parse_vec2(args.v0);
    rec.query.goal_position = parse_vec2(args.goal);
    const int modes = int(!args.vg.empty()) + int(args.stop) + int(args.free_goal);
    if (modes != 1) {
      throw std::invalid_argument("select exactly one of --vg, --stop, --free");
    }
    if (args.stop) {
      rec.query.goal_velocity = l2plan::GoalVelocity::zero();
    } else if (args.free_goal) {
      rec.query.goal_velocity = l2plan::GoalVelocity::free();
    } else {
      rec.query.goal_velocity = l2plan::GoalVelocity::fixed(parse_vec2(args.vg));
    }
    rec.query.limits.a_max = args.a_m;
    rec.query.limits.v_max = args.v_m;
  }
  return run_plan_record(rec, args);
}

int cmd_batch(const std::string& in_path, const std::string& out_path, double e_min) {
  const auto records = l2plan::parse_query_file(read_file(in_path));
  l2plan::SolverConfig cfg;
  cfg.e_min = e_min;
  json out = json::array();
  bool any_solver_error = false, any_validation_fail = false;
  for (const QueryRecord& rec : records) {
    try {
      const l2plan::Plan plan = l2plan::plan_query(rec.query, cfg);
      const auto report = l2plan::validate(plan, rec.query, 1e-9);
      out.push_back(l2plan::plan_to_json(rec, plan, report));
      if (!report.pass) any_validation_fail = true;
    } catch (const l2plan::SolverError& e) {
      json rec_out;
      if (!rec.id.empty()) rec_out["id"] = rec.id;
      rec_out["query"] = l2plan::query_to_json(rec.query);
      rec_out["error"] = e.what();
      out.push_back(rec_out);
      any_solver_error = true;
    }
  }
  write_output(out_path, out.dump(2) + "\n");
  if (any_solver_error) return kExitNoConvergence;
  if (any_validation_fail) return kExitValidation;
  return kExitOk;
}

struct BenchmarkArgs {
  uint64_t seed = 1;
  int n = 10000;
  double radius_p = 2.0;
  double radius_v = 1.0;
  double e_min = 1e-12;
  std::string out;
};

Vec2 sample_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double r = radius * std::sqrt(uni(rng));
  const double ang = 2.0 * M_PI * uni(rng);
  return r * Vec2(std::cos(ang), std::sin(ang));
}

int cmd_benchmark(const BenchmarkArgs& args) {
  l2plan::SolverConfig cfg;
  cfg.e_min = args.e_min;
  std::map<int, int> histogram;
  int accepted = 0, no_convergence = 0, validation_failures = 0;
  uint64_t candidates = 0;
  double total_samples = 0.0;
  int max_samples = 0;

  const auto t_start = std::chrono::steady_clock::now();
  while (accepted < args.n) {
    // One deterministic stream per candidate index.
    std::mt19937_64 rng(args.seed ^ (0x9e3779b97f4a7c15ull * (candidates + 1)));
    ++candidates;
    Query q;
    q.start.position = sample_disk(rng, args.radius_p);
    q.goal_position = sample_disk(rng, args.radius_p);
    q.start.velocity = sample_disk(rng, args.radius_v);
    q.goal_velocity = l2plan::GoalVelocity::fixed(sample_disk(rng, args.radius_v));
    q.limits = {1.0, 1.0};
    try {
      const l2plan::RendezvousResult res = l2plan::rendezvous_solve(q, cfg);
      if (!res.used_cruise) continue;  // only cruise-requiring queries count
      ++accepted;
      histogram[res.vdc_samples] += 1;
      total_samples += res.vdc_samples;
      max_samples = std::max(max_samples, res.vdc_samples);
      if (!l2plan::validate(res.plan, q, cfg.e_min * 10.0).pass) ++validation_failures;
    } catch (const l2plan::SolverError&) {
      ++accepted;
      ++no_convergence;
    }
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    t_start)
                          .count();

  auto cumulative = [&](int k) {
    int c = 0;
    for (const auto& [s, n] : histogram) {
      if (s <= k) c += n;
    }
    return c;
  };
  json j;
  j["seed"] = args.seed;
  j["n"] = args.n;
  j["radius_p"] = args.radius_p;
  j["radius_v"] = args.radius_v;
  j["e_min"] = args.e_min;
  j["candidates_tested"] = candidates;
  j["converged_within_1"] = cumulative(1);
  j["converged_within_2"] = cumulative(2);
  j["converged_within_5"] = cumulative(5);
  j["mean_samples"] = accepted > no_convergence
                          ? total_samples / (accepted - no_convergence)
                          : 0.0;
  j["max_samples"] = max_samples;
  j["no_convergence"] = no_convergence;
  j["validation_failures"] = validation_failures;
  json hist = json::array();
  for (const auto& [s, n] : histogram) hist.push_back(json::array({s, n}));
  j["samples_histogram"] = hist;
  j["wall_time_s"] = wall;
  write_output(args.out, j.dump(2) + "\n");
  return kExitOk;
}

struct CompareArgs {
  std::string p0 = "1,1", pG = "-1,-1";
  double v0_mag = 0.5;
  int steps = 360;
  double a_m = 1.0, v_m = 1.0;
  double box_a = 0.0, box_v = 0.0;  // 0: derive from a_m, v_m
  std::string out;
};

int cmd_compare(const CompareArgs& args) {
  const Vec2 p0 = parse_vec2(args.p0);
  const Vec2 pG = parse_vec2(args.pG);
  const double box_a = args.box_a > 0.0 ? args.box_a : args.a_m / std::sqrt(2.0);
  const double box_v = args.box_v > 0.0 ? args.box_v : args.v_m / std::sqrt(2.0);
  l2plan::SolverConfig cfg;

  std::string csv = "v0_angle_rad,T_l2,T_linf,pathlen_l2,pathlen_linf,note\r\n";
  for (int k = 0; k < args.steps; ++k) {
    const double ang = 2.0 * M_PI * k / args.steps;
    Query q;
    q.start.position = p0;
    q.start.velocity = args.v0_mag * Vec2(std::cos(ang), std::sin(ang));
    q.goal_position = pG;
    q.goal_velocity = l2plan::GoalVelocity::zero();
    q.limits = {args.a_m, args.v_m};
    std::string note;
    double t_l2 = NAN, t_linf = NAN, len_l2 = NAN, len_linf = NAN;
    try {
      const l2plan::Plan plan = l2plan::plan_query(q, cfg);
      t_l2 = plan.total_time;
      len_l2 = l2plan::plan_arc_length(q.start, plan, q.limits.a_max);
    } catch (const std::exception& e) {
      note = std::string("l2: ") + e.what();
    }
    try {
      const l2plan::SyncedProfile sp = l2plan::solve_linf(q, box_a, box_v);
      t_linf = sp.t_sync;
      len_linf = l2plan::linf_path_length(q, sp, box_a);
    } catch (const std::exception& e) {
      if (!note.empty()) note += "; ";
      note += std::string("linf: ") + e.what();
    }
    csv += l2plan::format_double(ang);
    for (double v : {t_l2, t_linf, len_l2, len_linf}) {
      csv += ',';
      csv += l2plan::format_double(v);
    }
    csv += ',';
    csv += note;
    csv += "\r\n";
  }
  write_output(args.out, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-time planar trajectories under L2 acceleration and velocity bounds"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  CLI::App* plan = app.add_subcommand("plan", "solve a single query");
  plan->add_option("--query", plan_args.query_file, "query JSON file");
  plan->add_option("--verify", plan_args.verify_file, "re-simulate a stored plan record");
  plan->add_option("--p0", plan_args.p0, "start position x,y");
  plan->add_option("--v0", plan_args.v0, "start velocity x,y");
  plan->add_option("--goal,--pG", plan_args.goal, "goal position x,y");
  plan->add_option("--vg", plan_args.vg, "goal velocity x,y");
  plan->add_flag("--stop", plan_args.stop, "stop at the goal");
  plan->add_flag("--free", plan_args.free_goal, "unconstrained goal velocity");
  plan->add_option("--am", plan_args.a_m, "acceleration bound");
  plan->add_option("--vm", plan_args.v_m, "velocity bound");
  plan->add_option("--out", plan_args.out, "plan JSON output ('-' for stdout)");
  plan->add_option("--csv", plan_args.csv, "trajectory CSV output");
  plan->add_option("--svg", plan_args.svg, "profile SVG output");
  plan->add_option("--dt", plan_args.dt, "sample step for CSV/SVG (default T/1000)");
  plan->add_option("--e-min", plan_args.e_min, "numeric solver residual bound");

  std::string batch_in, batch_out;
  double batch_e_min = 1e-12;
  CLI::App* batch = app.add_subcommand("batch", "solve a file of queries");
  batch->add_option("--in", batch_in, "query JSON file")->required();
  batch->add_option("--out", batch_out, "plan records output ('-' for stdout)");
  batch->add_option("--e-min", batch_e_min, "numeric solver residual bound");

  BenchmarkArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "benchmark", "convergence statistics of the cruise direction search");
  bench->add_option("--seed", bench_args.seed, "RNG seed");
  bench->add_option("--n", bench_args.n, "number of cruise-requiring queries")
      ->check(CLI::PositiveNumber);
  bench->add_option("--radius-p", bench_args.radius_p, "position sampling radius");
  bench->add_option("--radius-v", bench_args.radius_v, "velocity sampling radius");
  bench->add_option("--e-min", bench_args.e_min, "accepted terminal residual");
  bench->add_option("--out", bench_args.out, "stats JSON output ('-' for stdout)");

  CompareArgs cmp_args;
  CLI::App* cmp = app.add_subcommand("compare", "sweep start-velocity directions and "
                                                "compare L2 against box-bound times");
  cmp->add_option("--p0", cmp_args.p0, "start position x,y");
  cmp->add_option("--pG", cmp_args.pG, "goal position x,y");
  cmp->add_option("--v0-mag", cmp_args.v0_mag, "start speed");
  cmp->add_option("--steps", cmp_args.steps, "angular grid size")->check(CLI::PositiveNumber);
  cmp->add_option("--am", cmp_args.a_m, "L2 acceleration bound");
  cmp->add_option("--vm", cmp_args.v_m, "L2 velocity bound");
  cmp->add_option("--box-a", cmp_args.box_a, "box acceleration bound (default a_m/sqrt2)");
  cmp->add_option("--box-v", cmp_args.box_v, "box velocity bound (default v_m/sqrt2)");
  cmp->add_option("--out", cmp_args.out, "CSV output ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (plan->parsed()) return cmd_plan(plan_args);
    if (batch->parsed()) return cmd_batch(batch_in, batch_out, batch_e_min);
    if (bench->parsed()) return cmd_benchmark(bench_args);
    if (cmp->parsed()) return cmd_compare(cmp_args);
  } catch (const l2plan::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
