// Copyright 2026 The robsched authors
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

// Command-line front end: generate instances, solve them with any of the
// implemented methods, evaluate fixed orderings, query the brute-force
// oracles, and drive batch experiments.
//
// Exit codes: 0 success, 2 time limit reached with an incumbent,
// 3 infeasible, 4 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robsched/robsched.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTimeLimit = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitError = 4;

int exit_code_for(robsched::SolveStatus status) {
  switch (status) {
    case robsched::SolveStatus::optimal: return kExitOk;
    case robsched::SolveStatus::time_limit: return kExitTimeLimit;
    case robsched::SolveStatus::infeasible: return kExitInfeasible;
    case robsched::SolveStatus::error: return kExitError;
  }
  return kExitError;
}

std::vector<int> one_based_perm_to_zero(const std::vector<int>& perm) {
  std::vector<int> zero;
  zero.reserve(perm.size());
  for (int p : perm) zero.push_back(p - 1);
  return zero;
}

nlohmann::json report_to_json(const robsched::SolveReport& report, const std::string& method) {
  nlohmann::json j;
  j["method"] = method;
  j["status"] = robsched::to_string(report.status);
  j["objective"] = report.objective;
  j["bound"] = report.bound;
  j["gap_rel"] = report.gap_rel;
  if (!std::isnan(report.root_bound)) j["root_bound"] = report.root_bound;
  j["wall_time_s"] = report.wall_time;
  if (report.ordering.size() > 0) {
    std::vector<int> perm;
    for (int a : report.ordering.perm()) perm.push_back(a + 1);
    j["ordering"] = perm;  // 1-based
  }
  if (report.schedule) j["start_times"] = report.schedule->start;
  if (report.best_iteration > 0) j["iter_best"] = report.best_iteration;
  if (report.iterations) {
    nlohmann::json iters = nlohmann::json::array();
    for (const auto& rec : *report.iterations) {
      iters.push_back({{"iteration", rec.iteration},
                       {"master_value", rec.master_value},
                       {"adversarial_value", rec.adversarial_value},
                       {"adversarial_optimal", rec.adversarial_optimal},
                       {"pool_size", rec.pool_size},
                       {"wall_time_s", rec.wall_time}});
    }
    j["iterations"] = std::move(iters);
  }
  return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw robsched::Error("cannot open '" + out_path + "' for writing");
    out << j.dump(2) << '\n';
  }
}

int resolve_gamma(const robsched::Instance& inst, std::optional<double> gamma,
                  std::optional<int> u_level, double* out) {
  if (gamma && u_level) {
    std::cerr << "error: give either --gamma or --u-level, not both\n";
    return kExitError;
  }
  if (u_level) {
    *out = robsched::gamma_from_level(inst.n, *u_level);
  } else if (gamma) {
    *out = *gamma;
  } else {
    std::cerr << "error: a budget is required (--gamma or --u-level)\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage robust single-machine scheduling under budgeted uncertainty"};
  app.require_subcommand(1);

  // generate ------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  int gen_n = 5;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  std::optional<int> gen_u;
  robsched::GenParams gen_params;
  gen_cmd->add_option("--n", gen_n, "Number of activities")->required();
  gen_cmd->add_option("--seed", gen_seed, "Generator seed")->required();
  gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");
  gen_cmd->add_option("--u-level", gen_u, "Record an uncertainty level (%) in the metadata");
  gen_cmd->add_option("--d-min", gen_params.d_range[0], "Minimum duration");
  gen_cmd->add_option("--d-max", gen_params.d_range[1], "Maximum duration");
  gen_cmd->add_option("--w-min", gen_params.w_range[0], "Minimum per-slot cost");
  gen_cmd->add_option("--w-max", gen_params.w_range[1], "Maximum per-slot cost");
  gen_cmd->add_option("--chat-min", gen_params.chat_range[0], "Minimum deviation");
  gen_cmd->add_option("--chat-max", gen_params.chat_range[1], "Maximum deviation");
  gen_cmd->add_option("--horizon-factor", gen_params.horizon_factor,
                      "T = ceil(factor * total duration)");

  // solve ---------------------------------------------------------------
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  std::string solve_in, solve_out, solve_method = "compact";
  std::optional<double> solve_gamma;
  std::optional<int> solve_u;
  double solve_tl = 7200.0, solve_gap = 1e-4;
  bool solve_warm = false;
  int solve_enrich = 0, solve_threads = 1, solve_seed = 0;
  solve_cmd->add_option("--in", solve_in, "Instance file")->required();
  solve_cmd
      ->add_option("--method", solve_method,
                   "nominal-lb|nominal-ub|compact|compact-str|iterative|iterative-str")
      ->required();
  solve_cmd->add_option("--gamma", solve_gamma, "Uncertainty budget");
  solve_cmd->add_option("--u-level", solve_u, "Uncertainty level in percent of n");
  solve_cmd->add_option("--time-limit", solve_tl, "Time limit in seconds");
  solve_cmd->add_option("--gap", solve_gap, "Relative optimality gap target");
  solve_cmd->add_flag("--warm-start", solve_warm, "Seed compact solves from the nominal optimum");
  solve_cmd->add_option("--enrich-k", solve_enrich, "Extra scenarios per iteration");
  solve_cmd->add_option("--threads", solve_threads, "Solver threads (default 1)");
  solve_cmd->add_option("--seed", solve_seed, "Solver random seed");
  solve_cmd->add_option("--out", solve_out, "Write the JSON report here instead of stdout");

  // evaluate ------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate a fixed ordering");
  std::string eval_in, eval_out;
  std::vector<int> eval_perm;
  std::optional<double> eval_gamma;
  std::optional<int> eval_u;
  double eval_tl = 7200.0;
  eval_cmd->add_option("--in", eval_in, "Instance file")->required();
  eval_cmd
      ->add_option("--perm", eval_perm,
                   "Ordering as 1-based activity ids, first to run first (e.g. --perm 2 1)")
      ->required()
      ->expected(-1);
  eval_cmd->add_option("--gamma", eval_gamma, "Uncertainty budget (integer)");
  eval_cmd->add_option("--u-level", eval_u, "Uncertainty level in percent of n");
  eval_cmd->add_option("--time-limit", eval_tl, "Time limit in seconds");
  eval_cmd->add_option("--out", eval_out, "Write the JSON result here instead of stdout");

  // oracle --------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force two-stage optimum (small n)");
  std::string oracle_in, oracle_kind = "continuous", oracle_out;
  std::optional<double> oracle_gamma;
  std::optional<int> oracle_u;
  long long oracle_max_sched = 1'000'000, oracle_max_scen = 1'000'000, oracle_max_ord = 5040;
  oracle_cmd->add_option("--in", oracle_in, "Instance file")->required();
  oracle_cmd->add_option("--kind", oracle_kind, "continuous|discrete");
  oracle_cmd->add_option("--gamma", oracle_gamma, "Uncertainty budget");
  oracle_cmd->add_option("--u-level", oracle_u, "Uncertainty level in percent of n");
  oracle_cmd->add_option("--max-schedules", oracle_max_sched, "Enumeration cap on schedules");
  oracle_cmd->add_option("--max-scenarios", oracle_max_scen, "Enumeration cap on 0/1 patterns");
  oracle_cmd->add_option("--max-orderings", oracle_max_ord, "Enumeration cap on permutations");
  oracle_cmd->add_option("--out", oracle_out, "Write the JSON result here instead of stdout");

  // bench ---------------------------------------------------------------
  auto* bench_cmd = app.add_subcommand("bench", "Batch experiments over generated instances");
  std::vector<int> bench_sizes, bench_u;
  std::vector<std::uint64_t> bench_seeds;
  std::vector<std::string> bench_methods;
  std::string bench_out, bench_summary;
  double bench_tl = 7200.0, bench_gap = 1e-4;
  bool bench_warm = false, bench_quiet = false, bench_no_eval = false;
  int bench_enrich = 0;
  robsched::GenParams bench_params;
  bench_cmd->add_option("--sizes", bench_sizes, "Activity counts")->required()->expected(-1);
  bench_cmd->add_option("--u-levels", bench_u, "Uncertainty levels in percent")
      ->required()
      ->expected(-1);
  bench_cmd->add_option("--seeds", bench_seeds, "Instance seeds")->required()->expected(-1);
  bench_cmd->add_option("--methods", bench_methods, "Methods to run")->required()->expected(-1);
  bench_cmd->add_option("--out", bench_out, "Result CSV path")->required();
  bench_cmd->add_option("--summary", bench_summary, "Also write per-configuration means here");
  bench_cmd->add_option("--time-limit", bench_tl, "Per-solve time limit in seconds");
  bench_cmd->add_option("--gap", bench_gap, "Relative optimality gap target");
  bench_cmd->add_flag("--warm-start", bench_warm, "Warm-start compact solves");
  bench_cmd->add_option("--enrich-k", bench_enrich, "Extra scenarios per iteration");
  bench_cmd->add_flag("--no-eval", bench_no_eval, "Skip the three-model evaluation per row");
  bench_cmd->add_flag("--quiet", bench_quiet, "Suppress per-row progress output");
  bench_cmd->add_option("--d-min", bench_params.d_range[0], "Minimum duration");
  bench_cmd->add_option("--d-max", bench_params.d_range[1], "Maximum duration");

  int threads_unused = 1;
  app.add_option("--threads", threads_unused, "Solver threads (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      robsched::Instance inst = robsched::generate(gen_n, gen_seed, gen_params);
      if (gen_u) inst.meta->u_level = *gen_u;
      if (gen_out.empty()) {
        robsched::save_instance(inst, std::cout);
      } else {
        robsched::save_instance(inst, gen_out);
        std::cerr << "wrote " << gen_out << " (n=" << inst.n << ", T=" << inst.horizon << ")\n";
      }
      return kExitOk;
    }

    if (*solve_cmd) {
      const robsched::Instance inst = robsched::load_instance(solve_in);
      auto violations = robsched::validate_instance(inst);
      if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "invalid instance: " << v << '\n';
        return kExitError;
      }
      const robsched::Method method = robsched::method_from_string(solve_method);
      double gamma = 0.0;
      if (method != robsched::Method::nominal_lb && method != robsched::Method::nominal_ub) {
        if (int rc = resolve_gamma(inst, solve_gamma, solve_u, &gamma); rc != kExitOk) return rc;
      }
      robsched::SolveReport report;
      switch (method) {
        case robsched::Method::nominal_lb:
        case robsched::Method::nominal_ub: {
          robsched::mip::SolveOptions opts;
          opts.time_limit = solve_tl;
          opts.rel_gap_target = solve_gap;
          opts.threads = solve_threads;
          opts.seed = solve_seed;
          opts.want_root_bound = true;
          report = robsched::solve_nominal(inst,
                                           method == robsched::Method::nominal_lb
                                               ? robsched::NominalMode::lower
                                               : robsched::NominalMode::upper,
                                           opts);
          break;
        }
        case robsched::Method::compact:
        case robsched::Method::compact_str: {
          robsched::CompactOptions opts;
          opts.strengthen = method == robsched::Method::compact_str;
          opts.warm_start = solve_warm;
          opts.time_limit = solve_tl;
          opts.rel_gap_target = solve_gap;
          opts.seed = solve_seed;
          report = robsched::solve_compact(inst, gamma, opts).report;
          break;
        }
        case robsched::Method::iterative:
        case robsched::Method::iterative_str: {
          if (gamma != std::floor(gamma)) {
            std::cerr << "error: the iterative method needs an integer budget\n";
            return kExitError;
          }
          robsched::IterativeOptions opts;
          opts.strengthen = method == robsched::Method::iterative_str;
          opts.enrich_k = solve_enrich;
          opts.time_limit = solve_tl;
          opts.seed = solve_seed;
          report = robsched::solve_iterative(inst, static_cast<int>(gamma), opts);
          break;
        }
      }
      emit(report_to_json(report, solve_method), solve_out);
      return exit_code_for(report.status);
    }

    if (*eval_cmd) {
      const robsched::Instance inst = robsched::load_instance(eval_in);
      double gamma = 0.0;
      if (int rc = resolve_gamma(inst, eval_gamma, eval_u, &gamma); rc != kExitOk) return rc;
      if (gamma != std::floor(gamma)) {
        std::cerr << "error: evaluation needs an integer budget\n";
        return kExitError;
      }
      const robsched::Ordering ord{one_based_perm_to_zero(eval_perm)};
      robsched::mip::SolveOptions opts;
      opts.time_limit = eval_tl;
      const robsched::EvaluationTriple eval =
          robsched::evaluate_ordering(inst, ord, static_cast<int>(gamma), opts);
      nlohmann::json j;
      j["ordering"] = eval_perm;
      j["gamma"] = gamma;
      j["lb_eval"] = eval.lb_eval;
      j["cont_bu_eval"] = eval.cont_bu_eval;
      j["disc_bu_eval"] = eval.disc_bu_eval;
      emit(j, eval_out);
      return kExitOk;
    }

    if (*oracle_cmd) {
      const robsched::Instance inst = robsched::load_instance(oracle_in);
      double gamma = 0.0;
      if (int rc = resolve_gamma(inst, oracle_gamma, oracle_u, &gamma); rc != kExitOk) return rc;
      robsched::BudgetKind kind;
      if (oracle_kind == "continuous") {
        kind = robsched::BudgetKind::continuous;
      } else if (oracle_kind == "discrete") {
        kind = robsched::BudgetKind::discrete;
      } else {
        std::cerr << "error: --kind must be continuous or discrete\n";
        return kExitError;
      }
      robsched::OracleLimits limits;
      limits.max_schedules = oracle_max_sched;
      limits.max_scenarios = oracle_max_scen;
      limits.max_orderings = oracle_max_ord;
      const robsched::TwoStageOracle result =
          robsched::oracle_two_stage(inst, gamma, kind, limits);
      nlohmann::json j;
      j["kind"] = oracle_kind;
      j["gamma"] = gamma;
      j["value"] = result.value;
      std::vector<int> perm;
      for (int a : result.ordering.perm()) perm.push_back(a + 1);
      j["ordering"] = perm;
      emit(j, oracle_out);
      return kExitOk;
    }

    if (*bench_cmd) {
      robsched::BenchConfig config;
      config.sizes = bench_sizes;
      config.u_levels = bench_u;
      config.seeds = bench_seeds;
      for (const auto& m : bench_methods) config.methods.push_back(robsched::method_from_string(m));
      config.gen = bench_params;
      config.time_limit = bench_tl;
      config.rel_gap_target = bench_gap;
      config.warm_start = bench_warm;
      config.enrich_k = bench_enrich;
      config.evaluate = !bench_no_eval;
      const auto rows = robsched::run_benchmark(config, bench_quiet ? nullptr : &std::cerr);
      std::ofstream out(bench_out);
      if (!out) throw robsched::Error("cannot open '" + bench_out + "' for writing");
      robsched::write_csv(rows, out);
      std::cerr << "wrote " << rows.size() << " rows to " << bench_out << '\n';
      if (!bench_summary.empty()) {
        std::ofstream sum(bench_summary);
        if (!sum) throw robsched::Error("cannot open '" + bench_summary + "' for writing");
        robsched::write_summary_csv(robsched::aggregate(rows), sum);
        std::cerr << "wrote summary to " << bench_summary << '\n';
      }
      return kExitOk;
    }
  } catch (const robsched::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
