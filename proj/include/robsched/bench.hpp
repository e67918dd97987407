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

#pragma once

#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "robsched/compact.hpp"
#include "robsched/errors.hpp"
#include "robsched/evaluate.hpp"
#include "robsched/instgen.hpp"
#include "robsched/iterative.hpp"
#include "robsched/nominal.hpp"
#include "robsched/report.hpp"

// Batch experiment driver. Each (size, u-level, seed, method) cell generates
// the instance, runs the method, evaluates the incumbent ordering under the
// nominal and both adversarial models, and appends one CSV row. Failures are
// recorded per row; the run continues.

namespace robsched {

enum class Method {
  nominal_lb,
  nominal_ub,
  compact,
  compact_str,
  iterative,
  iterative_str,
};

inline const char* to_string(Method m) {
  switch (m) {
    case Method::nominal_lb: return "nominal-lb";
    case Method::nominal_ub: return "nominal-ub";
    case Method::compact: return "compact";
    case Method::compact_str: return "compact-str";
    case Method::iterative: return "iterative";
    case Method::iterative_str: return "iterative-str";
  }
  return "?";
}

inline Method method_from_string(const std::string& name) {
  if (name == "nominal-lb") return Method::nominal_lb;
  if (name == "nominal-ub") return Method::nominal_ub;
  if (name == "compact") return Method::compact;
  if (name == "compact-str") return Method::compact_str;
  if (name == "iterative") return Method::iterative;
  if (name == "iterative-str") return Method::iterative_str;
  throw ValidationError("unknown method '" + name + "'");
}

struct BenchConfig {
  std::vector<int> sizes;
  std::vector<int> u_levels;
  std::vector<std::uint64_t> seeds;
  std::vector<Method> methods;
  GenParams gen;
  double time_limit = 7200.0;
  double rel_gap_target = 1e-4;
  bool warm_start = false;  // compact variants
  int enrich_k = 0;         // iterative variants
  bool evaluate = true;     // run the three-model evaluation per row
};

struct BenchRow {
  int n = 0;
  int u = 0;
  int gamma = 0;
  std::uint64_t seed = 0;
  Method method = Method::nominal_lb;
  SolveStatus status = SolveStatus::error;
  double obj = std::numeric_limits<double>::quiet_NaN();
  double root_bound = std::numeric_limits<double>::quiet_NaN();
  double gap_rel = std::numeric_limits<double>::quiet_NaN();
  double time_s = 0.0;
  int n_iter = 0;      // 0 unless iterative
  int iter_best = 0;   // 0 unless iterative
  double eval_lb = std::numeric_limits<double>::quiet_NaN();
  double eval_cont = std::numeric_limits<double>::quiet_NaN();
  double eval_disc = std::numeric_limits<double>::quiet_NaN();
};

/// Runs one cell. Exposed separately so single rows can be reproduced.
inline BenchRow run_bench_cell(const Instance& inst, int u_level, std::uint64_t seed,
                               Method method, const BenchConfig& config) {
  BenchRow row;
  row.n = inst.n;
  row.u = u_level;
  row.gamma = gamma_from_level(inst.n, u_level);
  row.seed = seed;
  row.method = method;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    SolveReport report;
    switch (method) {
      case Method::nominal_lb:
      case Method::nominal_ub: {
        mip::SolveOptions opts;
        opts.time_limit = config.time_limit;
        opts.rel_gap_target = config.rel_gap_target;
        opts.want_root_bound = true;
        report = solve_nominal(
            inst, method == Method::nominal_lb ? NominalMode::lower : NominalMode::upper, opts);
        break;
      }
      case Method::compact:
      case Method::compact_str: {
        CompactOptions opts;
        opts.strengthen = method == Method::compact_str;
        opts.warm_start = config.warm_start;
        opts.time_limit = config.time_limit;
        opts.rel_gap_target = config.rel_gap_target;
        report = solve_compact(inst, row.gamma, opts).report;
        break;
      }
      case Method::iterative:
      case Method::iterative_str: {
        IterativeOptions opts;
        opts.strengthen = method == Method::iterative_str;
        opts.enrich_k = config.enrich_k;
        opts.time_limit = config.time_limit;
        report = solve_iterative(inst, row.gamma, opts);
        if (report.iterations) row.n_iter = static_cast<int>(report.iterations->size());
        row.iter_best = report.best_iteration;
        break;
      }
    }
    row.status = report.status;
    row.obj = report.objective;
    row.root_bound = report.root_bound;
    row.gap_rel = report.gap_rel;
    if (config.evaluate && report.ordering.size() == inst.n) {
      mip::SolveOptions eval_opts;
      eval_opts.time_limit = config.time_limit;
      EvaluationTriple eval = evaluate_ordering(inst, report.ordering, row.gamma, eval_opts);
      row.eval_lb = eval.lb_eval;
      row.eval_cont = eval.cont_bu_eval;
      row.eval_disc = eval.disc_bu_eval;
    }
  } catch (const std::exception&) {
    row.status = SolveStatus::error;
  }
  row.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline std::vector<BenchRow> run_benchmark(const BenchConfig& config,
                                           std::ostream* progress = nullptr) {
  std::vector<BenchRow> rows;
  for (int n : config.sizes) {
    for (int u : config.u_levels) {
      for (std::uint64_t seed : config.seeds) {
        const Instance inst = generate(n, seed, config.gen);
        for (Method method : config.methods) {
          BenchRow row = run_bench_cell(inst, u, seed, method, config);
          if (progress != nullptr) {
            *progress << "n=" << row.n << " u=" << row.u << " seed=" << row.seed << " "
                      << to_string(row.method) << ": " << to_string(row.status)
                      << " obj=" << row.obj << " time=" << row.time_s << "s\n";
          }
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

namespace detail {

inline std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace detail

inline constexpr char kBenchCsvHeader[] =
    "n,u,gamma,seed,method,status,obj,root_bound,gap_rel,time_s,n_iter,iter_best,"
    "eval_lb,eval_cont,eval_disc";

inline void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.u << ',' << r.gamma << ',' << r.seed << ',' << to_string(r.method)
        << ',' << to_string(r.status) << ',' << detail::csv_number(r.obj) << ','
        << detail::csv_number(r.root_bound) << ',' << detail::csv_number(r.gap_rel) << ','
        << detail::csv_number(r.time_s) << ',' << r.n_iter << ',' << r.iter_best << ','
        << detail::csv_number(r.eval_lb) << ',' << detail::csv_number(r.eval_cont) << ','
        << detail::csv_number(r.eval_disc) << '\n';
  }
}

/// Per-configuration means in the same shape as the per-row file, plus counts
/// of optimally solved and timed-out rows. Rows that errored are excluded
/// from the means but reported in the error column.
struct BenchSummary {
  int n = 0;
  int u = 0;
  int gamma = 0;
  Method method = Method::nominal_lb;
  int rows = 0;
  int n_opt = 0;
  double tl_pct = 0.0;
  int errors = 0;
  double mean_obj = 0.0;
  double mean_root_bound = 0.0;
  double mean_gap_rel = 0.0;
  double mean_time_s = 0.0;
  double mean_n_iter = 0.0;
  double mean_iter_best = 0.0;
  double mean_eval_lb = 0.0;
  double mean_eval_cont = 0.0;
  double mean_eval_disc = 0.0;
};

inline std::vector<BenchSummary> aggregate(const std::vector<BenchRow>& rows) {
  std::map<std::tuple<int, int, int>, BenchSummary> groups;
  std::map<std::tuple<int, int, int>, std::map<std::string, std::pair<double, int>>> sums;
  for (const BenchRow& r : rows) {
    auto key = std::make_tuple(r.n, r.u, static_cast<int>(r.method));
    BenchSummary& g = groups[key];
    g.n = r.n;
    g.u = r.u;
    g.gamma = r.gamma;
    g.method = r.method;
    g.rows += 1;
    if (r.status == SolveStatus::optimal) g.n_opt += 1;
    if (r.status == SolveStatus::time_limit) g.tl_pct += 1;
    if (r.status == SolveStatus::error) {
      g.errors += 1;
      continue;
    }
    auto& s = sums[key];
    auto acc = [&](const char* name, double v) {
      if (!std::isnan(v)) {
        s[name].first += v;
        s[name].second += 1;
      }
    };
    acc("obj", r.obj);
    acc("root", r.root_bound);
    acc("gap", r.gap_rel);
    acc("time", r.time_s);
    acc("n_iter", r.n_iter);
    acc("iter_best", r.iter_best);
    acc("eval_lb", r.eval_lb);
    acc("eval_cont", r.eval_cont);
    acc("eval_disc", r.eval_disc);
  }
  std::vector<BenchSummary> out;
  for (auto& [key, g] : groups) {
    const auto& s = sums[key];
    auto mean = [&](const char* name) {
      auto it = s.find(name);
      return it != s.end() && it->second.second > 0 ? it->second.first / it->second.second : 0.0;
    };
    g.tl_pct = g.rows > 0 ? 100.0 * g.tl_pct / g.rows : 0.0;
    g.mean_obj = mean("obj");
    g.mean_root_bound = mean("root");
    g.mean_gap_rel = mean("gap");
    g.mean_time_s = mean("time");
    g.mean_n_iter = mean("n_iter");
    g.mean_iter_best = mean("iter_best");
    g.mean_eval_lb = mean("eval_lb");
    g.mean_eval_cont = mean("eval_cont");
    g.mean_eval_disc = mean("eval_disc");
    out.push_back(g);
  }
  return out;
}

inline void write_summary_csv(const std::vector<BenchSummary>& summaries, std::ostream& out) {
  out << "n,u,gamma,method,rows,n_opt,tl_pct,errors,mean_obj,mean_root_bound,mean_gap_rel,"
         "mean_time_s,mean_n_iter,mean_iter_best,mean_eval_lb,mean_eval_cont,mean_eval_disc\n";
  for (const BenchSummary& s : summaries) {
    out << s.n << ',' << s.u << ',' << s.gamma << ',' << to_string(s.method) << ',' << s.rows
        << ',' << s.n_opt << ',' << detail::csv_number(s.tl_pct) << ',' << s.errors << ','
        << detail::csv_number(s.mean_obj) << ',' << detail::csv_number(s.mean_root_bound) << ','
        << detail::csv_number(s.mean_gap_rel) << ',' << detail::csv_number(s.mean_time_s) << ','
        << detail::csv_number(s.mean_n_iter) << ',' << detail::csv_number(s.mean_iter_best)
        << ',' << detail::csv_number(s.mean_eval_lb) << ','
        << detail::csv_number(s.mean_eval_cont) << ',' << detail::csv_number(s.mean_eval_disc)
        << '\n';
  }
}

}  // namespace robsched
