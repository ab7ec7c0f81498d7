#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "desmallworld/graph.hpp"
#include "desmallworld/greedy.hpp"
#include "desmallworld/optimizer.hpp"
#include "desmallworld/oracle.hpp"
#include "desmallworld/reachability.hpp"

namespace desmallworld {

enum class Method { bt, lb, sb, greedy_bt, greedy_lb, greedy_sb, omo, omw, oracle };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::bt: return "bt";
    case Method::lb: return "lb";
    case Method::sb: return "sb";
    case Method::greedy_bt: return "greedy-bt";
    case Method::greedy_lb: return "greedy-lb";
    case Method::greedy_sb: return "greedy-sb";
    case Method::omo: return "omo";
    case Method::omw: return "omw";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline std::optional<Method> method_from_string(std::string_view name) {
  for (Method m : {Method::bt, Method::lb, Method::sb, Method::greedy_bt, Method::greedy_lb,
                   Method::greedy_sb, Method::omo, Method::omw, Method::oracle})
    if (name == method_name(m)) return m;
  return std::nullopt;
}

struct RunConfig {
  Method method = Method::sb;
  int k = 3;
  EdgeId budget = 1;
  // Batch size r for the scoring methods. Defaults to L for bt/lb/sb (one
  // scoring pass) and to 1 for the greedy-* variants.
  std::optional<EdgeId> batch;
  double lambda = 1.0;
  double beta = 0.05;
  double alpha = 5.0;
  int max_iters = 200;
  double tol = 1e-4;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct RunReport {
  std::string method;
  int k = 0;
  EdgeId budget = 0;
  EdgeId batch = 0;  // 0 when the method has no batch parameter
  double lambda = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  VertexId vertices = 0;
  EdgeId edges = 0;
  std::int64_t pairs_before = 0;
  std::int64_t pairs_after = 0;
  std::int64_t pairs_cut = 0;
  double delta = 0.0;  // pairs cut per removed edge
  std::int64_t iterations = 0;
  double runtime_ms = 0.0;
  EdgeSubset removed;
  OptimizerTrace trace;  // populated by omo/omw only
  std::string warning;
};

inline constexpr const char* kReportCsvHeader =
    "method,k,L,r,lambda,beta,alpha,vertices,edges,pairs_before,pairs_after,pairs_cut,delta,"
    "iterations,runtime_ms";

inline std::string report_csv_row(const RunReport& r) {
  std::ostringstream out;
  out << r.method << ',' << r.k << ',' << r.budget << ',' << r.batch << ',' << r.lambda << ','
      << r.beta << ',' << r.alpha << ',' << r.vertices << ',' << r.edges << ',' << r.pairs_before
      << ',' << r.pairs_after << ',' << r.pairs_cut << ',' << r.delta << ',' << r.iterations << ','
      << r.runtime_ms;
  return out.str();
}

inline void write_removed_edges(std::ostream& out, const Graph& g, const EdgeSubset& removed) {
  for (EdgeId e : removed.ids()) {
    const Edge& edge = g.edge(e);
    out << edge.u << ' ' << edge.v << '\n';
  }
}

// Runs one method end to end: baseline pair count, edge selection, and a
// from-scratch recount on the masked graph. All fields except runtime_ms are
// deterministic given the config.
inline RunReport run_experiment(const Graph& g, const RunConfig& cfg) {
  const GraphView view(g);
  RunReport report;
  report.method = method_name(cfg.method);
  report.k = cfg.k;
  report.budget = cfg.budget;
  report.lambda = cfg.lambda;
  report.beta = cfg.beta;
  report.alpha = cfg.alpha;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.pairs_before = reachable_pair_count(view, cfg.k, cfg.threads);

  const auto started = std::chrono::steady_clock::now();
  switch (cfg.method) {
    case Method::bt:
    case Method::lb:
    case Method::sb:
    case Method::greedy_bt:
    case Method::greedy_lb:
    case Method::greedy_sb: {
      const bool single_pass =
          cfg.method == Method::bt || cfg.method == Method::lb || cfg.method == Method::sb;
      SelectionConfig sel;
      sel.budget = cfg.budget;
      sel.batch = cfg.batch.value_or(single_pass ? cfg.budget : EdgeId{1});
      sel.k = cfg.k;
      if (cfg.method == Method::bt || cfg.method == Method::greedy_bt)
        sel.method = EdgeScoreMethod::global_betweenness;
      else if (cfg.method == Method::lb || cfg.method == Method::greedy_lb)
        sel.method = EdgeScoreMethod::local_betweenness;
      else
        sel.method = EdgeScoreMethod::short_betweenness;
      report.batch = sel.batch;
      report.removed = select_greedy(view, sel, cfg.threads);
      break;
    }
    case Method::omo:
    case Method::omw: {
      OptimizerConfig opt;
      opt.k = cfg.k;
      opt.budget = cfg.budget;
      opt.lambda = cfg.lambda;
      opt.beta = cfg.beta;
      opt.alpha = cfg.alpha;
      opt.max_iters = cfg.max_iters;
      opt.tol = cfg.tol;
      opt.mode =
          cfg.method == Method::omw ? OptimizerMode::candidate_set : OptimizerMode::all_edges;
      opt.rng_seed = cfg.seed;
      OptimizeResult res = optimize(view, opt, cfg.threads);
      report.removed = std::move(res.removed);
      report.iterations = static_cast<std::int64_t>(res.trace.iterations.size());
      report.warning = res.trace.warning;
      report.trace = std::move(res.trace);
      break;
    }
    case Method::oracle: {
      OracleResult res = exhaustive_optimum(view, cfg.k, cfg.budget, cfg.threads);
      report.removed = std::move(res.best_subset);
      break;
    }
  }
  const auto finished = std::chrono::steady_clock::now();
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(finished - started)
          .count();

  report.pairs_after =
      reachable_pair_count(remove_edges(view, report.removed), cfg.k, cfg.threads);
  report.pairs_cut = report.pairs_before - report.pairs_after;
  report.delta = static_cast<double>(report.pairs_cut) / static_cast<double>(cfg.budget);
  return report;
}

// Same graph, same parameters, one report per method.
inline std::vector<RunReport> compare_methods(const Graph& g, const RunConfig& base,
                                              const std::vector<Method>& methods) {
  std::vector<RunReport> reports;
  reports.reserve(methods.size());
  for (Method m : methods) {
    RunConfig cfg = base;
    cfg.method = m;
    reports.push_back(run_experiment(g, cfg));
  }
  return reports;
}

}  // namespace desmallworld
