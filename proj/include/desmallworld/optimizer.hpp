#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "desmallworld/betweenness.hpp"
#include "desmallworld/graph.hpp"
#include "desmallworld/greedy.hpp"
#include "desmallworld/path_algebra.hpp"
#include "desmallworld/reachability.hpp"

namespace desmallworld {

enum class OptimizerMode {
  all_edges,      // OMO: every edge is a variable
  candidate_set,  // OMW: variables restricted to the top alpha*L short-betweenness edges
};

struct OptimizerConfig {
  int k = 3;
  EdgeId budget = 1;       // L
  double lambda = 1.0;     // exponential sharpness of the objective
  double beta = 0.05;      // gradient step size
  int max_iters = 200;
  double tol = 1e-4;       // convergence threshold on max |dx|
  OptimizerMode mode = OptimizerMode::all_edges;
  double alpha = 5.0;      // candidate multiplier, candidate_set mode only
  std::uint64_t rng_seed = 0;  // reserved; the core is deterministic
};

// Sum over the pair set of exp(-lambda * P(u,v)). Pairs of the set with no
// surviving short path have P = 0 and contribute the maximal term 1.
inline double objective(const GraphView& g, int k, double lambda, const EdgeVariables& vars,
                        const ReachablePairSet& pairs, int threads = 1) {
  detail::require_spreading_k(k);
  return detail::objective_and_gradient(g, k, lambda, vars, &pairs, false, threads).objective;
}

// Closed-form gradient over all reachable pairs of the view:
//   g(x_e) = sum -lambda * P(u,v,e) * exp(-lambda * P(u,v)); always <= 0.
inline std::vector<double> gradients(const GraphView& g, int k, double lambda,
                                     const EdgeVariables& vars, int threads = 1) {
  detail::require_spreading_k(k);
  return detail::objective_and_gradient(g, k, lambda, vars, nullptr, true, threads).gradient;
}

struct CandidateSet {
  EdgeSubset edges;            // E_s: top alpha*L edges by short betweenness
  ReachablePairSet pairs;      // R_s: pairs cut when all of E_s is removed
  EdgeSubset path_edges;       // E_P: edges lying on some short path of an R_s pair
};

// Builds the candidate machinery for the restricted optimizer: only pairs in
// R_s can ever be cut by a subset of E_s, and edges outside E_P can be
// pruned from traversal without changing any P value of an R_s pair.
inline CandidateSet candidate_set(const GraphView& g, int k, EdgeId budget, double alpha,
                                  int threads = 1) {
  detail::require_spreading_k(k);
  if (budget < 1) throw std::invalid_argument("edge budget must be positive");
  if (alpha < 1.0) throw std::invalid_argument("candidate multiplier must be at least 1");
  const auto want = static_cast<std::int64_t>(std::llround(alpha * static_cast<double>(budget)));
  if (want > g.active_edge_count())
    throw std::invalid_argument("candidate multiplier exceeds edge count: alpha*L = " +
                                std::to_string(want) + " > " +
                                std::to_string(g.active_edge_count()));

  const EdgeScores sb = short_betweenness(g, k, threads);
  EdgeSubset es(detail::top_scoring_edges(sb.score, g, static_cast<EdgeId>(want)));

  const ReachablePairSet before = reachable_pairs(g, k, threads);
  const ReachablePairSet after = reachable_pairs(remove_edges(g, es), k, threads);
  std::vector<std::uint64_t> rs_keys;
  rs_keys.reserve(static_cast<std::size_t>(before.count() - after.count()));
  std::set_difference(before.keys().begin(), before.keys().end(), after.keys().begin(),
                      after.keys().end(), std::back_inserter(rs_keys));
  ReachablePairSet rs(k, std::move(rs_keys));

  std::vector<char> on_path(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<VertexId> sources;
  for (std::uint64_t key : rs.keys()) {
    const VertexId u = detail::pair_key_low(key);
    if (sources.empty() || sources.back() != u) sources.push_back(u);
  }
  detail::BoundedPathScan scan(g);
  for (VertexId u : sources) {
    scan.run(u, k, nullptr,
             [&](VertexId v, std::span<const EdgeId> edges, std::span<const double>, double) {
               if (v <= u || !rs.contains_key(detail::pair_key(u, v))) return;
               for (EdgeId e : edges) on_path[static_cast<std::size_t>(e)] = 1;
             });
  }
  std::vector<EdgeId> ep_ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (on_path[static_cast<std::size_t>(e)]) ep_ids.push_back(e);

  return CandidateSet{std::move(es), std::move(rs), EdgeSubset(std::move(ep_ids))};
}

enum class StopReason { step_below_tol, objective_stable, iteration_limit, nothing_to_cut };

inline const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::step_below_tol: return "step_below_tol";
    case StopReason::objective_stable: return "objective_stable";
    case StopReason::iteration_limit: return "iteration_limit";
    case StopReason::nothing_to_cut: return "nothing_to_cut";
  }
  return "?";
}

struct OptimizerIteration {
  int iteration = 0;
  double objective = 0.0;   // evaluated at the iterate before this update
  double sum_x = 0.0;       // over candidate variables, before this update
  int active_count = 0;     // after this iteration's active-set maintenance
  double max_dx = 0.0;
};

struct OptimizerTrace {
  std::vector<OptimizerIteration> iterations;
  StopReason reason = StopReason::iteration_limit;
  double final_sum_x = 0.0;  // the budget constraint is not enforced at exit
  std::string warning;
};

struct OptimizeResult {
  EdgeSubset removed;
  OptimizerTrace trace;
};

inline void write_trace_csv(std::ostream& out, const OptimizerTrace& trace) {
  out << "iteration,objective,sum_x,active_count,max_dx\n";
  for (const auto& row : trace.iterations)
    out << row.iteration << ',' << row.objective << ',' << row.sum_x << ',' << row.active_count
        << ',' << row.max_dx << '\n';
}

// Gradient ascent with an active set on the relaxed pair-cut objective.
// Variables start at 1; each iteration recomputes the path sums, updates the
// free variables by beta * g (or beta * (g - mean g) once the budget bound
// sum x >= |C| - L is violated by the previous iterate), clamps to [0,1],
// pins variables that reach a bound and releases pinned variables whose
// gradient crossed the mean. The L edges with the smallest final x are
// returned; ties break toward smaller edge ids.
inline OptimizeResult optimize(const GraphView& g, const OptimizerConfig& cfg, int threads = 1) {
  detail::require_spreading_k(cfg.k);
  if (cfg.lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (cfg.beta <= 0.0) throw std::invalid_argument("beta must be positive");
  if (cfg.tol <= 0.0) throw std::invalid_argument("tol must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  if (cfg.budget < 1 || static_cast<std::int64_t>(cfg.budget) >= g.active_edge_count())
    throw std::invalid_argument("edge budget must satisfy 1 <= L < |E|");

  std::vector<EdgeId> candidates;
  const ReachablePairSet* restrict_pairs = nullptr;
  CandidateSet cs;
  GraphView traversal = g;
  OptimizeResult result;

  if (cfg.mode == OptimizerMode::candidate_set) {
    cs = candidate_set(g, cfg.k, cfg.budget, cfg.alpha, threads);
    candidates = cs.edges.ids();
    restrict_pairs = &cs.pairs;
    // Prune edges on no short path of any R_s pair from traversal.
    std::vector<EdgeId> pruned;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!g.edge_removed(e) && !cs.path_edges.contains(e)) pruned.push_back(e);
    traversal = remove_edges(g, EdgeSubset(std::move(pruned)));
    if (cs.pairs.count() == 0) {
      result.trace.reason = StopReason::nothing_to_cut;
      result.trace.warning = "candidate pair set is empty; nothing can be cut";
      return result;
    }
  } else {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!g.edge_removed(e)) candidates.push_back(e);
    if (reachable_pair_count(g, cfg.k, threads) == 0) {
      result.trace.reason = StopReason::nothing_to_cut;
      result.trace.warning = "reachable pair set is empty; nothing can be cut";
      return result;
    }
  }

  EdgeVariables vars = EdgeVariables::ones(static_cast<std::size_t>(g.edge_count()));
  std::vector<char> active(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> prev_active = active;
  double prev_objective = 0.0;
  const auto candidate_count = static_cast<double>(candidates.size());

  for (int it = 0; it < cfg.max_iters; ++it) {
    const auto eval =
        detail::objective_and_gradient(traversal, cfg.k, cfg.lambda, vars, restrict_pairs, true,
                                       threads);
    const std::vector<double>& grad = eval.gradient;

    double sum_x = 0.0;
    for (EdgeId e : candidates) sum_x += vars.x[static_cast<std::size_t>(e)];

    double grad_sum = 0.0;
    std::int64_t free_count = 0;
    for (EdgeId e : candidates) {
      if (active[static_cast<std::size_t>(e)]) continue;
      grad_sum += grad[static_cast<std::size_t>(e)];
      ++free_count;
    }
    const double mean_grad = free_count > 0 ? grad_sum / static_cast<double>(free_count) : 0.0;

    // The bound test uses the pre-update sum of the current iterate.
    const bool bound_reached = sum_x < candidate_count - static_cast<double>(cfg.budget);

    double max_dx = 0.0;
    for (EdgeId e : candidates) {
      const auto idx = static_cast<std::size_t>(e);
      if (active[idx]) continue;
      const double step = bound_reached ? grad[idx] - mean_grad : grad[idx];
      const double next = std::min(1.0, std::max(0.0, vars.x[idx] + cfg.beta * step));
      max_dx = std::max(max_dx, std::abs(next - vars.x[idx]));
      vars.x[idx] = next;
    }
    for (EdgeId e : candidates) {
      const auto idx = static_cast<std::size_t>(e);
      if (!active[idx] && (vars.x[idx] == 0.0 || vars.x[idx] == 1.0)) active[idx] = 1;
    }
    for (EdgeId e : candidates) {
      const auto idx = static_cast<std::size_t>(e);
      if (!active[idx]) continue;
      if ((vars.x[idx] == 0.0 && grad[idx] <= mean_grad) ||
          (vars.x[idx] == 1.0 && grad[idx] >= mean_grad))
        active[idx] = 0;
    }
    int active_count = 0;
    for (EdgeId e : candidates)
      if (active[static_cast<std::size_t>(e)]) ++active_count;

    result.trace.iterations.push_back(
        OptimizerIteration{it, eval.objective, sum_x, active_count, max_dx});

    if (max_dx < cfg.tol) {
      result.trace.reason = StopReason::step_below_tol;
      break;
    }
    if (it > 0 && active == prev_active && std::abs(eval.objective - prev_objective) < cfg.tol) {
      result.trace.reason = StopReason::objective_stable;
      break;
    }
    prev_active = active;
    prev_objective = eval.objective;
    if (it == cfg.max_iters - 1) result.trace.reason = StopReason::iteration_limit;
  }

  result.trace.final_sum_x = 0.0;
  for (EdgeId e : candidates) result.trace.final_sum_x += vars.x[static_cast<std::size_t>(e)];

  std::vector<EdgeId> order = candidates;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const double xa = vars.x[static_cast<std::size_t>(a)];
    const double xb = vars.x[static_cast<std::size_t>(b)];
    if (xa != xb) return xa < xb;
    return a < b;
  });
  order.resize(static_cast<std::size_t>(cfg.budget));
  result.removed = EdgeSubset(std::move(order));
  return result;
}

}  // namespace desmallworld
