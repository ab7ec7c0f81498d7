#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "desmallworld/graph.hpp"
#include "desmallworld/parallel.hpp"
#include "desmallworld/path_algebra.hpp"
#include "desmallworld/reachability.hpp"

namespace desmallworld {

enum class EdgeScoreMethod { global_betweenness, local_betweenness, short_betweenness };

inline const char* edge_score_method_name(EdgeScoreMethod m) {
  switch (m) {
    case EdgeScoreMethod::global_betweenness: return "BT";
    case EdgeScoreMethod::local_betweenness: return "LB";
    case EdgeScoreMethod::short_betweenness: return "SB";
  }
  return "?";
}

struct EdgeScores {
  EdgeScoreMethod method = EdgeScoreMethod::global_betweenness;
  std::vector<double> score;  // one entry per edge id, masked edges stay 0
};

namespace detail {

// One Brandes source sweep with optional depth cut-off. Predecessors are
// rediscovered from distances during back-propagation instead of being
// stored per vertex.
struct BrandesScratch {
  std::vector<std::int32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<VertexId> order;

  void ensure(VertexId n) {
    if (dist.size() < static_cast<std::size_t>(n)) {
      dist.assign(static_cast<std::size_t>(n), -1);
      sigma.assign(static_cast<std::size_t>(n), 0.0);
      delta.assign(static_cast<std::size_t>(n), 0.0);
    }
  }
};

inline void brandes_from_source(const GraphView& g, VertexId source, std::int32_t depth_limit,
                                BrandesScratch& s, std::vector<double>& edge_score) {
  s.ensure(g.vertex_count());
  s.order.clear();
  s.order.push_back(source);
  s.dist[static_cast<std::size_t>(source)] = 0;
  s.sigma[static_cast<std::size_t>(source)] = 1.0;
  std::size_t head = 0;
  while (head < s.order.size()) {
    const VertexId v = s.order[head++];
    const std::int32_t d = s.dist[static_cast<std::size_t>(v)];
    if (d == depth_limit) break;
    for (const auto& a : g.neighbors_raw(v)) {
      if (g.edge_removed(a.edge)) continue;
      const auto w = static_cast<std::size_t>(a.neighbor);
      if (s.dist[w] < 0) {
        s.dist[w] = d + 1;
        s.order.push_back(a.neighbor);
      }
      if (s.dist[w] == d + 1) s.sigma[w] += s.sigma[static_cast<std::size_t>(v)];
    }
  }
  for (std::size_t i = s.order.size(); i-- > 0;) {
    const VertexId w = s.order[i];
    const std::int32_t dw = s.dist[static_cast<std::size_t>(w)];
    const double coeff =
        (1.0 + s.delta[static_cast<std::size_t>(w)]) / s.sigma[static_cast<std::size_t>(w)];
    for (const auto& a : g.neighbors_raw(w)) {
      if (g.edge_removed(a.edge)) continue;
      if (s.dist[static_cast<std::size_t>(a.neighbor)] != dw - 1) continue;
      const double c = s.sigma[static_cast<std::size_t>(a.neighbor)] * coeff;
      edge_score[static_cast<std::size_t>(a.edge)] += c;
      s.delta[static_cast<std::size_t>(a.neighbor)] += c;
    }
  }
  for (const VertexId v : s.order) {
    s.dist[static_cast<std::size_t>(v)] = -1;
    s.sigma[static_cast<std::size_t>(v)] = 0.0;
    s.delta[static_cast<std::size_t>(v)] = 0.0;
  }
}

inline EdgeScores betweenness_impl(const GraphView& g, std::int32_t depth_limit,
                                   EdgeScoreMethod tag, int threads) {
  EdgeScores scores;
  scores.method = tag;
  scores.score.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
  ordered_chunk_reduce<std::vector<double>>(
      threads, g.vertex_count(), kSourceChunk,
      [&](std::int64_t begin, std::int64_t end) {
        std::vector<double> part(static_cast<std::size_t>(g.edge_count()), 0.0);
        BrandesScratch scratch;
        for (std::int64_t u = begin; u < end; ++u)
          brandes_from_source(g, static_cast<VertexId>(u), depth_limit, scratch, part);
        return part;
      },
      [&](std::vector<double>&& part, std::int64_t) {
        for (std::size_t e = 0; e < scores.score.size(); ++e) scores.score[e] += part[e];
      });
  // Source sweeps count ordered pairs; scores use the unordered convention.
  for (double& v : scores.score) v *= 0.5;
  return scores;
}

}  // namespace detail

// B(e): over unordered vertex pairs, the fraction of shortest paths that
// pass through e.
inline EdgeScores global_betweenness(const GraphView& g, int threads = 1) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  return detail::betweenness_impl(g, std::numeric_limits<std::int32_t>::max(),
                                  EdgeScoreMethod::global_betweenness, threads);
}

// LB(e): same fraction, restricted to pairs at distance <= k.
inline EdgeScores local_betweenness(const GraphView& g, int k, int threads = 1) {
  detail::require_spreading_k(k);
  return detail::betweenness_impl(g, k, EdgeScoreMethod::local_betweenness, threads);
}

// SB(e): over reachable pairs, the fraction of all simple paths of length
// <= k (not only shortest ones) that pass through e.
inline EdgeScores short_betweenness(const GraphView& g, int k, int threads = 1) {
  detail::require_spreading_k(k);
  EdgeScores scores;
  scores.method = EdgeScoreMethod::short_betweenness;
  scores.score.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
  detail::ordered_chunk_reduce<std::vector<double>>(
      threads, g.vertex_count(), detail::kSourceChunk,
      [&](std::int64_t begin, std::int64_t end) {
        std::vector<double> part(static_cast<std::size_t>(g.edge_count()), 0.0);
        for (std::int64_t u = begin; u < end; ++u) {
          const PathAlgebraState counts =
              detail::compute_puve_impl(g, static_cast<VertexId>(u), k, nullptr);
          for (const auto& [key, cnt] : counts.pe_sum) {
            const VertexId v = static_cast<VertexId>(key >> 32);
            if (v <= u) continue;  // each unordered pair from its lower endpoint
            const EdgeId e = static_cast<EdgeId>(key & 0xffffffffu);
            part[static_cast<std::size_t>(e)] += cnt / counts.p(v);
          }
        }
        return part;
      },
      [&](std::vector<double>&& part, std::int64_t) {
        for (std::size_t e = 0; e < scores.score.size(); ++e) scores.score[e] += part[e];
      });
  return scores;
}

struct GradientBoundReport {
  // max over edges of (-SB(e)) - g(x_e); nonpositive (within rounding) when
  // the short betweenness bounds the gradient at x = 1.
  double max_violation = 0.0;
  std::vector<double> gradient;
  std::vector<double> short_betweenness;
};

// Evaluates g(x_e) at x = 1 and checks g(x_e) >= -SB(e) per edge.
inline GradientBoundReport gradient_lower_bound_check(const GraphView& g, int k, double lambda,
                                                      int threads = 1) {
  detail::require_spreading_k(k);
  const EdgeVariables ones = EdgeVariables::ones(static_cast<std::size_t>(g.edge_count()));
  auto eval = detail::objective_and_gradient(g, k, lambda, ones, nullptr, true, threads);
  EdgeScores sb = short_betweenness(g, k, threads);
  GradientBoundReport report;
  report.gradient = std::move(eval.gradient);
  report.short_betweenness = std::move(sb.score);
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < report.gradient.size(); ++e)
    report.max_violation =
        std::max(report.max_violation, -report.short_betweenness[e] - report.gradient[e]);
  if (report.gradient.empty()) report.max_violation = 0.0;
  return report;
}

inline void write_scores_csv(std::ostream& out, const GraphView& g, const EdgeScores& scores) {
  out << "edge_id,u,v,score\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.graph().edge(e);
    out << e << ',' << edge.u << ',' << edge.v << ',' << scores.score[static_cast<std::size_t>(e)]
        << '\n';
  }
}

}  // namespace desmallworld
