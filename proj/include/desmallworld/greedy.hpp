#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "desmallworld/betweenness.hpp"
#include "desmallworld/graph.hpp"

namespace desmallworld {

struct SelectionConfig {
  EdgeScoreMethod method = EdgeScoreMethod::short_betweenness;
  EdgeId budget = 1;  // L, total edges to select
  EdgeId batch = 1;   // r, edges taken per scoring pass
  int k = 2;          // spreading parameter for LB/SB scoring
};

namespace detail {

// Highest-scoring active edges; ties broken by ascending edge id.
inline std::vector<EdgeId> top_scoring_edges(const std::vector<double>& score, const GraphView& g,
                                             EdgeId count) {
  std::vector<EdgeId> ids;
  ids.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!g.edge_removed(e)) ids.push_back(e);
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(count), ids.size());
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(take), ids.end(),
                    [&](EdgeId a, EdgeId b) {
                      const double sa = score[static_cast<std::size_t>(a)];
                      const double sb = score[static_cast<std::size_t>(b)];
                      if (sa != sb) return sa > sb;
                      return a < b;
                    });
  ids.resize(take);
  return ids;
}

inline EdgeScores score_edges(const GraphView& g, EdgeScoreMethod method, int k, int threads) {
  switch (method) {
    case EdgeScoreMethod::global_betweenness: return global_betweenness(g, threads);
    case EdgeScoreMethod::local_betweenness: return local_betweenness(g, k, threads);
    case EdgeScoreMethod::short_betweenness: return short_betweenness(g, k, threads);
  }
  throw std::invalid_argument("unknown scoring method");
}

}  // namespace detail

// Iteratively takes the top `batch` edges by the chosen score, masks them,
// rescores the remaining graph and repeats until `budget` edges are
// selected; the final batch is truncated so the result has exactly `budget`
// edges.
inline EdgeSubset select_greedy(const GraphView& g, const SelectionConfig& cfg, int threads = 1) {
  if (cfg.budget < 1 || static_cast<std::int64_t>(cfg.budget) >= g.active_edge_count())
    throw std::invalid_argument("edge budget must satisfy 1 <= L < |E|");
  if (cfg.batch < 1 || cfg.batch > cfg.budget)
    throw std::invalid_argument("batch size must satisfy 1 <= r <= L");

  GraphView work = g;
  std::vector<EdgeId> selected;
  selected.reserve(static_cast<std::size_t>(cfg.budget));
  while (static_cast<EdgeId>(selected.size()) < cfg.budget) {
    const EdgeId take = std::min<EdgeId>(cfg.batch, cfg.budget - static_cast<EdgeId>(selected.size()));
    const EdgeScores scores = detail::score_edges(work, cfg.method, cfg.k, threads);
    const std::vector<EdgeId> batch = detail::top_scoring_edges(scores.score, work, take);
    for (EdgeId e : batch) {
      work.set_edge_removed(e, true);
      selected.push_back(e);
    }
  }
  return EdgeSubset(std::move(selected));
}

}  // namespace desmallworld
