#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "desmallworld/graph.hpp"
#include "desmallworld/reachability.hpp"

namespace desmallworld {

struct OracleResult {
  EdgeSubset best_subset;
  std::int64_t best_cut = 0;
  std::int64_t evaluated = 0;
};

namespace detail {

inline double subset_count_estimate(std::int64_t m, std::int64_t l) {
  double c = 1.0;
  for (std::int64_t i = 1; i <= l; ++i) c = c * static_cast<double>(m - l + i) / static_cast<double>(i);
  return c;
}

}  // namespace detail

// Exact maximizer of the pair-cut objective by enumerating every L-subset of
// the active edges, in lexicographic edge-id order; the first maximizer
// encountered wins ties. Refuses instances with more than 1e7 subsets.
inline OracleResult exhaustive_optimum(const GraphView& g, int k, EdgeId budget, int threads = 1) {
  detail::require_spreading_k(k);
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!g.edge_removed(e)) edges.push_back(e);
  const auto m = static_cast<std::int64_t>(edges.size());
  if (budget < 1 || budget > m)
    throw std::invalid_argument("edge budget must satisfy 1 <= L <= |E|");
  const double estimate = detail::subset_count_estimate(m, budget);
  if (estimate > 1e7)
    throw std::invalid_argument("exhaustive search refused: C(" + std::to_string(m) + "," +
                                std::to_string(budget) + ") ~ " + std::to_string(estimate) +
                                " subsets exceeds the 1e7 guard");

  const std::int64_t baseline = reachable_pair_count(g, k, threads);
  GraphView work = g;
  std::vector<std::int64_t> pick(static_cast<std::size_t>(budget));
  for (std::int64_t i = 0; i < budget; ++i) pick[static_cast<std::size_t>(i)] = i;

  OracleResult result;
  result.best_cut = -1;
  for (;;) {
    for (std::int64_t i : pick) work.set_edge_removed(edges[static_cast<std::size_t>(i)], true);
    const std::int64_t cut = baseline - reachable_pair_count(work, k, threads);
    ++result.evaluated;
    if (cut > result.best_cut) {
      result.best_cut = cut;
      std::vector<EdgeId> ids;
      ids.reserve(pick.size());
      for (std::int64_t i : pick) ids.push_back(edges[static_cast<std::size_t>(i)]);
      result.best_subset = EdgeSubset(std::move(ids));
    }
    for (std::int64_t i : pick) work.set_edge_removed(edges[static_cast<std::size_t>(i)], false);

    // next combination in lexicographic order
    std::int64_t slot = budget - 1;
    while (slot >= 0 && pick[static_cast<std::size_t>(slot)] == m - budget + slot) --slot;
    if (slot < 0) break;
    ++pick[static_cast<std::size_t>(slot)];
    for (std::int64_t j = slot + 1; j < budget; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return result;
}

// All simple paths of length <= k between u and v, vertex sequences
// including both endpoints. Unoptimized recursion, guarded to small graphs;
// exists to validate the incremental path-algebra sums independently.
inline std::vector<std::vector<VertexId>> naive_paths(const GraphView& g, VertexId u, VertexId v,
                                                      int k) {
  if (g.vertex_count() > 12)
    throw std::invalid_argument("naive path enumeration is limited to graphs with <= 12 vertices");
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");

  std::vector<std::vector<VertexId>> paths;
  std::vector<VertexId> current{u};
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  used[static_cast<std::size_t>(u)] = 1;

  auto recurse = [&](auto&& self, VertexId tail) -> void {
    if (static_cast<int>(current.size()) - 1 > k) return;
    if (tail == v && current.size() > 1) {
      paths.push_back(current);
      return;  // extending past v would revisit it
    }
    if (static_cast<int>(current.size()) - 1 == k) return;
    for (const auto& a : g.neighbors_raw(tail)) {
      if (g.edge_removed(a.edge) || used[static_cast<std::size_t>(a.neighbor)]) continue;
      used[static_cast<std::size_t>(a.neighbor)] = 1;
      current.push_back(a.neighbor);
      self(self, a.neighbor);
      current.pop_back();
      used[static_cast<std::size_t>(a.neighbor)] = 0;
    }
  };
  recurse(recurse, u);
  return paths;
}

// One counterexample to a modularity inequality of the pair-cut function f:
// disjoint singleton edge sets A and B with f(A)+f(B) on one side and
// f(A u B) + f(empty) = f(A u B) on the other.
struct ModularityWitness {
  Graph graph;
  EdgeSubset set_a;
  EdgeSubset set_b;
  std::int64_t f_a = 0;
  std::int64_t f_b = 0;
  std::int64_t f_union = 0;
};

struct ModularitySearchResult {
  std::optional<ModularityWitness> submodularity_violation;   // f(A)+f(B) < f(A u B)
  std::optional<ModularityWitness> supermodularity_violation; // f(A)+f(B) > f(A u B)
  std::int64_t trials_used = 0;
};

// Samples random graphs on at most 6 vertices (k = 2) until both modularity
// inequalities have a witness. Deterministic for a fixed seed.
inline ModularitySearchResult modularity_witness_search(std::int64_t trials,
                                                        std::uint64_t rng_seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> size_dist(3, 6);
  std::bernoulli_distribution edge_flip(0.5);
  constexpr int k = 2;

  ModularitySearchResult result;
  for (std::int64_t t = 0; t < trials; ++t) {
    result.trials_used = t + 1;
    const VertexId n = size_dist(rng);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (edge_flip(rng)) pairs.emplace_back(a, b);
    if (pairs.size() < 2) continue;
    const Graph graph(n, pairs);
    const GraphView view(graph);
    const std::int64_t baseline = reachable_pair_count(view, k);
    if (baseline == 0) continue;

    const auto edge_count = graph.edge_count();
    std::vector<std::int64_t> single(static_cast<std::size_t>(edge_count));
    GraphView work = view;
    for (EdgeId e = 0; e < edge_count; ++e) {
      work.set_edge_removed(e, true);
      single[static_cast<std::size_t>(e)] = baseline - reachable_pair_count(work, k);
      work.set_edge_removed(e, false);
    }
    for (EdgeId e1 = 0; e1 < edge_count && !(result.submodularity_violation &&
                                             result.supermodularity_violation);
         ++e1) {
      for (EdgeId e2 = e1 + 1; e2 < edge_count; ++e2) {
        work.set_edge_removed(e1, true);
        work.set_edge_removed(e2, true);
        const std::int64_t both = baseline - reachable_pair_count(work, k);
        work.set_edge_removed(e1, false);
        work.set_edge_removed(e2, false);
        const std::int64_t separate =
            single[static_cast<std::size_t>(e1)] + single[static_cast<std::size_t>(e2)];
        if (!result.submodularity_violation && separate < both)
          result.submodularity_violation = ModularityWitness{
              graph, EdgeSubset::single(e1), EdgeSubset::single(e2),
              single[static_cast<std::size_t>(e1)], single[static_cast<std::size_t>(e2)], both};
        if (!result.supermodularity_violation && separate > both)
          result.supermodularity_violation = ModularityWitness{
              graph, EdgeSubset::single(e1), EdgeSubset::single(e2),
              single[static_cast<std::size_t>(e1)], single[static_cast<std::size_t>(e2)], both};
        if (result.submodularity_violation && result.supermodularity_violation) break;
      }
    }
    if (result.submodularity_violation && result.supermodularity_violation) break;
  }
  return result;
}

}  // namespace desmallworld
