#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "desmallworld/graph.hpp"

namespace desmallworld {

enum class GeneratorModel { watts_strogatz, kleinberg_grid };

struct GeneratorConfig {
  GeneratorModel model = GeneratorModel::watts_strogatz;
  // watts_strogatz: vertex count; kleinberg_grid: grid side (vertices = n*n).
  VertexId n = 0;
  int ws_base_degree = 4;
  double ws_rewire_prob = 0.1;
  double ks_long_range_exponent = 2.0;
  int ks_long_range_edges_per_vertex = 1;
  std::uint64_t rng_seed = 0;
};

// Ring lattice on n vertices where everyone links to base_degree/2 neighbors
// on each side, then the far endpoint of every lattice edge is rewired to a
// uniform target with probability rewire_prob, avoiding loops and duplicates.
// Edge count is always n*base_degree/2.
inline Graph generate_watts_strogatz(VertexId n, int base_degree, double rewire_prob,
                                     std::uint64_t seed) {
  if (base_degree < 2 || base_degree % 2 != 0)
    throw std::invalid_argument("base degree must be a positive even integer");
  if (n <= base_degree)
    throw std::invalid_argument("vertex count too small for the requested base degree");
  if (rewire_prob < 0.0 || rewire_prob > 1.0)
    throw std::invalid_argument("rewire probability must lie in [0,1]");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_set<std::uint64_t> present;
  const int half = base_degree / 2;
  for (VertexId u = 0; u < n; ++u) {
    for (int j = 1; j <= half; ++j) {
      const VertexId v = static_cast<VertexId>((u + j) % n);
      edges.emplace_back(u, v);
      present.insert(detail::pair_key(u, v));
    }
  }

  std::bernoulli_distribution flip(rewire_prob);
  std::uniform_int_distribution<VertexId> any_vertex(0, n - 1);
  for (auto& [u, v] : edges) {
    if (rewire_prob == 0.0 || !flip(rng)) continue;
    present.erase(detail::pair_key(u, v));
    VertexId w = v;
    bool found = false;
    for (int attempt = 0; attempt < 100; ++attempt) {
      w = any_vertex(rng);
      if (w != u && !present.contains(detail::pair_key(u, w))) {
        found = true;
        break;
      }
    }
    if (found) v = w;
    present.insert(detail::pair_key(u, v));
  }
  return Graph(n, edges);
}

// side x side grid with 4-neighbor lattice edges plus, per vertex,
// extra_per_vertex long-range edges whose targets are drawn with probability
// proportional to (Manhattan distance)^-exponent.
inline Graph generate_kleinberg_grid(VertexId side, double exponent, int extra_per_vertex,
                                     std::uint64_t seed) {
  if (side < 2) throw std::invalid_argument("grid side must be at least 2");
  if (exponent < 0.0) throw std::invalid_argument("long-range exponent must be nonnegative");
  if (extra_per_vertex < 0)
    throw std::invalid_argument("long-range edges per vertex must be nonnegative");

  const VertexId n = side * side;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_set<std::uint64_t> present;
  auto id = [side](VertexId r, VertexId c) { return r * side + c; };
  for (VertexId r = 0; r < side; ++r) {
    for (VertexId c = 0; c < side; ++c) {
      if (c + 1 < side) {
        edges.emplace_back(id(r, c), id(r, c + 1));
        present.insert(detail::pair_key(id(r, c), id(r, c + 1)));
      }
      if (r + 1 < side) {
        edges.emplace_back(id(r, c), id(r + 1, c));
        present.insert(detail::pair_key(id(r, c), id(r + 1, c)));
      }
    }
  }

  if (extra_per_vertex > 0) {
    std::mt19937_64 rng(seed);
    std::vector<double> cumulative(static_cast<std::size_t>(n));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (VertexId u = 0; u < n; ++u) {
      const VertexId ur = u / side;
      const VertexId uc = u % side;
      double total = 0.0;
      for (VertexId v = 0; v < n; ++v) {
        if (v != u) {
          const double dist = std::abs(ur - v / side) + std::abs(uc - v % side);
          total += std::pow(dist, -exponent);
        }
        cumulative[static_cast<std::size_t>(v)] = total;
      }
      for (int j = 0; j < extra_per_vertex; ++j) {
        for (int attempt = 0; attempt < 50; ++attempt) {
          const double draw = unit(rng) * total;
          const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), draw);
          const VertexId v =
              static_cast<VertexId>(std::min<std::ptrdiff_t>(it - cumulative.begin(), n - 1));
          if (v == u || present.contains(detail::pair_key(u, v))) continue;
          edges.emplace_back(u, v);
          present.insert(detail::pair_key(u, v));
          break;
        }
      }
    }
  }
  return Graph(n, edges);
}

inline Graph generate(const GeneratorConfig& cfg) {
  switch (cfg.model) {
    case GeneratorModel::watts_strogatz:
      return generate_watts_strogatz(cfg.n, cfg.ws_base_degree, cfg.ws_rewire_prob, cfg.rng_seed);
    case GeneratorModel::kleinberg_grid:
      return generate_kleinberg_grid(cfg.n, cfg.ks_long_range_exponent,
                                     cfg.ks_long_range_edges_per_vertex, cfg.rng_seed);
  }
  throw std::invalid_argument("unknown generator model");
}

}  // namespace desmallworld
