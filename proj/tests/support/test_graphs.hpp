#pragma once

// Shared fixtures and small random graphs for the test suites.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "desmallworld/graph.hpp"

namespace dsw_test {

using desmallworld::EdgeId;
using desmallworld::Graph;
using desmallworld::VertexId;

inline Graph make_path(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph make_cycle(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

// Center is vertex 0; spokes get edge ids 0..leaves-1.
inline Graph make_star(VertexId leaves) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph make_triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// The 4-cycle b-a-d-c-b with b=0, a=1, d=2, c=3. Edge ids follow the
// insertion order: e1=(b,a)=0, e2=(a,d)=1, e3=(b,c)=2, e4=(c,d)=3.
struct Square {
  static constexpr VertexId b = 0;
  static constexpr VertexId a = 1;
  static constexpr VertexId d = 2;
  static constexpr VertexId c = 3;
  static constexpr EdgeId e1 = 0;
  static constexpr EdgeId e2 = 1;
  static constexpr EdgeId e3 = 2;
  static constexpr EdgeId e4 = 3;
  Graph graph{4, {{b, a}, {a, d}, {b, c}, {c, d}}};
};

// Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3), edge id 6.
inline Graph make_two_triangles_with_bridge() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Random simple graph with n vertices and exactly m distinct edges.
inline Graph random_gnm(VertexId n, EdgeId m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  while (static_cast<EdgeId>(edges.size()) < m) {
    const VertexId u = pick(rng);
    const VertexId v = pick(rng);
    if (u == v) continue;
    const auto slot = static_cast<std::size_t>(std::min(u, v)) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(std::max(u, v));
    if (used[slot]) continue;
    used[slot] = 1;
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

// Random graph where each possible edge appears with probability p.
inline Graph random_gnp(VertexId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace dsw_test
