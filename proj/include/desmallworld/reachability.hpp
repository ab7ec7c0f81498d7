#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "desmallworld/graph.hpp"
#include "desmallworld/parallel.hpp"

namespace desmallworld {

namespace detail {

inline void require_spreading_k(int k) {
  // k=1 makes the neighborhood criterion equal the vertex degree and every
  // edge interchangeable, so it is rejected rather than silently handled.
  if (k < 2) throw std::invalid_argument("spreading parameter k must be at least 2");
}

struct BoundedBfsScratch {
  std::vector<std::int32_t> dist;
  std::vector<VertexId> visited;  // traversal order, source first

  void ensure(VertexId n) {
    if (dist.size() < static_cast<std::size_t>(n)) dist.assign(static_cast<std::size_t>(n), -1);
  }
};

// Depth-bounded BFS; fills scratch.visited with every vertex at distance
// <= k from the source (source included, position 0). Distances stay valid
// in scratch.dist until reset_scratch is called.
inline void bounded_bfs(const GraphView& g, VertexId source, int k, BoundedBfsScratch& s) {
  s.ensure(g.vertex_count());
  s.visited.clear();
  s.visited.push_back(source);
  s.dist[static_cast<std::size_t>(source)] = 0;
  std::size_t head = 0;
  while (head < s.visited.size()) {
    const VertexId v = s.visited[head++];
    const std::int32_t d = s.dist[static_cast<std::size_t>(v)];
    if (d == k) break;  // queue is distance-ordered
    for (const auto& a : g.neighbors_raw(v)) {
      if (g.edge_removed(a.edge)) continue;
      if (s.dist[static_cast<std::size_t>(a.neighbor)] >= 0) continue;
      s.dist[static_cast<std::size_t>(a.neighbor)] = d + 1;
      s.visited.push_back(a.neighbor);
    }
  }
}

inline void reset_scratch(BoundedBfsScratch& s) {
  for (VertexId v : s.visited) s.dist[static_cast<std::size_t>(v)] = -1;
}

}  // namespace detail

// Per-vertex count of vertices within distance k, excluding the vertex
// itself. The total over all vertices is exactly twice the reachable pair
// count.
struct NeighborhoodProfile {
  int k = 0;
  std::vector<std::int64_t> size_within_k;

  std::int64_t total() const {
    return std::accumulate(size_within_k.begin(), size_within_k.end(), std::int64_t{0});
  }
};

inline NeighborhoodProfile neighborhood_sizes(const GraphView& g, int k, int threads = 1) {
  detail::require_spreading_k(k);
  NeighborhoodProfile profile;
  profile.k = k;
  profile.size_within_k.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  detail::parallel_chunks(threads, g.vertex_count(), detail::kSourceChunk,
                          [&](std::int64_t begin, std::int64_t end) {
                            detail::BoundedBfsScratch scratch;
                            for (std::int64_t u = begin; u < end; ++u) {
                              detail::bounded_bfs(g, static_cast<VertexId>(u), k, scratch);
                              profile.size_within_k[static_cast<std::size_t>(u)] =
                                  static_cast<std::int64_t>(scratch.visited.size()) - 1;
                              detail::reset_scratch(scratch);
                            }
                          });
  return profile;
}

// Unordered vertex pairs at distance <= k, stored as sorted packed keys.
class ReachablePairSet {
 public:
  ReachablePairSet() = default;
  ReachablePairSet(int k, std::vector<std::uint64_t> sorted_keys)
      : k_(k), keys_(std::move(sorted_keys)) {}

  int spreading_k() const { return k_; }
  std::int64_t count() const { return static_cast<std::int64_t>(keys_.size()); }

  bool contains(VertexId u, VertexId v) const { return contains_key(detail::pair_key(u, v)); }
  bool contains_key(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
  }
  const std::vector<std::uint64_t>& keys() const { return keys_; }

 private:
  int k_ = 0;
  std::vector<std::uint64_t> keys_;
};

inline ReachablePairSet reachable_pairs(const GraphView& g, int k, int threads = 1) {
  detail::require_spreading_k(k);
  std::vector<std::uint64_t> keys;
  detail::ordered_chunk_reduce<std::vector<std::uint64_t>>(
      threads, g.vertex_count(), detail::kSourceChunk,
      [&](std::int64_t begin, std::int64_t end) {
        std::vector<std::uint64_t> part;
        detail::BoundedBfsScratch scratch;
        for (std::int64_t u = begin; u < end; ++u) {
          detail::bounded_bfs(g, static_cast<VertexId>(u), k, scratch);
          for (std::size_t i = 1; i < scratch.visited.size(); ++i) {
            const VertexId v = scratch.visited[i];
            if (v > u) part.push_back(detail::pair_key(static_cast<VertexId>(u), v));
          }
          detail::reset_scratch(scratch);
        }
        return part;
      },
      [&](std::vector<std::uint64_t>&& part, std::int64_t) {
        keys.insert(keys.end(), part.begin(), part.end());
      });
  std::sort(keys.begin(), keys.end());
  return ReachablePairSet(k, std::move(keys));
}

inline std::int64_t reachable_pair_count(const GraphView& g, int k, int threads = 1) {
  detail::require_spreading_k(k);
  std::int64_t total = 0;
  detail::ordered_chunk_reduce<std::int64_t>(
      threads, g.vertex_count(), detail::kSourceChunk,
      [&](std::int64_t begin, std::int64_t end) {
        std::int64_t part = 0;
        detail::BoundedBfsScratch scratch;
        for (std::int64_t u = begin; u < end; ++u) {
          detail::bounded_bfs(g, static_cast<VertexId>(u), k, scratch);
          for (std::size_t i = 1; i < scratch.visited.size(); ++i)
            if (scratch.visited[i] > u) ++part;
          detail::reset_scratch(scratch);
        }
        return part;
      },
      [&](std::int64_t part, std::int64_t) { total += part; });
  return total;
}

// Number of baseline pairs whose distance exceeds k once `s` is masked.
// "Cut" means pushed beyond distance k, not necessarily disconnected.
inline std::int64_t pairs_cut(const GraphView& g, int k, const EdgeSubset& s,
                              const ReachablePairSet& baseline, int threads = 1) {
  detail::require_spreading_k(k);
  if (baseline.spreading_k() != k)
    throw std::invalid_argument("baseline was computed for a different spreading parameter");
  const GraphView masked = remove_edges(g, s);
  return baseline.count() - reachable_pair_count(masked, k, threads);
}

}  // namespace desmallworld
