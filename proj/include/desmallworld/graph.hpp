#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace desmallworld {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Canonical undirected edge, u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

struct AdjacencyEntry {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

namespace detail {

inline std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

inline VertexId pair_key_low(std::uint64_t key) {
  return static_cast<VertexId>(key >> 32);
}

inline VertexId pair_key_high(std::uint64_t key) {
  return static_cast<VertexId>(key & 0xffffffffu);
}

}  // namespace detail

// Undirected simple graph with dense, stable vertex and edge ids.
// Immutable after construction; adjacency is CSR-packed, entries per vertex
// ordered by edge id, so every traversal order is deterministic.
class Graph {
 public:
  Graph() = default;

  // Edge ids are positions in `edge_pairs`. Pairs may come in either
  // orientation and are stored canonically (u < v).
  Graph(VertexId vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    vertex_count_ = vertex_count;
    edges_.reserve(edge_pairs.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_pairs.size() * 2);
    for (const auto& [a, b] : edge_pairs) {
      if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
        throw std::invalid_argument("edge endpoint out of range");
      if (a == b) throw std::invalid_argument("self-loops are not allowed");
      if (!seen.insert(detail::pair_key(a, b)).second)
        throw std::invalid_argument("duplicate edge");
      edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    build_adjacency();
  }

  VertexId vertex_count() const { return vertex_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const AdjacencyEntry> neighbors(VertexId v) const {
    const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return {entries_.data() + b, e - b};
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    if (u == v) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    for (const auto& a : neighbors(u))
      if (a.neighbor == v) return a.edge;
    return std::nullopt;
  }

 private:
  void build_adjacency() {
    const auto n = static_cast<std::size_t>(vertex_count_);
    offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[static_cast<std::size_t>(e.u) + 1];
      ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
    entries_.resize(edges_.size() * 2);
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      entries_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] = {e.v, id};
      entries_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] = {e.u, id};
    }
  }

  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_;
  std::vector<AdjacencyEntry> entries_;
};

// Order-free set of edge ids, kept sorted and unique.
class EdgeSubset {
 public:
  EdgeSubset() = default;

  explicit EdgeSubset(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.front() < 0) throw std::invalid_argument("negative edge id");
  }

  static EdgeSubset single(EdgeId e) { return EdgeSubset(std::vector<EdgeId>{e}); }

  bool contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<EdgeId>& ids() const { return ids_; }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<EdgeId> ids_;
};

inline EdgeSubset subset_union(const EdgeSubset& a, const EdgeSubset& b) {
  std::vector<EdgeId> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                 std::back_inserter(merged));
  return EdgeSubset(std::move(merged));
}

// Read-only traversal view of a graph with some edges masked out. The
// underlying graph is never modified and edge ids stay addressable; masked
// edges are skipped by every traversal.
class GraphView {
 public:
  GraphView(const Graph& g) : g_(&g) {}  // NOLINT: implicit by design

  const Graph& graph() const { return *g_; }
  VertexId vertex_count() const { return g_->vertex_count(); }
  EdgeId edge_count() const { return g_->edge_count(); }
  std::int64_t removed_edge_count() const { return removed_count_; }
  std::int64_t active_edge_count() const { return g_->edge_count() - removed_count_; }

  bool edge_removed(EdgeId e) const {
    return !removed_.empty() && removed_[static_cast<std::size_t>(e)] != 0;
  }

  // Raw adjacency including masked edges; callers must check edge_removed.
  std::span<const AdjacencyEntry> neighbors_raw(VertexId v) const { return g_->neighbors(v); }

  // Single-threaded mask editing, for enumeration loops that flip a few
  // edges at a time instead of copying the whole mask.
  void set_edge_removed(EdgeId e, bool removed) {
    if (e < 0 || e >= g_->edge_count()) throw std::invalid_argument("invalid edge id");
    if (removed_.empty()) removed_.assign(static_cast<std::size_t>(g_->edge_count()), 0);
    char& slot = removed_[static_cast<std::size_t>(e)];
    if (slot != 0 && !removed) --removed_count_;
    if (slot == 0 && removed) ++removed_count_;
    slot = removed ? 1 : 0;
  }

 private:
  const Graph* g_;
  std::vector<char> removed_;
  std::int64_t removed_count_ = 0;

  friend GraphView remove_edges(const GraphView& base, const EdgeSubset& s);
};

inline GraphView remove_edges(const GraphView& base, const EdgeSubset& s) {
  GraphView view = base;
  for (EdgeId e : s.ids()) view.set_edge_removed(e, true);
  return view;
}

inline GraphView remove_edges(const Graph& g, const EdgeSubset& s) {
  return remove_edges(GraphView(g), s);
}

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interpretation of the input stream; both policies yield the same
// undirected simple graph, the tag records how raw line counts should be
// read in reports (directed arcs vs undirected edges).
enum class DirectednessPolicy { symmetrize_directed, undirected };

struct LoadStats {
  std::int64_t data_lines = 0;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicates_merged = 0;
};

struct LoadResult {
  Graph graph;
  LoadStats stats;
  DirectednessPolicy policy = DirectednessPolicy::symmetrize_directed;
};

// Parses SNAP-style edge lists: '#' comments, "u<ws>v" data lines. Directed
// inputs are symmetrized, self-loops dropped, duplicates merged; vertex ids
// are compacted to [0,|V|) in first-appearance order.
inline LoadResult load_edge_list(std::istream& in,
                                 DirectednessPolicy policy = DirectednessPolicy::symmetrize_directed) {
  std::string line;
  std::int64_t lineno = 0;
  std::unordered_map<std::int64_t, VertexId> label_to_id;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_set<std::uint64_t> seen;
  LoadStats stats;

  auto intern = [&](std::int64_t label) {
    const auto next = static_cast<VertexId>(label_to_id.size());
    return label_to_id.try_emplace(label, next).first->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream tokens(line);
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!(tokens >> a >> b))
      throw ParseError("line " + std::to_string(lineno) + ": expected two integer tokens");
    std::string extra;
    if (tokens >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": unexpected token '" + extra + "'");
    ++stats.data_lines;
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    if (u == v) {
      ++stats.self_loops_dropped;
      continue;
    }
    if (!seen.insert(detail::pair_key(u, v)).second) {
      ++stats.duplicates_merged;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw ParseError("empty graph: no edges found");
  return LoadResult{Graph(static_cast<VertexId>(label_to_id.size()), edges), stats, policy};
}

// Writes the same format load_edge_list reads. Isolated vertices are not
// representable in edge-list form.
inline void save_edge_list(const Graph& g, std::ostream& out) {
  out << "# undirected edge list: " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace desmallworld
