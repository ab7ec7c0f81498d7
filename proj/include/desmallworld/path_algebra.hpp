#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "desmallworld/graph.hpp"
#include "desmallworld/parallel.hpp"
#include "desmallworld/reachability.hpp"

namespace desmallworld {

// Relaxed per-edge variables, one value in [0,1] per edge id.
struct EdgeVariables {
  std::vector<double> x;

  static EdgeVariables ones(std::size_t edge_count) {
    return EdgeVariables{std::vector<double>(edge_count, 1.0)};
  }
};

inline void validate_edge_variables(const EdgeVariables& vars, EdgeId edge_count) {
  if (vars.x.size() != static_cast<std::size_t>(edge_count))
    throw std::invalid_argument("edge variable vector size does not match edge count");
  for (double v : vars.x)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("edge variables must lie in [0,1]");
}

namespace detail {

// Depth-first enumeration of simple paths of length 1..k starting at a
// source. The visitor fires once per path, i.e. at every extension step:
//   fn(endpoint, path_edges, exclusion_products, path_product)
// where exclusion_products[i] is the product of x over the path edges with
// edge i left out. Exclusion products are maintained explicitly instead of
// dividing the running product by x_e, so x_e = 0 is exact.
class BoundedPathScan {
 public:
  explicit BoundedPathScan(const GraphView& g)
      : g_(&g), on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  // x == nullptr means all variables are 1 (pure path counting).
  template <class Fn>
  void run(VertexId source, int k, const double* x, Fn&& fn) {
    if (source < 0 || source >= g_->vertex_count())
      throw std::invalid_argument("source vertex out of range");
    require_spreading_k(k);
    path_edges_.clear();
    path_x_.clear();
    on_path_[static_cast<std::size_t>(source)] = 1;
    extend(source, k, x, 1.0, fn);
    on_path_[static_cast<std::size_t>(source)] = 0;
  }

 private:
  template <class Fn>
  void extend(VertexId tail, int k, const double* x, double w, Fn& fn) {
    if (static_cast<int>(path_edges_.size()) == k) return;
    for (const auto& a : g_->neighbors_raw(tail)) {
      if (g_->edge_removed(a.edge) || on_path_[static_cast<std::size_t>(a.neighbor)]) continue;
      const double xe = x ? x[static_cast<std::size_t>(a.edge)] : 1.0;
      const double w2 = w * xe;
      path_edges_.push_back(a.edge);
      path_x_.push_back(xe);
      on_path_[static_cast<std::size_t>(a.neighbor)] = 1;
      refresh_exclusions(x != nullptr);
      fn(a.neighbor, std::span<const EdgeId>(path_edges_), std::span<const double>(excl_), w2);
      extend(a.neighbor, k, x, w2, fn);
      on_path_[static_cast<std::size_t>(a.neighbor)] = 0;
      path_edges_.pop_back();
      path_x_.pop_back();
    }
  }

  void refresh_exclusions(bool weighted) {
    const std::size_t m = path_x_.size();
    excl_.assign(m, 1.0);
    if (!weighted) return;
    double prefix = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      excl_[i] = prefix;
      prefix *= path_x_[i];
    }
    double suffix = 1.0;
    for (std::size_t i = m; i-- > 0;) {
      excl_[i] *= suffix;
      suffix *= path_x_[i];
    }
  }

  const GraphView* g_;
  std::vector<char> on_path_;
  std::vector<EdgeId> path_edges_;
  std::vector<double> path_x_;
  std::vector<double> excl_;
};

}  // namespace detail

// Weighted path sums from one source: p_sum maps target v to P(u,v), the sum
// over simple paths of length <= k of the product of edge variables; pe_sum
// maps (v, e) to P(u,v,e), the same sum over paths through e with x_e left
// out of the product. Entries exist only when at least one path contributes,
// so the key set of p_sum is exactly the distance-<=k neighborhood of u.
struct PathAlgebraState {
  VertexId source = 0;
  std::unordered_map<VertexId, double> p_sum;
  std::unordered_map<std::uint64_t, double> pe_sum;

  static std::uint64_t target_edge_key(VertexId v, EdgeId e) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32) |
           static_cast<std::uint32_t>(e);
  }

  double p(VertexId v) const {
    const auto it = p_sum.find(v);
    return it == p_sum.end() ? 0.0 : it->second;
  }

  double pe(VertexId v, EdgeId e) const {
    const auto it = pe_sum.find(target_edge_key(v, e));
    return it == pe_sum.end() ? 0.0 : it->second;
  }
};

namespace detail {

inline PathAlgebraState compute_puve_impl(const GraphView& g, VertexId source, int k,
                                          const double* x) {
  PathAlgebraState state;
  state.source = source;
  BoundedPathScan scan(g);
  scan.run(source, k, x,
           [&](VertexId v, std::span<const EdgeId> edges, std::span<const double> excl, double w) {
             state.p_sum[v] += w;
             for (std::size_t i = 0; i < edges.size(); ++i)
               state.pe_sum[PathAlgebraState::target_edge_key(v, edges[i])] += excl[i];
           });
  return state;
}

}  // namespace detail

// Exact P(u,*) and P(u,*,*) for one source. Pairs are unordered: consumers
// aggregating over sources must take each pair once (from its lower-id
// endpoint), since the run from v reproduces the run from u reversed.
inline PathAlgebraState compute_puve(const GraphView& g, VertexId source, int k,
                                     const EdgeVariables& vars) {
  validate_edge_variables(vars, g.edge_count());
  return detail::compute_puve_impl(g, source, k, vars.x.data());
}

// x == 1 specialization for every source; values are integral path counts.
inline std::vector<PathAlgebraState> path_counts(const GraphView& g, int k) {
  std::vector<PathAlgebraState> states;
  states.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    states.push_back(detail::compute_puve_impl(g, u, k, nullptr));
  return states;
}

namespace detail {

struct ObjectiveGradientPartial {
  double objective = 0.0;
  std::int64_t pairs_seen = 0;
  std::vector<double> gradient;
};

// Shared evaluation of the exponential objective and its closed-form
// gradient over reachable pairs:
//   F(x)   = sum over pairs of exp(-lambda * P(u,v))
//   g(x_e) = sum over pairs of -lambda * P(u,v,e) * exp(-lambda * P(u,v))
// Pairs are the targets with at least one length-<=k path, which is exactly
// the reachable pair set of the traversed view; `restrict_pairs` narrows the
// sum to a subset (pairs of the subset with no surviving path contribute
// exp(0) = 1 to the objective and nothing to the gradient).
inline ObjectiveGradientPartial objective_and_gradient(const GraphView& g, int k, double lambda,
                                                       const EdgeVariables& vars,
                                                       const ReachablePairSet* restrict_pairs,
                                                       bool want_gradient, int threads = 1) {
  validate_edge_variables(vars, g.edge_count());
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");

  ObjectiveGradientPartial total;
  total.gradient.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
  const double* x = vars.x.data();

  ordered_chunk_reduce<ObjectiveGradientPartial>(
      threads, g.vertex_count(), kSourceChunk,
      [&](std::int64_t begin, std::int64_t end) {
        ObjectiveGradientPartial part;
        if (want_gradient) part.gradient.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
        for (std::int64_t u = begin; u < end; ++u) {
          const PathAlgebraState state =
              compute_puve_impl(g, static_cast<VertexId>(u), k, x);
          for (const auto& [v, p] : state.p_sum) {
            if (v <= u) continue;
            if (restrict_pairs &&
                !restrict_pairs->contains_key(pair_key(static_cast<VertexId>(u), v)))
              continue;
            part.objective += std::exp(-lambda * p);
            ++part.pairs_seen;
          }
          if (!want_gradient) continue;
          for (const auto& [key, pe] : state.pe_sum) {
            const VertexId v = static_cast<VertexId>(key >> 32);
            if (v <= u) continue;
            if (restrict_pairs &&
                !restrict_pairs->contains_key(pair_key(static_cast<VertexId>(u), v)))
              continue;
            const EdgeId e = static_cast<EdgeId>(key & 0xffffffffu);
            part.gradient[static_cast<std::size_t>(e)] +=
                -lambda * pe * std::exp(-lambda * state.p(v));
          }
        }
        return part;
      },
      [&](ObjectiveGradientPartial&& part, std::int64_t) {
        total.objective += part.objective;
        total.pairs_seen += part.pairs_seen;
        if (want_gradient)
          for (std::size_t e = 0; e < total.gradient.size(); ++e)
            total.gradient[e] += part.gradient[e];
      });

  // Restricted pairs with every surviving path gone have P = 0 and hence no
  // p_sum entry; each contributes the maximal term exp(0) = 1.
  if (restrict_pairs) total.objective += static_cast<double>(restrict_pairs->count() - total.pairs_seen);
  return total;
}

}  // namespace detail

}  // namespace desmallworld
