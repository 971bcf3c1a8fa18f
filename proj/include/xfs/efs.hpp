#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xfs/error.hpp"
#include "xfs/graph.hpp"

namespace xfs {

/// Weight decomposition of the graph relative to one edge e = (u,v):
///   x1  the weight of e
///   x2  the 2(n-2) edges sharing exactly one endpoint with e
///   x3  the (n-2)(n-3)/2 edges sharing none
/// and the extra-factorial sum efs = (n-2) x1 + x2 + 2 x3, which is the
/// summed length of the (n-2)! cycles through e divided by (n-3)!.
struct EfsBreakdown {
  EdgeKey edge;
  double x1;
  double x2;
  double x3;
  double efs;
};

/// The graph reweighted for one base edge: (n-2)! on the base edge, (n-3)!
/// on edges intersecting it and 2(n-3)! on the rest. Its weight total is the
/// summed length of every cycle through the base edge.
struct SummationalGraph {
  EdgeKey base_edge;
  CompleteWeightedGraph weights;

  std::size_t order() const noexcept { return weights.order(); }
  double total() const noexcept { return weights.total_weight(); }
};

struct EdgeStatistics {
  EdgeKey edge;
  double efs;
  double mean_through;
  std::optional<double> mean_not_through;  // absent for n = 3
};

/// Largest order for which summational_graph is computed.
inline constexpr std::size_t kMaxSummationalOrder = 170;

// O(1) given the precomputed vertex strengths:
//   x2 = S_u + S_v - 2 w(e),  x3 = W - S_u - S_v + w(e).
inline EfsBreakdown efs_breakdown(const CompleteWeightedGraph& g, const EdgeKey& e) {
  g.check_vertex(e.v());
  const double n = static_cast<double>(g.order());
  const double w = g.weight(e);
  const double su = g.strength(e.u());
  const double sv = g.strength(e.v());
  const double x2 = su + sv - 2.0 * w;
  const double x3 = g.total_weight() - su - sv + w;
  return {e, w, x2, x3, (n - 2.0) * w + x2 + 2.0 * x3};
}

inline double extra_factorial_sum(const CompleteWeightedGraph& g, const EdgeKey& e) {
  return efs_breakdown(g, e).efs;
}

/// One breakdown per edge, in (u,v)-lexicographic order; O(n^2) total.
inline std::vector<EfsBreakdown> efs_all(const CompleteWeightedGraph& g) {
  const std::size_t n = g.order();
  const double total = g.total_weight();
  const auto weights = g.weights();
  const auto strengths = g.strengths();
  std::vector<EfsBreakdown> out;
  out.reserve(g.edge_count());
  std::size_t idx = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++idx) {
      const double w = weights[idx];
      const double x2 = strengths[u] + strengths[v] - 2.0 * w;
      const double x3 = total - strengths[u] - strengths[v] + w;
      out.push_back({EdgeKey(u, v), w, x2, x3, (static_cast<double>(n) - 2.0) * w + x2 + 2.0 * x3});
    }
  }
  return out;
}

inline SummationalGraph summational_graph(const CompleteWeightedGraph& g, const EdgeKey& e) {
  g.check_vertex(e.v());
  const std::size_t n = g.order();
  if (n > kMaxSummationalOrder) {
    throw Error(ErrorKind::FactorialOverflow, "factorial multipliers overflow for order " +
                                                  std::to_string(n));
  }
  double fact_n3 = 1.0;  // (n-3)!
  for (std::size_t i = 2; i + 3 <= n; ++i) fact_n3 *= static_cast<double>(i);
  const double on_edge = fact_n3 * static_cast<double>(n - 2);
  const double intersecting = fact_n3;
  const double disjoint = 2.0 * fact_n3;

  std::vector<double> multiplied(g.weights().begin(), g.weights().end());
  std::size_t idx = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++idx) {
      const int shared = EdgeKey(u, v).shared_endpoints(e);
      multiplied[idx] *= shared == 2 ? on_edge : shared == 1 ? intersecting : disjoint;
    }
  }
  return {e, CompleteWeightedGraph::from_dense(n, std::move(multiplied))};
}

/// Mean length of the (n-2)! cycles through e: efs / (n-2).
inline double mean_length_through(const CompleteWeightedGraph& g, const EdgeKey& e) {
  return extra_factorial_sum(g, e) / static_cast<double>(g.order() - 2);
}

/// Mean length over all (n-1)!/2 cycles: 2 W / (n-1).
inline double mean_length_all(const CompleteWeightedGraph& g) {
  return 2.0 * g.total_weight() / static_cast<double>(g.order() - 1);
}

/// Mean length of the cycles that avoid e:
///   [(n-2) W - efs(e)] / [(n-2) ((n-1)/2 - 1)].
inline double mean_length_not_through(const CompleteWeightedGraph& g, const EdgeKey& e) {
  const std::size_t n = g.order();
  if (n < 4) {
    throw Error(ErrorKind::NoComplementCycles, "every cycle of a triangle uses every edge");
  }
  const double m = static_cast<double>(n - 2);
  const double cycles_ratio = (static_cast<double>(n) - 1.0) / 2.0 - 1.0;
  return (m * g.total_weight() - extra_factorial_sum(g, e)) / (m * cycles_ratio);
}

inline EdgeStatistics edge_statistics(const CompleteWeightedGraph& g, const EdgeKey& e) {
  const double efs = extra_factorial_sum(g, e);
  EdgeStatistics stats{e, efs, efs / static_cast<double>(g.order() - 2), std::nullopt};
  if (g.order() >= 4) stats.mean_not_through = mean_length_not_through(g, e);
  return stats;
}

/// Each weight w(e) replaced by w(e) * mean_length_through(g, e). The summed
/// cycle lengths of the result equal the summed squared cycle lengths of g.
inline CompleteWeightedGraph derived_graph(const CompleteWeightedGraph& g) {
  const double denom = static_cast<double>(g.order() - 2);
  std::vector<double> weights;
  weights.reserve(g.edge_count());
  for (const auto& b : efs_all(g)) weights.push_back(b.x1 * (b.efs / denom));
  return CompleteWeightedGraph::from_dense(g.order(), std::move(weights));
}

// Sum of l^2 over all cycles = sum_e w(e) * (sum of l over cycles through e)
//                            = (n-3)! * sum_e w(e) efs(e).
// Dividing by (n-1)!/2 leaves 2 / ((n-1)(n-2)).
inline double mean_squared_length(const CompleteWeightedGraph& g) {
  const double n = static_cast<double>(g.order());
  double weighted = 0.0;
  for (const auto& b : efs_all(g)) weighted += b.x1 * b.efs;
  return 2.0 * weighted / ((n - 1.0) * (n - 2.0));
}

}  // namespace xfs
