#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "xfs/error.hpp"
#include "xfs/graph.hpp"

namespace xfs {

/// Exact non-negative cycle count.
using CycleCount = boost::multiprecision::cpp_int;

enum class EdgePairKind { Adjacent, NonAdjacent };

inline const char* to_string(EdgePairKind kind) noexcept {
  return kind == EdgePairKind::Adjacent ? "adjacent" : "non-adjacent";
}

/// Adjacent iff the edges share exactly one vertex.
inline EdgePairKind classify_pair(const EdgeKey& e1, const EdgeKey& e2) {
  switch (e1.shared_endpoints(e2)) {
    case 0: return EdgePairKind::NonAdjacent;
    case 1: return EdgePairKind::Adjacent;
    default: throw Error(ErrorKind::SameEdge, "edge (" + to_string(e1) + ") given twice");
  }
}

inline CycleCount factorial(std::size_t k) {
  CycleCount out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

namespace detail {
inline void require_order(std::size_t n, std::size_t min_order) {
  if (n < min_order) {
    throw Error(ErrorKind::OrderTooSmall,
                "order " + std::to_string(n) + " < " + std::to_string(min_order));
  }
}
}  // namespace detail

/// (n-1)!/2
inline CycleCount count_all(std::size_t n) {
  detail::require_order(n, 3);
  return factorial(n - 1) / 2;
}

/// (n-2)!
inline CycleCount count_through_edge(std::size_t n) {
  detail::require_order(n, 3);
  return factorial(n - 2);
}

/// (n-3)! for an adjacent pair, 2(n-3)! for a non-adjacent pair (n >= 4).
inline CycleCount count_through_pair(std::size_t n, EdgePairKind kind) {
  if (kind == EdgePairKind::Adjacent) {
    detail::require_order(n, 3);
    return factorial(n - 3);
  }
  detail::require_order(n, 4);
  return 2 * factorial(n - 3);
}

/// (n-1)!/2 - (n-2)!: cycles that avoid a given edge.
inline CycleCount count_not_through_edge(std::size_t n) {
  return count_all(n) - count_through_edge(n);
}

}  // namespace xfs
