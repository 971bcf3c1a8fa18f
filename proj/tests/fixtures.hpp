#pragma once

#include "xfs/graph.hpp"

namespace xfs::testing {

// Small graph with four vertices, A,B,C,D -> 0,1,2,3.
inline CompleteWeightedGraph wh4() {
  constexpr VertexId A = 0, B = 1, C = 2, D = 3;
  return build_graph(4, {{{A, B}, 12}, {{A, D}, 7}, {{A, C}, 8}, {{B, C}, 4}, {{B, D}, 5}, {{C, D}, 2}});
}

// Five-vertex graph ABCXY, A,B,C,X,Y -> 0,1,2,3,4. Nine weights are given
// explicitly in the source example; w(XC) = 15 is the only value consistent
// with its listed cycle lengths (e.g. YXCBAY = 7 + 15 + 33 + 4 + 0.5 = 59.5).
inline constexpr VertexId A5 = 0, B5 = 1, C5 = 2, X5 = 3, Y5 = 4;

inline CompleteWeightedGraph wh5() {
  return build_graph(5, {{{A5, B5}, 4},
                         {{A5, X5}, 15},
                         {{A5, C5}, 12},
                         {{A5, Y5}, 0.5},
                         {{B5, C5}, 33},
                         {{B5, X5}, -0.4},
                         {{B5, Y5}, 15},
                         {{C5, Y5}, 33},
                         {{X5, Y5}, 7},
                         {{X5, C5}, 15}});
}

inline CompleteWeightedGraph uniform_graph(std::size_t n, double w) {
  return CompleteWeightedGraph::from_dense(n, std::vector<double>(edge_count_for(n), w));
}

}  // namespace xfs::testing
