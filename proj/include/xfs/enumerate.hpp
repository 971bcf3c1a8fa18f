#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xfs/count.hpp"
#include "xfs/cycle.hpp"
#include "xfs/error.hpp"
#include "xfs/graph.hpp"

namespace xfs {

struct EnumerationOptions {
  /// Largest order any stream will enumerate. 12 gives 11!/2 ~ 2e7 cycles.
  std::size_t max_order = 12;
};

/// Lazy depth-first SIVA generator.
///
/// Starting from one or more seed cycles, the remaining vertices are
/// inserted in ascending id order. Inserting into a cycle with m edges may
/// break any edge except the protected ones; the child that breaks edge i
/// comes before the child that breaks edge i+1. Only one cycle per SIVA
/// layer is kept alive, so memory is O(n^2) however many cycles are yielded.
///
/// A stream is single-consumer. Independent streams may run concurrently.
class CycleStream {
 public:
  CycleStream(std::size_t order, std::vector<std::vector<VertexId>> seeds,
              std::vector<EdgeKey> protected_edges, std::optional<std::size_t> first_child = std::nullopt)
      : seeds_(std::move(seeds)), protected_(std::move(protected_edges)), first_child_(first_child) {
    std::vector<bool> used(order, false);
    if (!seeds_.empty())
      for (VertexId v : seeds_.front()) used[v] = true;
    for (VertexId v = 0; v < order; ++v)
      if (!used[v]) insert_order_.push_back(v);
    const std::size_t depth = insert_order_.size();
    layers_.resize(depth + 1);
    choice_.assign(depth, 0);
    allowed_.resize(depth);
  }

  /// Next cycle in canonical form, or nullopt when exhausted.
  std::optional<HamiltonianCycle> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (!start_seed()) return finish();
    } else if (!advance()) {
      return finish();
    }
    std::vector<VertexId> out = layers_.back();
    detail::canonicalize_in_place(out);
    return HamiltonianCycle(std::move(out));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = HamiltonianCycle;
    using difference_type = std::ptrdiff_t;
    using pointer = const HamiltonianCycle*;
    using reference = const HamiltonianCycle&;

    iterator() = default;
    explicit iterator(CycleStream* stream) : stream_(stream) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    CycleStream* stream_ = nullptr;
    std::optional<HamiltonianCycle> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  std::nullopt_t finish() {
    done_ = true;
    return std::nullopt;
  }

  bool is_protected(VertexId a, VertexId b) const {
    EdgeKey e(a, b);
    return std::find(protected_.begin(), protected_.end(), e) != protected_.end();
  }

  // Positions of the parent at `level` whose outgoing edge may be broken.
  void compute_allowed(std::size_t level) {
    const auto& parent = layers_[level];
    auto& allowed = allowed_[level];
    allowed.clear();
    for (std::size_t i = 0; i < parent.size(); ++i) {
      if (!is_protected(parent[i], parent[(i + 1) % parent.size()])) allowed.push_back(i);
    }
    if (level == 0 && first_child_) {
      if (*first_child_ < allowed.size()) {
        allowed = {allowed[*first_child_]};
      } else {
        allowed.clear();
      }
    }
  }

  void build_child(std::size_t level) {
    const auto& parent = layers_[level];
    auto& child = layers_[level + 1];
    const std::size_t pos = allowed_[level][choice_[level]];
    child.assign(parent.begin(), parent.end());
    child.insert(child.begin() + static_cast<std::ptrdiff_t>(pos + 1), insert_order_[level]);
  }

  // Descend from `level` taking the first child at every layer below.
  bool descend(std::size_t level) {
    for (std::size_t k = level; k < insert_order_.size(); ++k) {
      compute_allowed(k);
      if (allowed_[k].empty()) return false;
      choice_[k] = 0;
      build_child(k);
    }
    return true;
  }

  bool start_seed() {
    while (seed_index_ < seeds_.size()) {
      layers_[0] = seeds_[seed_index_];
      if (descend(0)) return true;
      ++seed_index_;
    }
    return false;
  }

  bool advance() {
    std::size_t k = insert_order_.size();
    while (k > 0) {
      --k;
      if (choice_[k] + 1 < allowed_[k].size()) {
        ++choice_[k];
        build_child(k);
        if (descend(k + 1)) return true;
      }
    }
    ++seed_index_;
    return start_seed();
  }

  std::vector<std::vector<VertexId>> seeds_;
  std::vector<EdgeKey> protected_;
  std::optional<std::size_t> first_child_;
  std::vector<VertexId> insert_order_;
  std::vector<std::vector<VertexId>> layers_;
  std::vector<std::size_t> choice_;
  std::vector<std::vector<std::size_t>> allowed_;
  std::size_t seed_index_ = 0;
  bool started_ = false;
  bool done_ = false;
};

namespace detail {

inline void check_enumerable(std::size_t n, const EnumerationOptions& options) {
  require_order(n, 3);
  if (n > options.max_order) {
    throw Error(ErrorKind::EnumerationCapExceeded, "order " + std::to_string(n) +
                                                       " exceeds enumeration cap " +
                                                       std::to_string(options.max_order));
  }
}

inline void check_edge(std::size_t n, const EdgeKey& e) {
  if (e.v() >= n) {
    throw Error(ErrorKind::VertexOutOfRange,
                "edge (" + to_string(e) + ") in graph of order " + std::to_string(n));
  }
}

inline VertexId smallest_unused(std::size_t n, std::initializer_list<VertexId> used) {
  for (VertexId v = 0; v < n; ++v)
    if (std::find(used.begin(), used.end(), v) == used.end()) return v;
  return n;
}

}  // namespace detail

/// Every Hamiltonian cycle of the complete graph on n vertices, seeded with
/// the triangle [0,1,2]: (n-1)!/2 cycles.
inline CycleStream enumerate_all(std::size_t n, const EnumerationOptions& options = {}) {
  detail::check_enumerable(n, options);
  return CycleStream(n, {{0, 1, 2}}, {});
}

/// The slice of enumerate_all(n) descending from SIVA child `first_child`
/// (0, 1 or 2) of the seed triangle. The three slices partition the full
/// stream and can be consumed on separate threads. For n = 3 only slice 0
/// is non-empty.
inline CycleStream enumerate_all_partition(std::size_t n, std::size_t first_child,
                                           const EnumerationOptions& options = {}) {
  detail::check_enumerable(n, options);
  if (n == 3) return CycleStream(n, first_child == 0 ? std::vector<std::vector<VertexId>>{{0, 1, 2}}
                                                     : std::vector<std::vector<VertexId>>{},
                                 {});
  return CycleStream(n, {{0, 1, 2}}, {}, first_child);
}

/// The (n-2)! cycles containing e. Seeded with e's endpoints plus the
/// smallest remaining vertex; e is never broken.
inline CycleStream enumerate_through_edge(std::size_t n, const EdgeKey& e,
                                          const EnumerationOptions& options = {}) {
  detail::check_enumerable(n, options);
  detail::check_edge(n, e);
  VertexId w = detail::smallest_unused(n, {e.u(), e.v()});
  return CycleStream(n, {{e.u(), e.v(), w}}, {e});
}

struct PairEnumeration {
  EdgePairKind kind;
  CycleStream cycles;
};

/// Cycles containing both e1 and e2: (n-3)! for an adjacent pair (seeded with
/// the 2-path through the shared vertex), 2(n-3)! for a non-adjacent pair
/// (seeded with the two 4-cycles through both edges). Neither edge is ever
/// broken.
inline PairEnumeration enumerate_through_pair(std::size_t n, const EdgeKey& e1, const EdgeKey& e2,
                                              const EnumerationOptions& options = {}) {
  const EdgePairKind kind = classify_pair(e1, e2);
  detail::require_order(n, kind == EdgePairKind::NonAdjacent ? 4 : 3);
  detail::check_enumerable(n, options);
  detail::check_edge(n, e1);
  detail::check_edge(n, e2);
  if (kind == EdgePairKind::Adjacent) {
    VertexId shared = e2.touches(e1.u()) ? e1.u() : e1.v();
    VertexId a = e1.u() == shared ? e1.v() : e1.u();
    VertexId b = e2.u() == shared ? e2.v() : e2.u();
    return {kind, CycleStream(n, {{a, shared, b}}, {e1, e2})};
  }
  VertexId a = e1.u(), b = e1.v(), c = e2.u(), d = e2.v();
  return {kind, CycleStream(n, {{a, b, c, d}, {a, b, d, c}}, {e1, e2})};
}

/// Same as above for raw endpoint pairs (a,b) and (c,d); a pair member that
/// repeats its own vertex is a degenerate 2-path.
inline PairEnumeration enumerate_through_pair(std::size_t n, VertexId a, VertexId b, VertexId c,
                                              VertexId d, const EnumerationOptions& options = {}) {
  if (a == b || c == d) {
    throw Error(ErrorKind::DegenerateAdjacentPair, "pair repeats a vertex within one edge");
  }
  return enumerate_through_pair(n, EdgeKey(a, b), EdgeKey(c, d), options);
}

/// Sum of the lengths of all cycles through e, by enumeration.
inline double brute_force_sum_through(const CompleteWeightedGraph& g, const EdgeKey& e,
                                      const EnumerationOptions& options = {}) {
  g.check_vertex(e.v());
  double sum = 0.0;
  for (const auto& c : enumerate_through_edge(g.order(), e, options)) sum += cycle_length(g, c);
  return sum;
}

}  // namespace xfs
