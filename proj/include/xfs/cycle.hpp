#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xfs/error.hpp"
#include "xfs/graph.hpp"

namespace xfs {

class HamiltonianCycle;

namespace detail {

// Rotate so the smallest id comes first, then orient so that the second
// vertex is smaller than the last. Works on any set of distinct ids.
inline void canonicalize_in_place(std::vector<VertexId>& seq) {
  auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
}

}  // namespace detail

/// A Hamiltonian cycle in canonical form: vertices[0] is the smallest id and
/// vertices[1] < vertices.back(). The closing edge back to vertices[0] is
/// implicit. Every cycle of order n belongs to SIVA generation n - 3.
class HamiltonianCycle {
 public:
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t generation() const noexcept { return vertices_.size() - 3; }

  VertexId operator[](std::size_t i) const noexcept { return vertices_[i]; }

  /// Edge i joins position i to position i+1 (mod n).
  EdgeKey edge(std::size_t i) const {
    return EdgeKey(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }

  bool contains(VertexId x) const noexcept {
    return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end();
  }

  bool contains(const EdgeKey& e) const noexcept {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      VertexId a = vertices_[i];
      VertexId b = vertices_[(i + 1) % n];
      if ((a == e.u() && b == e.v()) || (a == e.v() && b == e.u())) return true;
    }
    return false;
  }

  friend auto operator<=>(const HamiltonianCycle&, const HamiltonianCycle&) = default;
  friend bool operator==(const HamiltonianCycle&, const HamiltonianCycle&) = default;

  /// Canonicalizes a cycle over any set of at least three distinct ids.
  static HamiltonianCycle from_distinct(std::vector<VertexId> seq) {
    if (seq.size() < 3) throw Error(ErrorKind::TooShort, "a cycle needs at least 3 vertices");
    std::vector<VertexId> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::NotAPermutation, "repeated vertex");
    }
    detail::canonicalize_in_place(seq);
    return HamiltonianCycle(std::move(seq));
  }

 private:
  explicit HamiltonianCycle(std::vector<VertexId> canonical) : vertices_(std::move(canonical)) {}

  friend class CycleStream;

  std::vector<VertexId> vertices_;
};

/// Canonical representative of the rotation/reflection class of `raw`,
/// which must be a permutation of 0..n-1 with n >= 3.
inline HamiltonianCycle canonicalize(std::span<const VertexId> raw) {
  if (raw.size() < 3) throw Error(ErrorKind::TooShort, "a cycle needs at least 3 vertices");
  std::vector<bool> seen(raw.size(), false);
  for (VertexId v : raw) {
    if (v >= raw.size() || seen[v]) {
      throw Error(ErrorKind::NotAPermutation, "not a permutation of 0.." + std::to_string(raw.size() - 1));
    }
    seen[v] = true;
  }
  return HamiltonianCycle::from_distinct(std::vector<VertexId>(raw.begin(), raw.end()));
}

inline HamiltonianCycle canonicalize(std::initializer_list<VertexId> raw) {
  return canonicalize(std::span<const VertexId>(raw.begin(), raw.size()));
}

/// SIVA: break each of the n edges of `parent` in turn and relink both
/// endpoints through `x`. Child i is the one that breaks edge i. The parent
/// itself is not among the outputs.
inline std::vector<HamiltonianCycle> siva_insert(const HamiltonianCycle& parent, VertexId x,
                                                 std::optional<std::size_t> graph_order = std::nullopt) {
  if (parent.contains(x)) {
    throw Error(ErrorKind::VertexAlreadyPresent, "vertex " + std::to_string(x) + " already in cycle");
  }
  if (graph_order && x >= *graph_order) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(x) + " not in graph of order " + std::to_string(*graph_order));
  }
  const auto verts = parent.vertices();
  std::vector<HamiltonianCycle> children;
  children.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::vector<VertexId> child(verts.begin(), verts.end());
    child.insert(child.begin() + static_cast<std::ptrdiff_t>(i + 1), x);
    children.push_back(HamiltonianCycle::from_distinct(std::move(child)));
  }
  return children;
}

/// "0-2-1-3-0": vertices joined by '-', closing vertex repeated.
inline std::string render_cycle(const HamiltonianCycle& c) {
  std::string out;
  for (VertexId v : c.vertices()) {
    out += std::to_string(v);
    out += '-';
  }
  out += std::to_string(c[0]);
  return out;
}

inline double cycle_length(const CompleteWeightedGraph& g, const HamiltonianCycle& c) {
  if (c.order() != g.order()) {
    throw Error(ErrorKind::OrderMismatch, "cycle of order " + std::to_string(c.order()) +
                                              " on graph of order " + std::to_string(g.order()));
  }
  const auto verts = c.vertices();
  const std::size_t n = verts.size();
  double length = 0.0;
  for (std::size_t i = 0; i < n; ++i) length += g.weight(EdgeKey(verts[i], verts[(i + 1) % n]));
  return length;
}

}  // namespace xfs
