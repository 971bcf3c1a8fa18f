#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xfs/detail/number.hpp"
#include "xfs/error.hpp"

namespace xfs {

using VertexId = std::size_t;

/// Unordered vertex pair, stored normalized so that u < v.
class EdgeKey {
 public:
  EdgeKey(VertexId a, VertexId b) : u_(a < b ? a : b), v_(a < b ? b : a) {
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }

  VertexId u() const noexcept { return u_; }
  VertexId v() const noexcept { return v_; }

  bool touches(VertexId x) const noexcept { return x == u_ || x == v_; }

  /// Number of endpoints shared with another edge (0, 1 or 2).
  int shared_endpoints(const EdgeKey& other) const noexcept {
    return int(other.touches(u_)) + int(other.touches(v_));
  }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;

 private:
  VertexId u_;
  VertexId v_;
};

inline std::string to_string(const EdgeKey& e) {
  return std::to_string(e.u()) + "," + std::to_string(e.v());
}

constexpr std::size_t edge_count_for(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Position of a normalized edge in (u,v)-lexicographic order.
constexpr std::size_t edge_index(std::size_t n, VertexId u, VertexId v) noexcept {
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

/// All edges of the complete graph on n vertices in (u,v)-lexicographic order.
inline std::vector<EdgeKey> edge_list(std::size_t n) {
  std::vector<EdgeKey> edges;
  edges.reserve(edge_count_for(n));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

struct VertexStrength {
  VertexId vertex;
  double strength;
};

/// Immutable complete weighted graph. Weights are stored densely in
/// (u,v)-lexicographic edge order; vertex strengths and the weight total are
/// computed once at construction.
class CompleteWeightedGraph {
 public:
  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return weights_.size(); }

  double weight(const EdgeKey& e) const {
    check_vertex(e.v());
    return weights_[edge_index(n_, e.u(), e.v())];
  }
  double weight(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    return weight(EdgeKey(a, b));
  }

  double strength(VertexId v) const {
    check_vertex(v);
    return strengths_[v];
  }
  double total_weight() const noexcept { return total_; }

  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> strengths() const noexcept { return strengths_; }

  void check_vertex(VertexId v) const {
    if (v >= n_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
    }
  }

  friend bool operator==(const CompleteWeightedGraph& a, const CompleteWeightedGraph& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_;
  }

  /// Takes ownership of a dense weight vector of length n(n-1)/2.
  static CompleteWeightedGraph from_dense(std::size_t n, std::vector<double> weights) {
    if (n < 3) throw Error(ErrorKind::OrderTooSmall, "order " + std::to_string(n) + " < 3");
    if (weights.size() != edge_count_for(n)) {
      throw Error(ErrorKind::MissingEdge, "expected " + std::to_string(edge_count_for(n)) +
                                              " weights, got " + std::to_string(weights.size()));
    }
    for (double w : weights) {
      if (!std::isfinite(w)) throw Error(ErrorKind::NonFiniteWeight, "weight is not finite");
    }
    return CompleteWeightedGraph(n, std::move(weights));
  }

 private:
  CompleteWeightedGraph(std::size_t n, std::vector<double> weights)
      : n_(n), weights_(std::move(weights)), strengths_(n, 0.0) {
    std::size_t idx = 0;
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u + 1; v < n_; ++v, ++idx) {
        strengths_[u] += weights_[idx];
        strengths_[v] += weights_[idx];
        total_ += weights_[idx];
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<double> weights_;
  std::vector<double> strengths_;
  double total_ = 0.0;
};

using WeightEntry = std::pair<EdgeKey, double>;

inline CompleteWeightedGraph build_graph(std::size_t n, std::span<const WeightEntry> entries) {
  if (n < 3) throw Error(ErrorKind::OrderTooSmall, "order " + std::to_string(n) + " < 3");
  std::vector<std::optional<double>> slots(edge_count_for(n));
  for (const auto& [edge, w] : entries) {
    if (edge.v() >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + to_string(edge) + ") in graph of order " + std::to_string(n));
    }
    if (!std::isfinite(w)) {
      throw Error(ErrorKind::NonFiniteWeight, "edge (" + to_string(edge) + ")");
    }
    auto& slot = slots[edge_index(n, edge.u(), edge.v())];
    if (slot && *slot != w) {
      throw Error(ErrorKind::DuplicateEdge, "edge (" + to_string(edge) + ") given with " +
                                                detail::format_shortest(*slot) + " and " +
                                                detail::format_shortest(w));
    }
    slot = w;
  }
  std::vector<double> dense;
  dense.reserve(slots.size());
  for (VertexId u = 0, idx = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++idx) {
      if (!slots[idx]) {
        throw Error(ErrorKind::MissingEdge, "no weight for edge (" + to_string(EdgeKey(u, v)) + ")");
      }
      dense.push_back(*slots[idx]);
    }
  }
  return CompleteWeightedGraph::from_dense(n, std::move(dense));
}

inline CompleteWeightedGraph build_graph(std::size_t n, std::initializer_list<WeightEntry> entries) {
  return build_graph(n, std::span<const WeightEntry>(entries.begin(), entries.size()));
}

inline double weight(const CompleteWeightedGraph& g, const EdgeKey& e) { return g.weight(e); }

inline double vertex_strength(const CompleteWeightedGraph& g, VertexId v) { return g.strength(v); }

inline std::vector<VertexStrength> vertex_strengths(const CompleteWeightedGraph& g) {
  std::vector<VertexStrength> out;
  out.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out.push_back({v, g.strength(v)});
  return out;
}

inline double total_weight(const CompleteWeightedGraph& g) noexcept { return g.total_weight(); }

inline CompleteWeightedGraph scale(const CompleteWeightedGraph& g, double c) {
  if (!std::isfinite(c)) throw Error(ErrorKind::NonFiniteScale, "scale factor is not finite");
  std::vector<double> scaled(g.weights().begin(), g.weights().end());
  for (double& w : scaled) w *= c;
  return CompleteWeightedGraph::from_dense(g.order(), std::move(scaled));
}

// Text format:
//   # comment
//   n <order>
//   <u> <v> <weight>     (one line per unordered pair, any order)
inline CompleteWeightedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<WeightEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!order) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw SyntaxError(line_no, "expected header \"n <order>\"");
      }
      auto n = detail::parse_integer<std::size_t>(tokens[1]);
      if (!n) throw SyntaxError(line_no, "bad order \"" + tokens[1] + "\"");
      if (*n < 3) throw Error(ErrorKind::OrderTooSmall, "order " + tokens[1] + " < 3");
      order = *n;
      continue;
    }
    if (tokens.size() != 3) throw SyntaxError(line_no, "expected \"<u> <v> <weight>\"");
    auto u = detail::parse_integer<std::size_t>(tokens[0]);
    auto v = detail::parse_integer<std::size_t>(tokens[1]);
    auto w = detail::parse_double(tokens[2]);
    if (!u || !v) throw SyntaxError(line_no, "bad vertex id");
    if (!w) throw SyntaxError(line_no, "bad weight \"" + tokens[2] + "\"");
    entries.emplace_back(EdgeKey(*u, *v), *w);
  }
  if (!order) throw SyntaxError(line_no, "missing header \"n <order>\"");
  return build_graph(*order, entries);
}

inline std::string serialize_graph(const CompleteWeightedGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  auto weights = g.weights();
  std::size_t idx = 0;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v, ++idx) {
      out += std::to_string(u);
      out += ' ';
      out += std::to_string(v);
      out += ' ';
      out += detail::format_shortest(weights[idx]);
      out += '\n';
    }
  }
  return out;
}

/// Seeded uniform weights in [lo, hi]. The generator is std::mt19937_64
/// seeded with `seed`; each weight, in (u,v)-lexicographic edge order, is
/// lo + (hi - lo) * (x >> 11) * 2^-53 for the next 64-bit output x. The
/// mapping is spelled out so graphs are identical across standard libraries.
inline CompleteWeightedGraph random_graph(std::size_t n, std::uint64_t seed, double lo = 0.0,
                                          double hi = 1.0) {
  if (n < 3) throw Error(ErrorKind::OrderTooSmall, "order " + std::to_string(n) + " < 3");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error(ErrorKind::BadRange, "need finite lo <= hi");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> weights(edge_count_for(n));
  for (double& w : weights) {
    double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    w = lo + (hi - lo) * unit;
    if (w > hi) w = hi;
  }
  return CompleteWeightedGraph::from_dense(n, std::move(weights));
}

}  // namespace xfs
