#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "xfs/detail/number.hpp"
#include "xfs/efs.hpp"
#include "xfs/error.hpp"
#include "xfs/graph.hpp"

namespace xfs {

struct ProfileEntry {
  std::size_t rank;  // 1-based
  EdgeKey edge;
  double efs;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Edges sorted ascending by extra-factorial sum, ties by edge key.
struct RankedProfile {
  std::size_t order;
  std::vector<ProfileEntry> entries;

  friend bool operator==(const RankedProfile&, const RankedProfile&) = default;
};

struct ProfileComparison {
  bool same_ranking;
  std::optional<double> scale_factor;
  double max_relative_deviation;
};

inline constexpr double kScaleTolerance = 1e-9;

/// Relative width (against the largest |efs| of the graph) within which two
/// efs values count as tied. Exact ties are common, e.g. at n = 4 every edge
/// ties with its opposite edge, but rounding rarely preserves them.
inline constexpr double kTieTolerance = 1e-12;

namespace detail {

template <typename Entry>
double tie_width(const std::vector<Entry>& entries) {
  double largest = 0.0;
  for (const auto& e : entries) largest = std::max(largest, std::abs(e.efs));
  return kTieTolerance * largest;
}

// True if `entries` is in rank order: ascending efs, with values closer than
// the tie width ordered by edge key.
template <typename Entry>
bool in_rank_order(const std::vector<Entry>& entries) {
  const double width = tie_width(entries);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto& prev = entries[i - 1];
    const auto& cur = entries[i];
    if (cur.efs - prev.efs > width) continue;
    if (prev.efs - cur.efs > width || !(prev.edge < cur.edge)) return false;
  }
  return true;
}

}  // namespace detail

inline RankedProfile ranked_profile(const CompleteWeightedGraph& g) {
  std::vector<EfsBreakdown> all = efs_all(g);
  std::stable_sort(all.begin(), all.end(),
                   [](const EfsBreakdown& a, const EfsBreakdown& b) { return a.efs < b.efs; });
  // Runs of values within the tie width are reordered by edge key.
  const double width = detail::tie_width(all);
  for (std::size_t start = 0; start < all.size();) {
    std::size_t end = start + 1;
    while (end < all.size() && all[end].efs - all[end - 1].efs <= width) ++end;
    std::sort(all.begin() + static_cast<std::ptrdiff_t>(start), all.begin() + static_cast<std::ptrdiff_t>(end),
              [](const EfsBreakdown& a, const EfsBreakdown& b) { return a.edge < b.edge; });
    start = end;
  }
  RankedProfile p{g.order(), {}};
  p.entries.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) p.entries.push_back({i + 1, all[i].edge, all[i].efs});
  return p;
}

namespace detail {

// efs values indexed by edge position, independent of rank.
inline std::vector<double> efs_by_edge(const RankedProfile& p) {
  std::vector<double> out(edge_count_for(p.order), 0.0);
  for (const auto& e : p.entries) out[edge_index(p.order, e.edge.u(), e.edge.v())] = e.efs;
  return out;
}

}  // namespace detail

/// Exact rank-order equality plus detection of a global scale factor c with
/// efs2 = c * efs1 on every edge. c is fitted on the edge with the largest
/// |efs1| (1 when efs1 is identically zero) and accepted if every edge agrees
/// to within 1e-9 relative. max_relative_deviation is the worst edge's
/// |efs2 - c efs1| / max(|efs2|, |c efs1|) under that fit.
inline ProfileComparison compare_profiles(const RankedProfile& p1, const RankedProfile& p2) {
  if (p1.order != p2.order || p1.entries.size() != p2.entries.size()) {
    throw Error(ErrorKind::OrderMismatch, "profiles of order " + std::to_string(p1.order) + " and " +
                                              std::to_string(p2.order));
  }
  bool same = true;
  for (std::size_t i = 0; i < p1.entries.size(); ++i) {
    if (p1.entries[i].edge != p2.entries[i].edge) {
      same = false;
      break;
    }
  }

  const auto a = detail::efs_by_edge(p1);
  const auto b = detail::efs_by_edge(p2);
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
  const double c = a[pivot] != 0.0 ? b[pivot] / a[pivot] : 1.0;

  double deviation = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double predicted = c * a[i];
    const double scale = std::max(std::abs(b[i]), std::abs(predicted));
    if (scale == 0.0) continue;
    deviation = std::max(deviation, std::abs(b[i] - predicted) / scale);
  }

  ProfileComparison out{same, std::nullopt, deviation};
  if (deviation <= kScaleTolerance) out.scale_factor = c;
  return out;
}

inline std::string export_profile_csv(const RankedProfile& p) {
  std::string out = "rank,u,v,efs\n";
  for (const auto& e : p.entries) {
    out += std::to_string(e.rank) + "," + std::to_string(e.edge.u()) + "," +
           std::to_string(e.edge.v()) + "," + detail::format_shortest(e.efs) + "\n";
  }
  return out;
}

/// Inverse of export_profile_csv. The order is recovered from the row count.
inline RankedProfile parse_profile_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || line != "rank,u,v,efs") throw SyntaxError(line_no, "expected header rank,u,v,efs");

  std::vector<ProfileEntry> entries;
  while (next_line()) {
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, comma));
      rest.remove_prefix(comma + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 4) throw SyntaxError(line_no, "expected 4 fields");
    auto rank = detail::parse_integer<std::size_t>(fields[0]);
    auto u = detail::parse_integer<std::size_t>(fields[1]);
    auto v = detail::parse_integer<std::size_t>(fields[2]);
    auto efs = detail::parse_double(fields[3]);
    if (!rank || !u || !v || !efs) throw SyntaxError(line_no, "malformed row");
    if (*rank != entries.size() + 1) throw SyntaxError(line_no, "ranks must be consecutive from 1");
    if (*u >= *v) throw SyntaxError(line_no, "edge must satisfy u < v");
    entries.push_back({*rank, EdgeKey(*u, *v), *efs});
  }
  if (!detail::in_rank_order(entries)) throw SyntaxError(0, "rows must be sorted by efs, ties by edge");

  std::size_t n = 3;
  while (edge_count_for(n) < entries.size()) ++n;
  if (edge_count_for(n) != entries.size()) {
    throw SyntaxError(line_no, std::to_string(entries.size()) + " rows is not n(n-1)/2 for any n >= 3");
  }
  std::vector<char> seen(entries.size(), 0);
  for (const auto& e : entries) {
    if (e.edge.v() >= n) throw Error(ErrorKind::VertexOutOfRange, "edge (" + to_string(e.edge) + ")");
    auto& s = seen[edge_index(n, e.edge.u(), e.edge.v())];
    if (s) throw Error(ErrorKind::DuplicateEdge, "edge (" + to_string(e.edge) + ")");
    s = 1;
  }
  return {n, std::move(entries)};
}

}  // namespace xfs
