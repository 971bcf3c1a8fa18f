#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "xfs/count.hpp"
#include "xfs/cycle.hpp"
#include "xfs/efs.hpp"
#include "xfs/enumerate.hpp"
#include "xfs/graph.hpp"

namespace xfs {

inline constexpr double kOracleTolerance = 1e-9;

/// |value - oracle| <= tol * (1 + |oracle|)
inline bool close_to_oracle(double value, double oracle, double tol = kOracleTolerance) {
  return std::abs(value - oracle) <= tol * (1.0 + std::abs(oracle));
}

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst_error = 0.0;  // max |value - oracle| / (1 + |oracle|)
  std::size_t cases = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  void compare(double value, double oracle) {
    const double err = std::abs(value - oracle) / (1.0 + std::abs(oracle));
    result_.worst_error = std::max(result_.worst_error, err);
    if (!close_to_oracle(value, oracle)) result_.passed = false;
    ++result_.cases;
  }

  void expect(bool ok) {
    if (!ok) result_.passed = false;
    ++result_.cases;
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

}  // namespace detail

/// Runs every closed form on `g` against enumeration. Cost is dominated by
/// walking all (n-1)!/2 cycles once plus the (n-2)! cycles through each edge.
inline VerifyReport verify_graph(const CompleteWeightedGraph& g, const EnumerationOptions& options = {}) {
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count();
  const auto edges = edge_list(n);

  // Whole-graph oracle pass.
  double sum_len = 0.0;
  double sum_sq = 0.0;
  std::size_t all_count = 0;
  std::vector<double> avoid_sum(m, 0.0);
  std::vector<std::size_t> avoid_count(m, 0);
  std::vector<char> on_cycle(m, 0);
  for (const auto& c : enumerate_all(n, options)) {
    const double l = cycle_length(g, c);
    sum_len += l;
    sum_sq += l * l;
    ++all_count;
    std::fill(on_cycle.begin(), on_cycle.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      EdgeKey e = c.edge(i);
      on_cycle[edge_index(n, e.u(), e.v())] = 1;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (!on_cycle[k]) {
        avoid_sum[k] += l;
        ++avoid_count[k];
      }
    }
  }

  VerifyReport report;

  detail::CheckBuilder counts("cycle counts");
  counts.expect(CycleCount(all_count) == count_all(n));

  detail::CheckBuilder efs_check("efs*(n-3)! = brute-force sum through edge");
  detail::CheckBuilder summational("summational graph total = brute-force sum through edge");
  detail::CheckBuilder mean_through("mean length through edge");
  detail::CheckBuilder mean_not("mean length avoiding edge");
  detail::CheckBuilder partition("x1 + x2 + x3 = total weight");

  const double fact_n3 = factorial(n - 3).convert_to<double>();
  const double through_count = factorial(n - 2).convert_to<double>();
  for (std::size_t k = 0; k < m; ++k) {
    const EdgeKey& e = edges[k];
    double brute = 0.0;
    std::size_t through = 0;
    for (const auto& c : enumerate_through_edge(n, e, options)) {
      brute += cycle_length(g, c);
      ++through;
    }
    counts.expect(CycleCount(through) == count_through_edge(n));

    const EfsBreakdown b = efs_breakdown(g, e);
    efs_check.compare(b.efs * fact_n3, brute);
    summational.compare(summational_graph(g, e).total(), brute);
    mean_through.compare(mean_length_through(g, e), brute / through_count);
    partition.compare(b.x1 + b.x2 + b.x3, g.total_weight());
    if (n >= 4) {
      mean_not.compare(mean_length_not_through(g, e), avoid_sum[k] / static_cast<double>(avoid_count[k]));
    }
  }

  detail::CheckBuilder mean_all("mean length of all cycles");
  mean_all.compare(mean_length_all(g), sum_len / static_cast<double>(all_count));

  detail::CheckBuilder mean_sq("mean squared length of all cycles");
  mean_sq.compare(mean_squared_length(g), sum_sq / static_cast<double>(all_count));

  detail::CheckBuilder derived("derived graph cycle sum = sum of squared lengths");
  {
    const CompleteWeightedGraph d = derived_graph(g);
    double derived_sum = 0.0;
    for (const auto& c : enumerate_all(n, options)) derived_sum += cycle_length(d, c);
    derived.compare(derived_sum, sum_sq);
  }

  detail::CheckBuilder variance("mean squared length >= squared mean");
  {
    const double mean = mean_length_all(g);
    const double msq = mean_squared_length(g);
    variance.expect(msq + kOracleTolerance * (1.0 + msq) >= mean * mean);
  }

  report.checks.push_back(counts.done());
  report.checks.push_back(efs_check.done());
  report.checks.push_back(summational.done());
  report.checks.push_back(mean_through.done());
  if (n >= 4) report.checks.push_back(mean_not.done());
  report.checks.push_back(partition.done());
  report.checks.push_back(mean_all.done());
  report.checks.push_back(mean_sq.done());
  report.checks.push_back(derived.done());
  report.checks.push_back(variance.done());
  return report;
}

}  // namespace xfs
