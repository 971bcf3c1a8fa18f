#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "xfs/efs.hpp"
#include "xfs/enumerate.hpp"

namespace xfs {
namespace {

using testing::wh4;
using testing::wh5;
using namespace testing;

constexpr double kTol = 1e-9;

#define EXPECT_REL(value, expected) EXPECT_TRUE(oracle::close((value), (expected), kTol)) \
  << #value << " = " << (value) << ", expected " << (expected)

TEST(EfsBreakdown, Wh4AB) {
  const auto b = efs_breakdown(wh4(), EdgeKey(0, 1));
  EXPECT_EQ(b.x1, 12);
  EXPECT_EQ(b.x2, 24);
  EXPECT_EQ(b.x3, 2);
  EXPECT_EQ(b.efs, 52);
}

TEST(EfsBreakdown, Wh5AB) {
  const auto b = efs_breakdown(wh5(), EdgeKey(A5, B5));
  EXPECT_REL(b.x1, 4.0);
  EXPECT_REL(b.x2, 75.1);
  EXPECT_REL(b.x3, 55.0);
  EXPECT_REL(b.efs, 197.1);
  EXPECT_REL(b.efs * 2.0, brute_force_sum_through(wh5(), EdgeKey(A5, B5)));
}

TEST(EfsBreakdown, UniformWeights) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto g = uniform_graph(n, 2.5);
    for (const auto& e : edge_list(n)) {
      EXPECT_REL(extra_factorial_sum(g, e), static_cast<double>(n * (n - 2)) * 2.5);
      EXPECT_REL(mean_length_through(g, e), static_cast<double>(n) * 2.5);
    }
    EXPECT_REL(mean_length_all(g), static_cast<double>(n) * 2.5);
  }
}

TEST(EfsBreakdown, Errors) {
  try {
    efs_breakdown(wh4(), EdgeKey(1, 7));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
  }
}

TEST(EfsBreakdown, MatchesExplicitSums) {
  for (std::size_t n : {3u, 4u, 7u, 20u, 50u}) {
    const auto g = random_graph(n, 1000 + n, -5, 5);
    for (const auto& b : efs_all(g)) {
      const auto ref = oracle::explicit_breakdown(g, b.edge);
      ASSERT_EQ(ref.intersecting, 2 * (n - 2));
      ASSERT_EQ(ref.disjoint, (n - 2) * (n - 3) / 2);
      ASSERT_EQ(b.x1, ref.x1);
      ASSERT_TRUE(oracle::close(b.x2, ref.x2));
      ASSERT_TRUE(oracle::close(b.x3, ref.x3));
      ASSERT_TRUE(oracle::close(b.efs, oracle::explicit_efs(g, b.edge)));
      ASSERT_TRUE(oracle::close(b.x1 + b.x2 + b.x3, g.total_weight()));
    }
  }
}

TEST(EfsAll, Wh4) {
  const std::map<std::pair<VertexId, VertexId>, double> want{
      {{0, 1}, 52}, {{0, 2}, 51}, {{0, 3}, 49}, {{1, 2}, 49}, {{1, 3}, 51}, {{2, 3}, 52}};
  const auto all = efs_all(wh4());
  ASSERT_EQ(all.size(), 6u);
  for (const auto& b : all) EXPECT_EQ(b.efs, want.at({b.edge.u(), b.edge.v()}));
}

TEST(EfsAll, SizeAndZeroGraph) {
  EXPECT_EQ(efs_all(random_graph(14, 5)).size(), 91u);
  for (const auto& b : efs_all(uniform_graph(6, 0.0))) EXPECT_EQ(b.efs, 0.0);
}

TEST(EfsAll, ScalesLinearly) {
  const auto g = random_graph(9, 77, -2, 3);
  for (double c : {0.5, 3.0, -1.25, 0.0}) {
    const auto scaled = efs_all(scale(g, c));
    const auto base = efs_all(g);
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_NEAR(scaled[i].efs, c * base[i].efs, 1e-12 * (1 + std::abs(c * base[i].efs)));
    }
  }
}

TEST(SummationalGraph, Wh5AB) {
  const auto s = summational_graph(wh5(), EdgeKey(A5, B5));
  EXPECT_EQ(s.base_edge, EdgeKey(A5, B5));
  EXPECT_EQ(s.weights.weight(A5, B5), 24);
  EXPECT_EQ(s.weights.weight(A5, Y5), 1);
  EXPECT_EQ(s.weights.weight(X5, Y5), 28);
  EXPECT_REL(s.total(), 394.2);
}

TEST(SummationalGraph, Wh4AB) {
  const auto g = wh4();
  const auto s = summational_graph(g, EdgeKey(0, 1));
  EXPECT_EQ(s.weights.weight(0, 1), 24);
  EXPECT_EQ(s.weights.weight(0, 2), g.weight(0, 2));
  EXPECT_EQ(s.weights.weight(1, 3), g.weight(1, 3));
  EXPECT_EQ(s.weights.weight(2, 3), 2 * g.weight(2, 3));
  EXPECT_EQ(s.total(), 52);
}

TEST(SummationalGraph, TriangleUnchanged) {
  const auto g = random_graph(3, 4);
  EXPECT_EQ(summational_graph(g, EdgeKey(0, 2)).weights, g);
}

TEST(SummationalGraph, OverflowGuard) {
  EXPECT_NO_THROW(summational_graph(uniform_graph(170, 1.0), EdgeKey(0, 1)));
  try {
    summational_graph(uniform_graph(171, 1.0), EdgeKey(0, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactorialOverflow);
  }
}

TEST(MeanLengthThrough, Examples) {
  const auto g = wh4();
  EXPECT_EQ(mean_length_through(g, EdgeKey(0, 1)), 26);
  EXPECT_EQ(mean_length_through(g, EdgeKey(0, 2)), 25.5);
  EXPECT_EQ(mean_length_through(g, EdgeKey(0, 3)), 24.5);
  EXPECT_EQ(mean_length_through(g, EdgeKey(1, 2)), 24.5);
  EXPECT_EQ(mean_length_through(g, EdgeKey(1, 3)), 25.5);
  EXPECT_EQ(mean_length_through(g, EdgeKey(2, 3)), 26);
  EXPECT_REL(mean_length_through(wh5(), EdgeKey(A5, B5)), 65.7);
}

TEST(MeanLengthAll, Examples) {
  EXPECT_REL(mean_length_all(wh4()), 76.0 / 3.0);
  EXPECT_REL(mean_length_all(wh5()), 67.05);
}

TEST(MeanLengthNotThrough, Examples) {
  EXPECT_REL(mean_length_not_through(wh4(), EdgeKey(0, 1)), 24.0);
  EXPECT_REL(mean_length_not_through(wh5(), EdgeKey(A5, B5)), 68.4);
  try {
    mean_length_not_through(random_graph(3, 1), EdgeKey(0, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoComplementCycles);
  }
  const auto stats = edge_statistics(random_graph(3, 1), EdgeKey(0, 1));
  EXPECT_FALSE(stats.mean_not_through.has_value());
}

TEST(DerivedGraph, Wh4) {
  const auto d = derived_graph(wh4());
  EXPECT_EQ(d.weight(0, 1), 312);
  EXPECT_EQ(d.weight(2, 3), 52);
  double sum = 0.0;
  for (const auto& c : enumerate_all(4)) sum += cycle_length(d, c);
  EXPECT_EQ(sum, 576 + 625 + 729);
  EXPECT_EQ(derived_graph(uniform_graph(5, 0.0)), uniform_graph(5, 0.0));
}

TEST(MeanSquaredLength, Examples) {
  EXPECT_REL(mean_squared_length(wh4()), 1930.0 / 3.0);
  EXPECT_EQ(mean_squared_length(uniform_graph(7, 0.0)), 0.0);
  // Frozen from an independent enumeration of the 12 cycles.
  EXPECT_REL(mean_squared_length(wh5()), 4738.205);
  EXPECT_REL(mean_squared_length(wh5()), oracle::moments_all(wh5()).mean_sq());
}

// Oracle equivalence on seeded random graphs (the acceptance suite runs the
// full 50-per-order sweep).
TEST(ClosedForms, MatchOracleOnRandomGraphs) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = random_graph(n, seed * 31 + n, -10, 10);
      const auto all = oracle::moments_all(g);
      EXPECT_REL(mean_length_all(g), all.mean());
      EXPECT_REL(mean_squared_length(g), all.mean_sq());
      EXPECT_GE(mean_squared_length(g) + 1e-9, mean_length_all(g) * mean_length_all(g));
      for (const auto& e : edge_list(n)) {
        const auto through = oracle::moments_through(g, e);
        EXPECT_REL(extra_factorial_sum(g, e) * oracle::factorial(n - 3), through.sum);
        EXPECT_REL(summational_graph(g, e).total(), through.sum);
        EXPECT_REL(mean_length_through(g, e), through.mean());
        if (n >= 4) {
          const auto avoid = oracle::moments_through(g, e, false);
          EXPECT_REL(mean_length_not_through(g, e), avoid.mean());
          const double combined = through.mean() * static_cast<double>(through.count) +
                                  avoid.mean() * static_cast<double>(avoid.count);
          EXPECT_REL(combined, mean_length_all(g) * static_cast<double>(all.count));
        }
      }
      double derived_sum = 0.0;
      const auto d = derived_graph(g);
      for (const auto& c : oracle::all_cycles(n)) derived_sum += oracle::length(d, c);
      EXPECT_REL(derived_sum, all.sum_sq);
    }
  }
}

}  // namespace
}  // namespace xfs
