#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "xfs/cycle.hpp"
#include "xfs/enumerate.hpp"

namespace xfs {
namespace {

std::vector<VertexId> seq(const HamiltonianCycle& c) { return {c.vertices().begin(), c.vertices().end()}; }

TEST(Canonicalize, RotatesAndOrients) {
  EXPECT_EQ(seq(canonicalize({1, 0, 2})), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(canonicalize({0, 2, 1, 3}), canonicalize({0, 3, 1, 2}));
  EXPECT_EQ(seq(canonicalize({3, 1, 0, 2})), (std::vector<VertexId>{0, 1, 3, 2}));
}

TEST(Canonicalize, Errors) {
  try {
    canonicalize({0, 1, 1, 2});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPermutation);
  }
  try {
    canonicalize({0, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooShort);
  }
  try {
    canonicalize({0, 1, 5});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPermutation);
  }
}

// Every rotation and reflection of every cycle lands on the same canonical
// form, and canonicalization is idempotent.
TEST(Canonicalize, DihedralClassProperty) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& base : oracle::all_cycles(n)) {
      const auto canon = canonicalize(base);
      EXPECT_EQ(seq(canon), base);
      EXPECT_EQ(canonicalize(canon.vertices()), canon);
      auto s = base;
      for (std::size_t r = 0; r < n; ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        ASSERT_EQ(canonicalize(s), canon);
        auto rev = s;
        std::reverse(rev.begin(), rev.end());
        ASSERT_EQ(canonicalize(rev), canon);
      }
    }
  }
}

TEST(HamiltonianCycle, GenerationAndRendering) {
  const auto c = canonicalize({0, 2, 1, 3});
  EXPECT_EQ(c.generation(), 1u);
  EXPECT_EQ(render_cycle(c), "0-2-1-3-0");
  EXPECT_TRUE(c.contains(EdgeKey(3, 0)));
  EXPECT_FALSE(c.contains(EdgeKey(0, 1)));
  EXPECT_EQ(canonicalize({0, 1, 2}).generation(), 0u);
}

// Triangle ABC plus X gives AXCBA, ACXBA, AXBCA (A,B,C,X -> 0,1,2,3).
TEST(SivaInsert, TriangleGivesThreeChildren) {
  const auto children = siva_insert(canonicalize({0, 1, 2}), 3);
  ASSERT_EQ(children.size(), 3u);
  std::set<HamiltonianCycle> got(children.begin(), children.end());
  std::set<HamiltonianCycle> want{canonicalize({0, 3, 2, 1}), canonicalize({0, 2, 3, 1}),
                                  canonicalize({0, 3, 1, 2})};
  EXPECT_EQ(got, want);
  for (const auto& c : children) EXPECT_EQ(c.generation(), 1u);
}

// ABCDEFGH plus X: eight children, one per broken edge; breaking AB gives
// AXBCDEFGHA.
TEST(SivaInsert, OctagonGivesEightChildren) {
  const auto parent = canonicalize({0, 1, 2, 3, 4, 5, 6, 7});
  const auto children = siva_insert(parent, 8);
  ASSERT_EQ(children.size(), 8u);
  EXPECT_EQ(children[0], canonicalize({0, 8, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(std::set<HamiltonianCycle>(children.begin(), children.end()).size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_FALSE(children[i].contains(parent.edge(i))) << i;
    EXPECT_TRUE(children[i].contains(EdgeKey(parent[i], 8)));
    EXPECT_TRUE(children[i].contains(EdgeKey(parent[(i + 1) % 8], 8)));
    EXPECT_EQ(children[i].generation(), 6u);
    EXPECT_NE(children[i], parent);
  }
}

TEST(SivaInsert, Errors) {
  try {
    siva_insert(canonicalize({0, 1, 2}), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VertexAlreadyPresent);
  }
  try {
    siva_insert(canonicalize({0, 1, 2}), 9, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
  }
}

// Exhaustive: children of every canonical parent up to order 6 are n
// distinct canonical cycles of order n+1, and across all parents of one
// order they cover every cycle of the next order exactly once.
TEST(SivaInsert, ChildrenDistinctAndCoverNextOrder) {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::set<HamiltonianCycle> all_children;
    for (const auto& p : oracle::all_cycles(n)) {
      const auto children = siva_insert(canonicalize(p), n);
      ASSERT_EQ(children.size(), n);
      std::set<HamiltonianCycle> distinct(children.begin(), children.end());
      ASSERT_EQ(distinct.size(), n);
      for (const auto& c : children) {
        ASSERT_EQ(c.order(), n + 1);
        ASSERT_EQ(canonicalize(c.vertices()), c);
        ASSERT_TRUE(all_children.insert(c).second);
      }
    }
    EXPECT_EQ(all_children.size(), oracle::all_cycles(n + 1).size());
  }
}

}  // namespace
}  // namespace xfs
