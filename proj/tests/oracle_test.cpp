#include <gtest/gtest.h>

#include "grouprep/corpus.hpp"
#include "group_corpus.hpp"
#include "oracles.hpp"

namespace grouprep {
namespace {

// The test oracles themselves, on values known by hand.

TEST(TestOracles, ClosureSizes) {
  EXPECT_EQ(testing::closure_elements(testing::perm_group(4, {{{0, 1, 2, 3}}, {{0, 1}}})).size(), 24u);
  EXPECT_EQ(testing::closure_elements(GenSet(3, {})).size(), 1u);
}

TEST(TestOracles, BruteForceAutomorphismCounts) {
  EXPECT_EQ(testing::brute_force_automorphisms(complete_graph(4)).size(), 24u);
  EXPECT_EQ(testing::brute_force_automorphisms(path_graph(5)).size(), 2u);
}

TEST(TestOracles, SubgroupCounts) {
  // S3 has 6 subgroups, S4 has 30, A5 has 59, Q8 has 6.
  EXPECT_EQ(testing::all_subgroups(make_standard(StandardKind::symmetric, 3)).size(), 6u);
  EXPECT_EQ(testing::all_subgroups(make_standard(StandardKind::symmetric, 4)).size(), 30u);
  EXPECT_EQ(testing::all_subgroups(make_standard(StandardKind::alternating, 5)).size(), 59u);
  EXPECT_EQ(testing::all_subgroups(make_standard(StandardKind::quaternion, 8)).size(), 6u);
}

TEST(TestOracles, SubgroupIndex) {
  const auto a5 = make_standard(StandardKind::alternating, 5);
  EXPECT_FALSE(testing::subgroup_index_oracle(a5, 4));
  EXPECT_TRUE(testing::subgroup_index_oracle(a5, 5));
  EXPECT_TRUE(testing::subgroup_index_oracle(make_standard(StandardKind::cyclic, 2), 2));
  EXPECT_FALSE(testing::subgroup_index_oracle(make_standard(StandardKind::cyclic, 5), 4));
}

TEST(TestOracles, BruteForceRepresentable) {
  EXPECT_TRUE(testing::brute_force_representable(make_standard(StandardKind::symmetric, 3),
                                                 complete_graph(3)));
  EXPECT_FALSE(testing::brute_force_representable(make_standard(StandardKind::cyclic, 3),
                                                  path_graph(3)));
}

}  // namespace
}  // namespace grouprep
