#include <gtest/gtest.h>

#include <set>

#include "grouprep/error.hpp"
#include "grouprep/table_group.hpp"
#include "oracles.hpp"

namespace grouprep {
namespace {

// Closure of all commutators, computed without the library's subgroup code.
std::size_t commutator_order_oracle(const TableGroup& g) {
  std::set<Element> h{0};
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      h.insert(g.product(g.product(a, b), g.product(g.inverse(a), g.inverse(b))));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(h.begin(), h.end());
    for (Element a : cur)
      for (Element b : cur) grew = h.insert(g.product(a, b)).second || grew;
  }
  return h.size();
}

TEST(TableGroup, CyclicTableIsModularAddition) {
  const auto z5 = make_standard(StandardKind::cyclic, 5);
  EXPECT_EQ(z5.product(2, 4), 1u);
  for (Element i = 0; i < 5; ++i)
    for (Element j = 0; j < 5; ++j) EXPECT_EQ(z5.product(i, j), (i + j) % 5);
  EXPECT_TRUE(z5.is_abelian());
  EXPECT_EQ(z5.element_order(3), 5u);
  EXPECT_EQ(z5.inverse(2), 3u);
}

TEST(TableGroup, ValidationRejectsBadTables) {
  EXPECT_THROW(validate_table({}), InputError);
  EXPECT_THROW(validate_table({{0, 1}, {1, 1}}), InputError);
  EXPECT_THROW(validate_table({{1, 0}, {0, 1}}), InputError);
  EXPECT_THROW(validate_table({{0, 2}, {1, 0}}), InputError);
  // A loop of order 5 (Latin, two-sided identity) that is not associative.
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(validate_table(loop), InputError);
  EXPECT_NO_THROW(validate_table({{0}}));
}

TEST(TableGroup, StandardCapsEnforced) {
  EXPECT_THROW(make_standard(StandardKind::cyclic, 0), InputError);
  EXPECT_THROW(make_standard(StandardKind::cyclic, 1001), InputError);
  EXPECT_THROW(make_standard(StandardKind::symmetric, 7), InputError);
  EXPECT_THROW(make_standard(StandardKind::quaternion, 4), InputError);
  EXPECT_EQ(make_standard(StandardKind::dihedral, 1).order(), 2u);
  EXPECT_EQ(make_standard(StandardKind::dihedral, 5).order(), 10u);
  EXPECT_EQ(make_standard(StandardKind::symmetric, 5).order(), 120u);
  EXPECT_EQ(make_standard(StandardKind::alternating, 5).order(), 60u);
  EXPECT_EQ(make_standard(StandardKind::alternating, 1).order(), 1u);
  EXPECT_EQ(make_standard(StandardKind::quaternion, 8).order(), 8u);
  EXPECT_THROW(parse_standard_kind("klein"), InputError);
  EXPECT_EQ(parse_standard_kind("dihedral"), StandardKind::dihedral);
}

TEST(TableGroup, QuaternionStructure) {
  const auto q8 = make_standard(StandardKind::quaternion, 8);
  EXPECT_FALSE(q8.is_abelian());
  std::size_t order4 = 0, order2 = 0;
  for (Element a = 0; a < 8; ++a) {
    order4 += q8.element_order(a) == 4;
    order2 += q8.element_order(a) == 2;
  }
  EXPECT_EQ(order4, 6u);
  EXPECT_EQ(order2, 1u);
}

TEST(TableGroup, AbelianizationMatchesCommutatorClosure) {
  const std::vector<TableGroup> groups{
      make_standard(StandardKind::symmetric, 3),  make_standard(StandardKind::symmetric, 4),
      make_standard(StandardKind::alternating, 4), make_standard(StandardKind::alternating, 5),
      make_standard(StandardKind::quaternion, 8), make_standard(StandardKind::dihedral, 4),
      make_standard(StandardKind::dihedral, 5),   make_standard(StandardKind::cyclic, 12)};
  for (const auto& g : groups)
    EXPECT_EQ(abelianization_order(g), g.order() / commutator_order_oracle(g)) << g.order();
  EXPECT_EQ(abelianization_order(make_standard(StandardKind::quaternion, 8)), 4u);
  EXPECT_EQ(abelianization_order(make_standard(StandardKind::alternating, 4)), 3u);
  EXPECT_EQ(abelianization_order(make_standard(StandardKind::alternating, 5)), 1u);
}

TEST(TableGroup, DerivedSeries) {
  EXPECT_EQ(derived_series_sizes(make_standard(StandardKind::symmetric, 4)),
            (std::vector<std::size_t>{24, 12, 4, 1}));
  EXPECT_TRUE(is_solvable_table(make_standard(StandardKind::symmetric, 4)));
  EXPECT_FALSE(is_solvable_table(make_standard(StandardKind::alternating, 5)));
  EXPECT_FALSE(is_solvable_table(make_standard(StandardKind::symmetric, 5)));
  EXPECT_TRUE(is_solvable_table(make_standard(StandardKind::quaternion, 8)));
}

TEST(TableGroup, MinimalGeneratingSequenceGenerates) {
  for (auto kind : {StandardKind::cyclic, StandardKind::dihedral})
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto g = make_standard(kind, n);
      const auto mgs = minimal_generating_sequence(g);
      EXPECT_EQ(subgroup_closure(g, mgs).size(), g.order());
    }
  EXPECT_EQ(minimal_generating_sequence(make_standard(StandardKind::cyclic, 7)).size(), 1u);
  EXPECT_TRUE(minimal_generating_sequence(make_standard(StandardKind::cyclic, 1)).empty());
  const auto a5 = make_standard(StandardKind::alternating, 5);
  EXPECT_EQ(subgroup_closure(a5, minimal_generating_sequence(a5)).size(), 60u);
}

TEST(TableGroup, FromPermutationsMatchesBruteForceTable) {
  GenSet d4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}})});
  const auto t = testing::brute_force_table(d4);
  EXPECT_EQ(t.order(), 8u);
  EXPECT_EQ(abelianization_order(t), 4u);
  EXPECT_THROW(table_from_permutations(std::vector<Permutation>{
                   Permutation::identity(3), Permutation::from_cycles(3, {{0, 1, 2}})}),
               InputError);
}

TEST(TableGroup, SubgroupClosureAndCommutators) {
  const auto s4 = make_standard(StandardKind::symmetric, 4);
  const auto derived = commutator_subgroup(s4);
  EXPECT_EQ(derived.size(), 12u);
  EXPECT_EQ(commutator_subgroup(s4, derived).size(), 4u);
  EXPECT_TRUE(derived.contains(0));
}

}  // namespace
}  // namespace grouprep
