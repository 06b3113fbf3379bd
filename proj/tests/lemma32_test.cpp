// The induced-orbit criterion: positive cases from the bundled table and
// the subregular A3 negative control.

#include <gtest/gtest.h>

#include "coxblock/lemma32.hpp"

using namespace coxblock;

TEST(Lemma32, SubregularA3FailsOnlyConditionThree) {
  RootSystem rs(parse_type("A3"));
  OrbitTables tables;
  Lemma32Report rep = lemma32_check(rs, WeightedDynkinDiagram({2, 0, 2}), {1}, tables);
  EXPECT_TRUE(rep.cond_i);
  EXPECT_TRUE(rep.cond_ii);
  EXPECT_FALSE(rep.cond_iii);
  EXPECT_TRUE(rep.uI_in_u2);
  EXPECT_TRUE(rep.dim_identity);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.ambient_dim, 10);
  EXPECT_EQ(rep.levi_dim, 0);
  EXPECT_EQ(rep.radical_size, 5);
}

TEST(Lemma32, C4RowWitnessChain) {
  // Bourbaki weights of the C4 instance; the Levi is the C2 pair at the
  // long end, nodes {2,3}
  RootSystem rs(parse_type("C4"));
  OrbitTables tables;
  Lemma32Report rep = lemma32_check(rs, WeightedDynkinDiagram({2, 2, 0, 2}), {2, 3}, tables);
  EXPECT_TRUE(rep.pass());
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_TRUE(rep.witnesses[0].found);
  EXPECT_EQ(rep.witnesses[0].chain, (std::vector<int>{2}));
  EXPECT_EQ(rep.witnesses[0].beta, 1);
}

TEST(Lemma32, E6RowWithTwoSingletonComponents) {
  RootSystem rs(parse_type("E6"));
  OrbitTables tables;
  // E6(a3) with the D4 sub-diagram as the Levi
  Lemma32Report rep =
      lemma32_check(rs, WeightedDynkinDiagram({2, 0, 0, 2, 0, 2}), {1, 2, 3, 4}, tables);
  EXPECT_TRUE(rep.pass());
  ASSERT_EQ(rep.witnesses.size(), 2u);
  for (const auto& w : rep.witnesses) {
    EXPECT_TRUE(w.found);
    EXPECT_EQ(w.chain.size(), 1u);
  }
  ASSERT_EQ(rep.levi_orbit_labels.size(), 1u);
  EXPECT_EQ(rep.levi_orbit_labels[0], "[3,1];[]");
}

TEST(Lemma32, E7RowUsesLengthTwoChain) {
  RootSystem rs(parse_type("E7"));
  OrbitTables tables;
  Lemma32Report rep = lemma32_check(rs, WeightedDynkinDiagram({0, 0, 0, 2, 0, 0, 2}),
                                    {0, 1, 2, 3, 4, 5}, tables);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.ambient_dim, 112);
  EXPECT_EQ(rep.levi_dim, 58);
  EXPECT_EQ(rep.radical_size, 27);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].chain, (std::vector<int>{4, 5}));
  ASSERT_EQ(rep.levi_orbit_labels.size(), 1u);
  EXPECT_EQ(rep.levi_orbit_labels[0], "D4(a1)");
}

TEST(Lemma32, FullSubsetIsDegenerateButConsistent) {
  RootSystem rs(parse_type("B2"));
  OrbitTables tables;
  Lemma32Report rep = lemma32_check(rs, WeightedDynkinDiagram({2, 0}), {0, 1}, tables);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.radical_size, 0);
  EXPECT_EQ(rep.ambient_dim, rep.levi_dim);
}

TEST(Lemma32, ConditionTwoFailureDetected) {
  RootSystem rs(parse_type("A3"));
  OrbitTables tables;
  // J = {0} has weight 0, not 2
  Lemma32Report rep = lemma32_check(rs, WeightedDynkinDiagram({0, 2, 0}), {1, 2}, tables);
  EXPECT_FALSE(rep.cond_ii);
}
