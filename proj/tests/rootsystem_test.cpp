// Root system construction: counts, closure, automorphisms.

#include <gtest/gtest.h>

#include "coxblock/rootsystem.hpp"
#include "coxblock/weyl.hpp"

using namespace coxblock;

TEST(RootSystem, SmallestSimplyLaced) {
  RootSystem rs(parse_type("A2"));
  EXPECT_EQ(rs.roots().size(), 6u);
  EXPECT_EQ(rs.positive_roots().size(), 3u);
}

TEST(RootSystem, CountsMatchRankTimesCoxeterNumber) {
  // |Phi| = rank * h for the untwisted Coxeter number
  struct Case { const char* type; int h; };
  for (Case c : {Case{"A1", 2}, {"A5", 6}, {"B2", 4}, {"B8", 16}, {"C3", 6}, {"C8", 16},
                 {"D4", 6}, {"D8", 14}, {"G2", 6}, {"F4", 12}, {"E6", 12}, {"E7", 18},
                 {"E8", 30}}) {
    RootSystem rs(parse_type(c.type));
    EXPECT_EQ(rs.roots().size(), size_t(rs.rank() * c.h)) << c.type;
    EXPECT_EQ(coxeter_number(rs.type()).h, c.h) << c.type;
  }
}

TEST(RootSystem, ClosedUnderNegation) {
  RootSystem rs(parse_type("F4"));
  for (const Root& r : rs.roots()) EXPECT_TRUE(rs.is_root(negate(r)));
}

TEST(RootSystem, PositiveRootsAreNonnegativeCombinations) {
  RootSystem rs(parse_type("E6"));
  for (const Root& r : rs.positive_roots())
    for (Int c : r) EXPECT_GE(c, 0);
}

TEST(RootSystem, TwistedA2SwapsSimpleRoots) {
  RootSystem rs(parse_type("2A2"));
  EXPECT_EQ(rs.phi()[0], 1);
  EXPECT_EQ(rs.phi()[1], 0);
  EXPECT_EQ(frobenius_exponent(rs.type()), 2);
}

TEST(RootSystem, PhiOrbits) {
  EXPECT_EQ(RootSystem(parse_type("A3")).phi_orbits().size(), 3u);

  auto orbits_2a3 = RootSystem(parse_type("2A3")).phi_orbits();
  ASSERT_EQ(orbits_2a3.size(), 2u);
  EXPECT_EQ(orbits_2a3[0], (std::vector<int>{0, 2}));
  EXPECT_EQ(orbits_2a3[1], (std::vector<int>{1}));

  auto orbits_3d4 = RootSystem(parse_type("3D4")).phi_orbits();
  ASSERT_EQ(orbits_3d4.size(), 2u);
  EXPECT_EQ(orbits_3d4[0], (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(orbits_3d4[1], (std::vector<int>{1}));

  EXPECT_EQ(RootSystem(parse_type("2E6")).phi_orbits().size(), 4u);
}

TEST(RootSystem, InvalidTypesRejected) {
  EXPECT_THROW(parse_type("E9"), std::invalid_argument);
  EXPECT_THROW(parse_type("F5"), std::invalid_argument);
  EXPECT_THROW(parse_type("2B3"), std::invalid_argument);
  EXPECT_THROW(parse_type("3D5"), std::invalid_argument);
  EXPECT_THROW(parse_type("2G3"), std::invalid_argument);
  EXPECT_THROW(parse_type("D3"), std::invalid_argument);
}

TEST(RootSystem, VeryTwistedRootAutomorphismIsARootBijection) {
  for (const char* name : {"2B2", "2G2", "2F4"}) {
    RootSystem rs(parse_type(name));
    std::set<Root> images;
    for (const Root& r : rs.roots()) {
      Root img = rs.phi_root(r);
      EXPECT_TRUE(rs.is_root(img)) << name;
      images.insert(img);
    }
    EXPECT_EQ(images.size(), rs.roots().size()) << name;
    // phi swaps long and short
    Root alpha1(rs.rank(), 0);
    alpha1[0] = 1;
    EXPECT_NE(rs.is_long_root(alpha1), rs.is_long_root(rs.phi_root(alpha1))) << name;
  }
}

TEST(RootSystem, GraphTwistRootAutomorphismPreservesLengths) {
  RootSystem rs(parse_type("2E6"));
  for (const Root& r : rs.roots()) EXPECT_TRUE(rs.is_root(rs.phi_root(r)));
}
