// Weight filtrations, orbit dimensions, parity and character support;
// the bundled exceptional tables against the generated ones.

#include <gtest/gtest.h>

#include "coxblock/balacarter.hpp"
#include "coxblock/exceptional.hpp"
#include "coxblock/labels.hpp"
#include "coxblock/lemma32.hpp"

using namespace coxblock;

TEST(Weighted, WeightsOutOfRangeRejected) {
  EXPECT_THROW(WeightedDynkinDiagram({0, 3}), std::invalid_argument);
}

TEST(Weighted, RootWeightSets) {
  RootSystem a2(parse_type("A2"));
  auto sets = root_weight_sets(a2, WeightedDynkinDiagram({2, 2}));
  EXPECT_EQ(sets.count_eq(2), 2u);
  EXPECT_EQ(sets.count_eq(4), 1u);
  EXPECT_EQ(sets.at_least(2).size(), 3u);

  RootSystem a3(parse_type("A3"));
  auto s3 = root_weight_sets(a3, WeightedDynkinDiagram({2, 0, 2}));
  EXPECT_EQ(s3.count_eq(0), 1u);
  EXPECT_EQ(s3.count_eq(2), 4u);
  EXPECT_EQ(s3.count_eq(4), 1u);

  RootSystem e6(parse_type("E6"));
  auto s6 = root_weight_sets(e6, WeightedDynkinDiagram({0, 0, 0, 2, 0, 0}));
  EXPECT_EQ(s6.count_eq(0), 7u);  // zero-weight part spans A2+A2+A1
}

TEST(Weighted, OrbitDimensions) {
  OrbitTables tables;
  // regular orbit: dimension |Phi|
  RootSystem a2(parse_type("A2"));
  EXPECT_EQ(orbit_dimension(a2, WeightedDynkinDiagram({2, 2}), tables), 6);
  RootSystem g2(parse_type("G2"));
  EXPECT_EQ(orbit_dimension(g2, WeightedDynkinDiagram({2, 2}), tables), 12);
  // zero orbit
  EXPECT_EQ(orbit_dimension(a2, WeightedDynkinDiagram({0, 0}), tables), 0);

  RootSystem a3(parse_type("A3"));
  EXPECT_EQ(orbit_dimension(a3, WeightedDynkinDiagram({2, 0, 2}), tables), 10);

  RootSystem e6(parse_type("E6"));
  EXPECT_EQ(orbit_dimension(e6, WeightedDynkinDiagram({0, 0, 0, 2, 0, 0}), tables), 58);

  // type A cross-check: dim = (n+1)^2 - sum of squared dual parts
  EXPECT_EQ(orbit_dimension(a3, WeightedDynkinDiagram(classical_diagram(
                                    Family::A, 3, Partition{3, 1})), tables),
            16 - (4 + 1 + 1));

  EXPECT_THROW(orbit_dimension(a3, WeightedDynkinDiagram({2, 1, 0}), tables),
               std::invalid_argument);
}

TEST(Weighted, KawanakaParity) {
  RootSystem a5(parse_type("A5"));
  auto rep = kawanaka_parity(a5, WeightedDynkinDiagram({1, 1, 0, 1, 1}));
  EXPECT_TRUE(rep.even);

  RootSystem a2(parse_type("A2"));
  EXPECT_EQ(kawanaka_parity(a2, WeightedDynkinDiagram({2, 2})).dim_g1, 0);
}

TEST(Weighted, ParityAcrossAllClassicalLabelsUpToRankEight) {
  struct Case { Family f; int lo; };
  for (Case c : {Case{Family::A, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 4}}) {
    for (int n = c.lo; n <= 8; ++n) {
      RootSystem rs(CartanType{c.f, n, 1});
      for (const OrbitLabel& l : all_classical_labels(c.f, n)) {
        WeightedDynkinDiagram d(classical_diagram(c.f, n, l));
        EXPECT_TRUE(kawanaka_parity(rs, d).even)
            << static_cast<char>(c.f) << n << " " << label_str(l);
      }
    }
  }
}

TEST(Weighted, ParityAcrossExceptionalTables) {
  OrbitTables tables;
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    RootSystem rs(parse_type(name));
    for (const auto& orbit : tables.table(rs.type().family, rs.rank()))
      EXPECT_TRUE(kawanaka_parity(rs, WeightedDynkinDiagram(orbit.diagram)).even)
          << name << " " << orbit.name;
  }
}

TEST(Weighted, ExceptionalTableLookups) {
  OrbitTables tables;
  auto d4a1 = lookup_orbit(tables.table(Family::E, 6), "D4(a1)");
  ASSERT_TRUE(d4a1);
  EXPECT_EQ(d4a1->diagram, (std::vector<Int>{0, 0, 0, 2, 0, 0}));

  EXPECT_EQ(tables.table(Family::G, 2).size(), 5u);
  EXPECT_EQ(tables.table(Family::F, 4).size(), 16u);
  EXPECT_EQ(tables.table(Family::E, 6).size(), 21u);
  EXPECT_EQ(tables.table(Family::E, 7).size(), 45u);
  EXPECT_EQ(tables.table(Family::E, 8).size(), 70u);

  auto reg = lookup_orbit(tables.table(Family::F, 4), "regular");
  ASSERT_TRUE(reg);
  EXPECT_EQ(reg->diagram, (std::vector<Int>{2, 2, 2, 2}));
  EXPECT_FALSE(lookup_orbit(tables.table(Family::F, 4), "E9(a1)"));
}

TEST(Weighted, BundledTablesMatchGeneratedDiagramSets) {
  // independent route: every (Levi, distinguished) pair, graded element
  // solved in the coroot span and conjugated dominant
  OrbitTables tables;
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    RootSystem rs(parse_type(name));
    auto generated = generate_orbits(rs);
    const auto& bundled = tables.table(rs.type().family, rs.rank());
    EXPECT_EQ(generated.size(), bundled.size()) << name;
    for (const auto& orbit : bundled) {
      auto it = generated.find(orbit.diagram);
      ASSERT_NE(it, generated.end()) << name << " " << orbit.name;
      EXPECT_EQ(it->second.dim, orbit.dim) << name << " " << orbit.name;
    }
  }
}

TEST(Weighted, GeneratedClassicalDiagramsMatchLabelRecipes) {
  // the generator agrees with the partition recipes on small classical types
  for (const char* name : {"B4", "C4", "D4", "A4"}) {
    RootSystem rs(parse_type(name));
    auto generated = generate_orbits(rs);
    std::set<std::vector<Int>> from_labels;
    for (const OrbitLabel& l : all_classical_labels(rs.type().family, rs.rank())) {
      auto d = classical_diagram(rs.type().family, rs.rank(), l);
      from_labels.insert(d);
      // very even D labels: both fork orientations are orbits
      if (rs.type().family == Family::D) {
        std::swap(d[rs.rank() - 2], d[rs.rank() - 1]);
        from_labels.insert(d);
      }
    }
    std::set<std::vector<Int>> from_generator;
    for (const auto& [d, orbit] : generated) from_generator.insert(d);
    EXPECT_EQ(from_labels, from_generator) << name;
  }
}

TEST(Weighted, CharacterSupport) {
  RootSystem a3(parse_type("A3"));
  WeightedDynkinDiagram d({2, 0, 2});
  Root alpha{1, 0, 0}, gamma{0, 0, 1};

  auto none = character_support(a3, d, {});
  for (const auto& flag : none) EXPECT_FALSE(flag.nontrivial);

  auto some = character_support(a3, d, {alpha});
  bool saw_alpha = false, saw_gamma = false;
  for (const auto& flag : some) {
    for (const Root& r : flag.orbit) {
      if (r == alpha) { saw_alpha = true; EXPECT_TRUE(flag.nontrivial); }
      if (r == gamma) { saw_gamma = true; EXPECT_FALSE(flag.nontrivial); }
    }
  }
  EXPECT_TRUE(saw_alpha);
  EXPECT_TRUE(saw_gamma);

  // regular diagram: supporting every simple root flags every orbit
  RootSystem a2(parse_type("2A2"));
  WeightedDynkinDiagram reg({2, 2});
  auto flags = character_support(a2, reg, {Root{1, 0}, Root{0, 1}});
  for (const auto& flag : flags)
    if (flag.orbit.front() == Root{1, 0} || flag.orbit.front() == Root{0, 1})
      EXPECT_TRUE(flag.nontrivial);

  Root beta{0, 1, 0};  // weight 0 in (2,0,2)
  EXPECT_THROW(character_support(a3, d, {beta}), std::invalid_argument);
}

TEST(Weighted, LeviData) {
  RootSystem a3(parse_type("A3"));
  auto full = levi_datum(a3, {0, 1, 2});
  EXPECT_TRUE(full.radical_roots.empty());

  auto mid = levi_datum(a3, {1});
  EXPECT_EQ(mid.radical_roots.size(), 5u);
  ASSERT_EQ(mid.components.size(), 1u);
  EXPECT_EQ(mid.components[0].family, Family::A);

  RootSystem e7(parse_type("E7"));
  auto e6 = levi_datum(e7, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(e6.radical_roots.size(), 27u);
  ASSERT_EQ(e6.components.size(), 1u);
  EXPECT_EQ(e6.components[0].family, Family::E);
  EXPECT_EQ(e6.components[0].rank, 6);
}
