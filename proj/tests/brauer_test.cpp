// Brauer trees: construction from series data, planar orders, projective
// characters, serialization, root-of-unity binding, and randomized
// structural properties.

#include <gtest/gtest.h>

#include <random>

#include "coxblock/brauer_io.hpp"

using namespace coxblock;

namespace {

HCSeriesDatum make_series(Int order, Int exp, Int m, std::vector<std::string> names) {
  HCSeriesDatum s;
  s.zeta = {order, exp};
  s.m = m;
  s.M = m + static_cast<Int>(names.size()) - 1;
  Int idx = m;
  for (auto& n : names) s.characters.push_back({n, idx++});
  return s;
}

}  // namespace

TEST(Brauer, SingleEdgeTree) {
  BrauerTree t = build_hlm_tree({make_series(1, 0, 0, {"chi0"})}, 1);
  EXPECT_EQ(t.nodes.size(), 2u);
  EXPECT_EQ(t.edges.size(), 1u);
  auto pc = projective_characters(t);
  ASSERT_EQ(pc.size(), 1u);
  EXPECT_TRUE(pc.begin()->second.has_exceptional);
  EXPECT_EQ(pc.begin()->second.constituents, (std::vector<std::string>{"chi0"}));
}

TEST(Brauer, BuildRejectsBadInput) {
  EXPECT_THROW(build_hlm_tree({}, 1), std::invalid_argument);
  // duplicate index across series
  EXPECT_THROW(build_hlm_tree({make_series(1, 0, 0, {"a", "b"}),
                               make_series(2, 6, 1, {"c"})},
                              1),
               std::invalid_argument);
  HCSeriesDatum bad = make_series(1, 0, 0, {"a", "b"});
  bad.M = 5;
  EXPECT_THROW(build_hlm_tree({bad}, 1), std::invalid_argument);
}

TEST(Brauer, TwoG2FixtureShape) {
  SeriesFixture fx = load_series_fixture(parse_type("2G2"));
  BrauerTree t = build_hlm_tree(fx.series, fx.ref_multiplicity);
  EXPECT_EQ(t.nodes.size(), 7u);
  EXPECT_EQ(t.edges.size(), 6u);
  EXPECT_EQ(t.multiplicity, 3);
  auto nbs = t.neighbors(BrauerTree::exceptional_name);
  EXPECT_EQ(nbs.size(), 5u);
  std::set<std::string> expect{"St", "²G2[ξ]", "²G2[ξ̄]", "²G2[i]", "²G2[-i]"};
  EXPECT_EQ(std::set<std::string>(nbs.begin(), nbs.end()), expect);
  // St - 1 path
  auto st_nbs = t.neighbors("St");
  EXPECT_EQ(std::set<std::string>(st_nbs.begin(), st_nbs.end()),
            (std::set<std::string>{BrauerTree::exceptional_name, "1"}));
}

TEST(Brauer, F4FixtureShape) {
  SeriesFixture fx = load_series_fixture(parse_type("F4"));
  BrauerTree t = build_hlm_tree(fx.series, fx.ref_multiplicity);
  EXPECT_EQ(t.nodes.size(), 13u);
  EXPECT_EQ(t.edges.size(), 12u);
  EXPECT_EQ(t.multiplicity, 1);
  auto nbs = t.neighbors(BrauerTree::exceptional_name);
  EXPECT_EQ(nbs.size(), 6u);
  std::set<std::string> expect{"St", "B2,ε", "F4[i]", "F4[-i]", "F4[θ]", "F4[θ²]"};
  EXPECT_EQ(std::set<std::string>(nbs.begin(), nbs.end()), expect);
  // the principal path runs St - φ4,13 - φ''6,6 - φ4,1 - 1
  auto nb = [&](const std::string& n) {
    auto v = t.neighbors(n);
    return std::set<std::string>(v.begin(), v.end());
  };
  EXPECT_EQ(nb("φ4,13"), (std::set<std::string>{"St", "φ''6,6"}));
  EXPECT_EQ(nb("φ4,1"), (std::set<std::string>{"φ''6,6", "1"}));
  EXPECT_EQ(nb("B2,r"), (std::set<std::string>{"B2,ε", "B2,1"}));
}

TEST(Brauer, PlanarOrderValidation) {
  SeriesFixture fx = load_series_fixture(parse_type("2G2"));
  BrauerTree t = build_hlm_tree(fx.series, fx.ref_multiplicity);
  auto orders = fixture_planar_orders(t, fx);
  BrauerTree planar = attach_planar_order(t, orders);
  const auto& exc = planar.planar.at(BrauerTree::exceptional_name);
  EXPECT_EQ(exc.size(), 5u);

  // tampered orders are rejected
  auto broken = orders;
  broken["St"] = {"e0", "e5"};  // e5 not incident to St
  EXPECT_THROW(attach_planar_order(t, broken), std::invalid_argument);
  auto missing = orders;
  missing.erase("1");
  EXPECT_THROW(attach_planar_order(t, missing), std::invalid_argument);
}

TEST(Brauer, ProjectiveCharacterHandshake) {
  // every non-exceptional character occurs deg(chi) times over all edges
  for (const char* name : {"2G2", "F4"}) {
    SeriesFixture fx = load_series_fixture(parse_type(name));
    BrauerTree t = build_hlm_tree(fx.series, fx.ref_multiplicity);
    auto pc = projective_characters(t);
    std::map<std::string, int> counts;
    int exc_count = 0;
    for (const auto& [id, p] : pc) {
      EXPECT_EQ(p.constituents.size() + (p.has_exceptional ? 1 : 0), 2u);
      if (p.has_exceptional) ++exc_count;
      for (const auto& c : p.constituents) ++counts[c];
    }
    for (const auto& [node, deg] : counts)
      EXPECT_EQ(deg, static_cast<int>(t.incident(node).size())) << node;
    EXPECT_EQ(exc_count,
              static_cast<int>(t.incident(BrauerTree::exceptional_name).size()));
  }
}

TEST(Brauer, DegreeLayout) {
  SeriesFixture f4 = load_series_fixture(parse_type("F4"));
  auto layout = degree_layout(f4.series[0], 4);
  EXPECT_EQ(layout.at("St"), 4);
  EXPECT_EQ(layout.at("1"), 8);

  SeriesFixture g2 = load_series_fixture(parse_type("2G2"));
  auto layout2 = degree_layout(g2.series[0], 1);
  EXPECT_EQ(layout2.at("St"), 1);
  EXPECT_EQ(layout2.at("1"), 2);

  // singleton series sit in the middle degree
  auto single = degree_layout(g2.series[1], 1);
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.begin()->second, 1);

  EXPECT_THROW(degree_layout(f4.series[0], 0), std::invalid_argument);
}

TEST(Brauer, JsonRoundTrip) {
  SeriesFixture fx = load_series_fixture(parse_type("2G2"));
  BrauerTree base = build_hlm_tree(fx.series, fx.ref_multiplicity);
  BrauerTree t = attach_planar_order(base, fixture_planar_orders(base, fx));
  BrauerTree back = parse_tree_json(serialize_tree_json(t));
  EXPECT_EQ(back.nodes, t.nodes);
  EXPECT_EQ(back.multiplicity, t.multiplicity);
  ASSERT_EQ(back.edges.size(), t.edges.size());
  for (size_t i = 0; i < t.edges.size(); ++i) {
    EXPECT_EQ(back.edges[i].id, t.edges[i].id);
    EXPECT_EQ(back.edges[i].u, t.edges[i].u);
    EXPECT_EQ(back.edges[i].v, t.edges[i].v);
  }
  EXPECT_EQ(back.planar, t.planar);
}

TEST(Brauer, BindRootsOfUnity) {
  // F4, q = 2, ell = 13: i = q^3 = 8 of order 4; theta = q^4 = 3 of order 3
  EXPECT_EQ(bind_root_of_unity({4, 3}, 2, 13).residue, 8);
  EXPECT_TRUE(bind_root_of_unity({4, 3}, 2, 13).bound);
  EXPECT_EQ(bind_root_of_unity({3, 4}, 2, 13).residue, 3);
  EXPECT_EQ(bind_root_of_unity({1, 0}, 2, 13).residue, 1);
  EXPECT_EQ(bind_root_of_unity({2, 6}, 2, 13).residue, 12);

  // wrong multiplicative order: (q,ell) outside the Coxeter case
  BindingResult bad = bind_root_of_unity({4, 3}, 2, 7);
  EXPECT_FALSE(bad.bound);
  EXPECT_NE(bad.reason.find("order"), std::string::npos);

  // no element of the needed order in the residue field
  BindingResult none = bind_root_of_unity({12, 1}, 2, 19);
  EXPECT_FALSE(none.bound);

  // all F4 fixture tags bind at the reference parameters
  SeriesFixture fx = load_series_fixture(parse_type("F4"));
  for (const auto& s : fx.series)
    EXPECT_TRUE(bind_root_of_unity(s.zeta, fx.ref_q_power, fx.ref_ell).bound)
        << s.characters.front().name;
}

TEST(Brauer, RandomizedTreeProperties) {
  // synthetic series data: always a tree, the exceptional node meets
  // exactly the low ends, and degrees increase strictly along each path
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    int nseries = 1 + static_cast<int>(rng() % 10);
    std::vector<HCSeriesDatum> series;
    Int next_index = 0;
    for (int s = 0; s < nseries; ++s) {
      int len = 1 + static_cast<int>(rng() % 8);
      std::vector<std::string> names;
      for (int k = 0; k < len; ++k)
        names.push_back("chi" + std::to_string(next_index + k));
      series.push_back(make_series(1 + s, s, next_index, names));
      next_index += len;
    }
    BrauerTree t = build_hlm_tree(series, 1 + rng() % 7);
    EXPECT_NO_THROW(t.check());
    EXPECT_EQ(t.edges.size() + 1, t.nodes.size());

    auto nbs = t.neighbors(BrauerTree::exceptional_name);
    std::set<std::string> low_ends;
    for (const auto& s : series) low_ends.insert(s.characters.front().name);
    EXPECT_EQ(std::set<std::string>(nbs.begin(), nbs.end()), low_ends);

    Int r = 1 + rng() % 5;
    for (const auto& s : series) {
      auto layout = degree_layout(s, r);
      for (size_t k = 0; k + 1 < s.characters.size(); ++k)
        EXPECT_LT(layout.at(s.characters[k].name), layout.at(s.characters[k + 1].name));
    }
  }
}
