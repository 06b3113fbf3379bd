// Coxeter-case arithmetic: Weyl orders, admissibility, eigenvalue classes,
// good primes and the hypothesis table.

#include <gtest/gtest.h>

#include "coxblock/blockarith.hpp"

using namespace coxblock;

namespace {

// brute-force |W^F|: enumerate W as lattice matrices, count those
// commuting with the twist (sigma for the very twisted types)
Int brute_fixed_weyl_order(const CartanType& t) {
  RootSystem rs(t);
  int n = rs.rank();
  std::set<IntMatrix> group{identity_matrix(n)};
  std::vector<IntMatrix> frontier{identity_matrix(n)};
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(reflection_matrix(rs, i));
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        IntMatrix p = matmul(m, g);
        if (group.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  IntMatrix twist;
  if (very_twisted(t)) {
    int d = 0;
    twist = very_twisted_sigma(t, d);
  } else {
    twist = IntMatrix(n, std::vector<Int>(n, 0));
    for (int j = 0; j < n; ++j) twist[rs.phi()[j]][j] = 1;
  }
  Int fixed = 0;
  for (const auto& m : group)
    if (matmul(twist, m) == matmul(m, twist)) ++fixed;
  return fixed;
}

}  // namespace

TEST(BlockArith, WeylOrders) {
  EXPECT_EQ(weyl_order(parse_type("A2")), 6);
  EXPECT_EQ(weyl_order(parse_type("F4")), 1152);
  EXPECT_EQ(weyl_order(parse_type("E8")), 696729600);
  EXPECT_EQ(weyl_order(parse_type("2A2")), 2);
  EXPECT_EQ(weyl_order(parse_type("2G2")), 2);
}

TEST(BlockArith, WeylOrdersBruteForcedUpToRankFour) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4",
                           "G2", "F4", "2A2", "2A3", "2A4", "2D4", "3D4", "2B2", "2G2",
                           "2F4"}) {
    CartanType t = parse_type(name);
    EXPECT_EQ(weyl_order(t), brute_fixed_weyl_order(t)) << name;
  }
}

TEST(BlockArith, F4FixtureAdmissible) {
  AdmissibilityReport rep = coxeter_case_check({parse_type("F4"), 2, 13});
  EXPECT_TRUE(rep.admissible());
  EXPECT_EQ(rep.divisor_value, 13);  // Phi_12(2)
  EXPECT_EQ(rep.h, 12);
  EXPECT_TRUE(rep.order_ok);  // ord_13(2) = 12

  // ell must not divide Phi_d(q) for proper divisors d of h
  for (int d : {1, 2, 3, 4, 6})
    EXPECT_NE(cyclotomic(d).eval<Int>(2) % 13, 0) << d;
  // and Phi_h(q) divides q^h - 1
  Int qh = 1;
  for (int k = 0; k < 12; ++k) qh *= 2;
  EXPECT_EQ((qh - 1) % rep.divisor_value, 0);
}

TEST(BlockArith, TwoG2FixtureAdmissible) {
  AdmissibilityReport rep = coxeter_case_check({parse_type("2G2"), 27, 19});
  EXPECT_TRUE(rep.admissible());
  EXPECT_EQ(rep.divisor_value, 19);  // 27 - 9 + 1
  EXPECT_EQ(rep.h, 12);
  EXPECT_EQ(rep.delta, 2);
}

TEST(BlockArith, TwoF4Fixture) {
  // |T_c| = q^4 - sqrt2 q^3 + q^2 - sqrt2 q + 1 = 37 at q^2 = 8
  AdmissibilityReport rep = coxeter_case_check({parse_type("2F4"), 8, 37});
  EXPECT_EQ(rep.divisor_value, 37);
  EXPECT_TRUE(rep.admissible());
}

TEST(BlockArith, InadmissibleCases) {
  // ell divides |W^F|
  EXPECT_FALSE(coxeter_case_check({parse_type("A1"), 3, 2}).admissible());
  EXPECT_FALSE(coxeter_case_check({parse_type("A1"), 3, 2}).ell_prime_to_weyl);
  // ell equal to the defining characteristic
  EXPECT_FALSE(coxeter_case_check({parse_type("F4"), 2, 2}).ell_not_p);
  // divisibility failure
  EXPECT_FALSE(coxeter_case_check({parse_type("F4"), 2, 7}).divisibility);
  // 2A2 with q = 2: Phi_6(2) = 3 but ord_3(4) = 1, not h/delta
  AdmissibilityReport rep = coxeter_case_check({parse_type("2A2"), 2, 3});
  EXPECT_TRUE(rep.divisibility);
  EXPECT_FALSE(rep.order_ok);
  EXPECT_FALSE(rep.admissible());
}

TEST(BlockArith, EigenvalueClasses) {
  auto classes = eigenvalue_classes({parse_type("F4"), 2, 13});
  ASSERT_EQ(classes.size(), 12u);
  std::vector<Int> residues;
  for (const auto& c : classes) residues.push_back(c.residue);
  EXPECT_EQ(residues, (std::vector<Int>{1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7}));
  EXPECT_EQ(classes[0].residue, 1);
  std::set<Int> distinct(residues.begin(), residues.end());
  EXPECT_EQ(distinct.size(), residues.size());

  auto twisted = eigenvalue_classes({parse_type("2G2"), 27, 19});
  ASSERT_EQ(twisted.size(), 6u);
  std::set<Int> tw;
  for (const auto& c : twisted) tw.insert(c.residue);
  EXPECT_EQ(tw.size(), 6u);

  EXPECT_THROW(eigenvalue_classes({parse_type("A1"), 3, 2}), std::invalid_argument);
}

TEST(BlockArith, GoodPrimes) {
  EXPECT_TRUE(good_prime(parse_type("A5"), 2));
  EXPECT_FALSE(good_prime(parse_type("F4"), 3));
  EXPECT_TRUE(good_prime(parse_type("E8"), 7));
  EXPECT_FALSE(good_prime(parse_type("E8"), 5));
  EXPECT_FALSE(good_prime(parse_type("B3"), 2));
  EXPECT_TRUE(good_prime(parse_type("E6"), 5));
}

TEST(BlockArith, TheoremHypothesesGolden) {
  using TH = TheoremHypothesis;
  struct Case { const char* type; TH expect; };
  for (Case c : {Case{"A5", TH::NoRestriction}, {"2A6", TH::NoRestriction},
                 {"B2", TH::NoRestriction}, {"C2", TH::NoRestriction},
                 {"2B2", TH::NoRestriction}, {"D4", TH::NoRestriction},
                 {"2D5", TH::NoRestriction}, {"3D4", TH::NoRestriction},
                 {"G2", TH::NoRestriction}, {"2G2", TH::NoRestriction},
                 {"B3", TH::GoodPrime}, {"C4", TH::GoodPrime}, {"D5", TH::GoodPrime},
                 {"E6", TH::GoodPrime}, {"2E6", TH::GoodPrime}, {"F4", TH::GoodPrime},
                 {"E7", TH::GoodPrimePlusHLM}, {"E8", TH::GoodPrimePlusHLM},
                 {"2F4", TH::NotCovered}}) {
    EXPECT_EQ(theorem_hypotheses(parse_type(c.type)), c.expect) << c.type;
  }
}

TEST(BlockArith, AdmissiblePrimesScan) {
  // the primes dividing Phi_12(q) for small q, filtered by admissibility
  std::vector<Int> admissible;
  for (Int ell = 2; ell <= 200; ++ell) {
    if (!is_prime(ell)) continue;
    if (coxeter_case_check({parse_type("F4"), 3, ell}).admissible()) admissible.push_back(ell);
  }
  // Phi_12(3) = 73
  EXPECT_EQ(admissible, (std::vector<Int>{73}));
}
