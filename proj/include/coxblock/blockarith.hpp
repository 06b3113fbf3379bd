/*
  blockarith.hpp - Coxeter-case arithmetic: admissibility of a prime ell
  for a type and prime power q, eigenvalue classes modulo ell, and the
  hypothesis profile of each type.
*/

#ifndef COXBLOCK_BLOCKARITH_HPP
#define COXBLOCK_BLOCKARITH_HPP

#include <string>
#include <vector>

#include "coxblock/weyl.hpp"

namespace coxblock {

struct CoxeterCaseParams {
  CartanType type;
  // For very twisted types q is irrational and q_power holds the honest
  // prime power Q = q^2; otherwise q_power = q.
  Int q_power = 0;
  Int ell = 0;
};

struct AdmissibilityReport {
  bool ell_prime = false;
  bool ell_not_p = false;           // ell differs from the defining characteristic
  bool ell_prime_to_weyl = false;   // ell does not divide |W^F|
  bool divisibility = false;        // ell | Phi_h(q), resp. ell | |T_c| for Suzuki/Ree
  bool order_ok = false;            // q has multiplicative order h in the residue field
  Int weyl_order = 0;
  Int divisor_value = 0;            // Phi_h(q) or the torus order evaluated at q
  Int h = 0, delta = 1;
  std::string divisor_desc;

  bool admissible() const {
    return ell_prime && ell_not_p && ell_prime_to_weyl && divisibility && order_ok;
  }
};

namespace detail {

// Evaluate a Z[sqrt(d)] polynomial at q = sqrt(Q), Q = d^(2m+1).  Integer
// exactly when even-degree coefficients are rational and odd-degree ones
// pure multiples of sqrt(d), which holds for the torus orders here.
inline Int eval_very_twisted(const QuadPoly& p, Int Q, int d) {
  // sqrt(d) * q = d^(m+1)
  Int m = 0, pw = d;
  while (pw != Q) {
    pw *= d * d;
    ++m;
    if (pw > Q) throw std::invalid_argument("q^2 must be an odd power of " + std::to_string(d));
  }
  Int sqrt_d_q = 1;
  for (Int t = 0; t <= m; ++t) sqrt_d_q *= d;
  Int value = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    Quad c = p.coeff(k);
    Int qk;  // q^k for even k, sqrt(d)*q^k / (sqrt(d) q) handled below
    if (k % 2 == 0) {
      if (!(c.b == Rat(0)) || !c.a.is_integer())
        throw std::logic_error("torus order: unexpected even coefficient");
      qk = 1;
      for (int t = 0; t < k / 2; ++t) qk *= Q;
      value += c.a.num() * qk;
    } else {
      if (!(c.a == Rat(0)) || !c.b.is_integer())
        throw std::logic_error("torus order: unexpected odd coefficient");
      // c.b * sqrt(d) * q^k = c.b * (sqrt(d) q) * Q^((k-1)/2)
      qk = sqrt_d_q;
      for (int t = 0; t < (k - 1) / 2; ++t) qk *= Q;
      value += c.b.num() * qk;
    }
  }
  return value;
}

inline Int characteristic_of(Int q_power) {
  for (Int p = 2; p * p <= q_power; ++p)
    if (q_power % p == 0) return p;
  return q_power;
}

}  // namespace detail

inline AdmissibilityReport coxeter_case_check(const CoxeterCaseParams& params) {
  validate(params.type);
  AdmissibilityReport rep;
  CoxeterNumber cn = coxeter_number(params.type);
  rep.h = cn.h;
  rep.delta = cn.delta;
  rep.weyl_order = weyl_order(params.type);
  rep.ell_prime = is_prime(params.ell);
  Int p = detail::characteristic_of(params.q_power);
  rep.ell_not_p = params.ell != p;
  rep.ell_prime_to_weyl = rep.weyl_order % params.ell != 0;

  RootSystem rs(params.type);
  WeylElement c = coxeter_element(rs);
  if (cn.use_torus_order) {
    int d = params.type.family == Family::G ? 3 : 2;
    rep.divisor_value = detail::eval_very_twisted(torus_order(rs, c), params.q_power, d);
    rep.divisor_desc = "|T_c|(q), q^2 = " + std::to_string(params.q_power);
  } else {
    rep.divisor_value = cyclotomic(cn.h).eval<Int>(params.q_power);
    rep.divisor_desc = "Phi_" + std::to_string(cn.h) + "(" + std::to_string(params.q_power) + ")";
  }
  rep.divisibility = params.ell > 1 && rep.divisor_value % params.ell == 0;

  // "the class of q in the residue field is a primitive h-th root of unity":
  // for integral q this is ord(q) = h; over q = sqrt(Q) it is equivalent to
  // ord(Q) = h/2.
  if (rep.ell_prime && rep.ell_not_p) {
    Int want = cn.use_torus_order ? cn.h / 2 : cn.h;
    rep.order_ok = mult_order(params.q_power % params.ell, params.ell) == want;
  }
  return rep;
}

struct EigenvalueClass {
  Int j = 0;
  Int residue = 0;  // q^(j*delta) mod ell
};

// The h/delta residue classes q^(j*delta) mod ell, pairwise distinct in any
// admissible Coxeter case.
inline std::vector<EigenvalueClass> eigenvalue_classes(const CoxeterCaseParams& params) {
  AdmissibilityReport rep = coxeter_case_check(params);
  if (!rep.admissible())
    throw std::invalid_argument("eigenvalue_classes: parameters fail the Coxeter-case check");
  CoxeterNumber cn = coxeter_number(params.type);
  // q^delta is integral in every case: q_power = q^2 for the very twisted
  // types (delta = 2), q otherwise.
  Int q_delta = params.q_power;
  if (!cn.use_torus_order && cn.delta > 1) {
    q_delta = 1;
    for (int t = 0; t < cn.delta; ++t) q_delta *= params.q_power;
  }
  std::vector<EigenvalueClass> out;
  for (Int j = 0; j < cn.h / cn.delta; ++j)
    out.push_back({j, pow_mod(q_delta, j, params.ell)});
  return out;
}

enum class TheoremHypothesis {
  NoRestriction,      // A, 2A, B2, 2B2, D4, 2D, 3D4, G2, 2G2
  GoodPrime,          // B, C, D, E6, 2E6, F4
  GoodPrimePlusHLM,   // E7, E8
  NotCovered,         // 2F4
};

inline TheoremHypothesis theorem_hypotheses(const CartanType& t) {
  validate(t);
  switch (t.family) {
    case Family::A: return TheoremHypothesis::NoRestriction;
    case Family::G: return TheoremHypothesis::NoRestriction;
    case Family::B:
    case Family::C:
      if (t.rank == 2) return TheoremHypothesis::NoRestriction;  // includes 2B2
      return TheoremHypothesis::GoodPrime;
    case Family::D:
      if (t.twist != 1 || t.rank == 4) return TheoremHypothesis::NoRestriction;
      return TheoremHypothesis::GoodPrime;
    case Family::E:
      if (t.rank == 6) return TheoremHypothesis::GoodPrime;
      return TheoremHypothesis::GoodPrimePlusHLM;
    case Family::F:
      if (t.twist == 2) return TheoremHypothesis::NotCovered;  // Ree groups 2F4
      return TheoremHypothesis::GoodPrime;
  }
  throw std::logic_error("theorem_hypotheses: unreachable");
}

inline std::string hypothesis_str(TheoremHypothesis h) {
  switch (h) {
    case TheoremHypothesis::NoRestriction: return "no restriction on p";
    case TheoremHypothesis::GoodPrime: return "p good";
    case TheoremHypothesis::GoodPrimePlusHLM: return "p good and the tree-shape conjecture";
    case TheoremHypothesis::NotCovered: return "not covered";
  }
  return "?";
}

}  // namespace coxblock

#endif
