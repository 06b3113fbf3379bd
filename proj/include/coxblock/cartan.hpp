/*
  cartan.hpp - Cartan types with (possibly very twisted) diagram
  automorphisms, Cartan matrices and static per-type data.

  Conventions used throughout the library:
    - Bourbaki numbering of simple roots, 0-indexed in code;
    - cartan(i,j) = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i);
    - twist 1 is split; twist 2 covers 2A/2D/2E6 and the very twisted
      2B2/2G2/2F4; twist 3 is 3D4.
*/

#ifndef COXBLOCK_CARTAN_HPP
#define COXBLOCK_CARTAN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxblock/numeric.hpp"

namespace coxblock {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;
  int twist = 1;

  bool operator==(const CartanType&) const = default;

  std::string str() const {
    std::string s;
    if (twist != 1) s += std::to_string(twist);
    s += static_cast<char>(family);
    s += std::to_string(rank);
    return s;
  }
};

inline bool rank_ok(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

// Very twisted = Suzuki/Ree: the automorphism swaps root lengths.
inline bool very_twisted(const CartanType& t) {
  return t.twist == 2 && (t.family == Family::B || t.family == Family::G || t.family == Family::F);
}

inline void validate(const CartanType& t) {
  if (!rank_ok(t.family, t.rank))
    throw std::invalid_argument("invalid rank for family " + t.str());
  if (t.twist == 1) return;
  if (t.twist == 3) {
    if (t.family != Family::D || t.rank != 4)
      throw std::invalid_argument("twist 3 exists only for D4: " + t.str());
    return;
  }
  if (t.twist != 2) throw std::invalid_argument("twist must be 1, 2 or 3: " + t.str());
  switch (t.family) {
    case Family::A:
      if (t.rank < 2) throw std::invalid_argument("2A needs rank >= 2");
      return;
    case Family::D: return;
    case Family::E:
      if (t.rank != 6) throw std::invalid_argument("twist 2 in type E exists only for E6");
      return;
    case Family::B:
    case Family::C:
      if (t.rank != 2) throw std::invalid_argument("very twisted B/C is 2B2 only");
      return;
    case Family::F: return;  // 2F4
    case Family::G: return;  // 2G2
  }
}

// Parse strings like "A3", "2A5", "3D4", "2G2".
inline CartanType parse_type(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty type string");
  size_t pos = 0;
  int twist = 1;
  if (s[0] == '2' || s[0] == '3') {
    twist = s[0] - '0';
    pos = 1;
  }
  if (pos >= s.size()) throw std::invalid_argument("bad type string: " + s);
  char fam = s[pos];
  if (fam < 'A' || fam > 'G' || fam == 'a')
    throw std::invalid_argument("bad family in type string: " + s);
  int rank = 0;
  try {
    rank = std::stoi(s.substr(pos + 1));
  } catch (...) {
    throw std::invalid_argument("bad rank in type string: " + s);
  }
  CartanType t{static_cast<Family>(fam), rank, twist};
  validate(t);
  return t;
}

inline std::vector<std::vector<Int>> cartan_matrix(Family f, int n) {
  std::vector<std::vector<Int>> C(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  auto link = [&](int i, int j, Int cij, Int cji) {
    C[i][j] = cij;
    C[j][i] = cji;
  };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);  // alpha_{n-1} long, alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::E: {
      // chain 1-3-4-5-6(-7)(-8); node 2 hangs off node 4
      std::vector<int> chain{0, 2, 3, 4, 5, 6, 7};
      chain.resize(static_cast<size_t>(n) - 1);
      for (size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1], -1, -1);
      link(1, 3, -1, -1);
      break;
    }
    case Family::F:
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);  // alpha_1, alpha_2 long
      link(2, 3, -1, -1);
      break;
    case Family::G:
      link(0, 1, -3, -1);  // alpha_1 short
      break;
  }
  return C;
}

// Squared root lengths up to scale; only the long/short distinction matters.
inline std::vector<Int> simple_norms(Family f, int n) {
  switch (f) {
    case Family::B: {
      std::vector<Int> v(n, 2);
      v[n - 1] = 1;
      return v;
    }
    case Family::C: {
      std::vector<Int> v(n, 2);
      v[n - 1] = 4;
      return v;
    }
    case Family::F: return {4, 4, 2, 2};
    case Family::G: return {2, 6};
    default: return std::vector<Int>(n, 2);
  }
}

// Permutation induced by the twist on the simple nodes (identity if split).
inline std::vector<int> twist_permutation(const CartanType& t) {
  int n = t.rank;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  if (t.twist == 1) return p;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
      break;
    case Family::D:
      if (t.twist == 2) std::swap(p[n - 2], p[n - 1]);
      else {  // 3D4: alpha1 -> alpha3 -> alpha4 -> alpha1
        p[0] = 2;
        p[2] = 3;
        p[3] = 0;
      }
      break;
    case Family::E:  // 2E6
      p = {5, 1, 4, 3, 2, 0};
      break;
    case Family::B:  // 2B2
    case Family::G:  // 2G2
      p = {1, 0};
      break;
    case Family::F:  // 2F4
      p = {3, 2, 1, 0};
      break;
    default: break;
  }
  return p;
}

// Lattice map sigma of a very twisted isogeny: sigma(long) = d * (short
// partner), sigma(short) = long partner, with sigma^2 = d.  Columns are
// images of the simple roots.
inline std::vector<std::vector<Int>> very_twisted_sigma(const CartanType& t, int& d_out) {
  int n = t.rank;
  std::vector<std::vector<Int>> S(n, std::vector<Int>(n, 0));
  auto nrm = simple_norms(t.family, n);
  auto perm = twist_permutation(t);
  Int lo = *std::min_element(nrm.begin(), nrm.end());
  int d = (t.family == Family::G) ? 3 : 2;
  for (int j = 0; j < n; ++j) {
    bool is_long = nrm[j] != lo;
    S[perm[j]][j] = is_long ? d : 1;
  }
  d_out = d;
  return S;
}

// Frobenius exponent delta: F^delta is a split Frobenius.
inline int frobenius_exponent(const CartanType& t) {
  if (t.twist == 1) return 1;
  if (t.twist == 3) return 3;
  return 2;
}

// Degrees of the basic invariants of the (untwisted) Weyl group.
inline std::vector<int> weyl_degrees(Family f, int n) {
  std::vector<int> d;
  switch (f) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::G: d = {2, 6}; break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  return d;
}

// |W^F|: product of degrees when split, else the order of the fixed
// subgroup of the diagram automorphism (the folded Weyl group).
inline Int weyl_order(const CartanType& t) {
  validate(t);
  auto fact = [](Int k) {
    Int r = 1;
    for (Int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  auto hyperoct = [&](Int k) { return (Int(1) << k) * fact(k); };
  if (t.twist == 1) {
    Int o = 1;
    for (int d : weyl_degrees(t.family, t.rank)) o *= d;
    return o;
  }
  switch (t.family) {
    case Family::A: return hyperoct((t.rank + 1) / 2);
    case Family::D: return t.twist == 3 ? 12 : hyperoct(t.rank - 1);
    case Family::E: return 1152;  // folded to F4
    case Family::B:
    case Family::G: return 2;
    case Family::F: return 16;
    default: throw std::logic_error("weyl_order: unreachable");
  }
}

// Bad primes; good_prime is the complement.
inline std::vector<Int> bad_primes(Family f, int rank) {
  switch (f) {
    case Family::A: return {};
    case Family::B:
    case Family::C:
    case Family::D: return {2};
    case Family::G:
    case Family::F: return {2, 3};
    case Family::E: return rank == 8 ? std::vector<Int>{2, 3, 5} : std::vector<Int>{2, 3};
  }
  return {};
}

inline bool good_prime(const CartanType& t, Int p) {
  for (Int b : bad_primes(t.family, t.rank))
    if (p == b) return false;
  return true;
}

}  // namespace coxblock

#endif
