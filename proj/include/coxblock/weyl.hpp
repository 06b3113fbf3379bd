/*
  weyl.hpp - Weyl elements as words plus lattice matrices, Coxeter
  elements of a twisted pair, characteristic polynomials, Coxeter
  numbers and torus orders.
*/

#ifndef COXBLOCK_WEYL_HPP
#define COXBLOCK_WEYL_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "coxblock/rootsystem.hpp"

namespace coxblock {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size());
  int m = static_cast<int>(b[0].size());
  int k = static_cast<int>(b.size());
  IntMatrix r(n, std::vector<Int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

// column j of the reflection matrix = coordinates of s_i(alpha_j)
inline IntMatrix reflection_matrix(const RootSystem& rs, int i) {
  int n = rs.rank();
  IntMatrix m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[i][j] -= rs.cartan(i, j);
  return m;
}

struct WeylElement {
  std::vector<int> word;  // simple reflection indices, applied right to left
  IntMatrix matrix;
};

inline WeylElement weyl_element(const RootSystem& rs, const std::vector<int>& word) {
  IntMatrix m = identity_matrix(rs.rank());
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("weyl_element: bad index");
    m = matmul(m, reflection_matrix(rs, i));
  }
  // the lattice action must permute the root set
  for (const Root& r : rs.roots()) {
    Root img(rs.rank(), 0);
    for (int a = 0; a < rs.rank(); ++a)
      for (int b = 0; b < rs.rank(); ++b) img[a] += m[a][b] * r[b];
    if (!rs.is_root(img)) throw std::logic_error("weyl_element: matrix does not permute roots");
  }
  return WeylElement{word, std::move(m)};
}

// One reflection per phi-orbit, orbit representatives in ascending order.
// Any other choice of representatives gives a conjugate element.
inline WeylElement coxeter_element(const RootSystem& rs) {
  std::vector<int> word;
  for (const auto& orbit : rs.phi_orbits()) word.push_back(orbit.front());
  return weyl_element(rs, word);
}

inline bool phi_stable(const RootSystem& rs, const std::vector<int>& I) {
  std::vector<bool> in(rs.rank(), false);
  for (int i : I) in[i] = true;
  for (int i : I)
    if (!in[rs.phi()[i]]) return false;
  return true;
}

// Subword of c retaining the reflections indexed inside I.
inline WeylElement subcoxeter_element(const RootSystem& rs, const WeylElement& c,
                                      const std::vector<int>& I) {
  if (!phi_stable(rs, I)) throw std::invalid_argument("subcoxeter_element: subset not phi-stable");
  std::vector<bool> in(rs.rank(), false);
  for (int i : I) in[i] = true;
  std::vector<int> word;
  for (int i : c.word)
    if (in[i]) word.push_back(i);
  return weyl_element(rs, word);
}

// All unions of phi-orbits; 2^r of them, ordered by orbit-set bitmask.
inline std::vector<std::vector<int>> phi_stable_subsets(const RootSystem& rs,
                                                        bool proper_only = false) {
  auto orbits = rs.phi_orbits();
  int r = static_cast<int>(orbits.size());
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (proper_only && mask == (1u << r) - 1) continue;
    std::vector<int> sub;
    for (int k = 0; k < r; ++k)
      if (mask & (1u << k)) sub.insert(sub.end(), orbits[k].begin(), orbits[k].end());
    std::sort(sub.begin(), sub.end());
    out.push_back(std::move(sub));
  }
  return out;
}

inline int matrix_order(const IntMatrix& m, int cap = 256) {
  int n = static_cast<int>(m.size());
  IntMatrix id = identity_matrix(n), p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = matmul(p, m);
  }
  throw std::logic_error("matrix_order: order exceeds cap");
}

// det over quadratic rationals of a matrix of linear polynomials, by
// Laplace expansion memoised on column subsets (rank <= 8).
inline QuadPoly det_linear_poly_matrix(const std::vector<std::vector<QuadPoly>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::optional<QuadPoly>> memo(size_t(1) << n);
  memo[0] = QuadPoly::constant(Quad(1));
  auto det = [&](auto&& self, unsigned cols) -> QuadPoly {
    if (memo[cols]) return *memo[cols];
    int row = __builtin_popcount(cols) - 1;
    QuadPoly acc;
    int sign = row % 2 == 0 ? 1 : -1;
    for (int c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      QuadPoly sub = self(self, cols & ~(1u << c));
      QuadPoly term = m[row][c] * sub;
      acc = sign > 0 ? acc + term : acc - term;
      sign = -sign;
    }
    memo[cols] = acc;
    return acc;
  };
  return det(det, (1u << n) - 1);
}

// Characteristic polynomial det(xI - M), exact over Z.
inline ZPoly char_poly(const WeylElement& w) {
  int n = static_cast<int>(w.matrix.size());
  std::vector<std::vector<QuadPoly>> m(n, std::vector<QuadPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Quad> c{Quad(-w.matrix[i][j]), Quad(i == j ? 1 : 0)};
      m[i][j] = QuadPoly(std::move(c));
    }
  QuadPoly det = det_linear_poly_matrix(m);
  std::vector<Int> coeffs;
  for (const Quad& q : det.coeffs()) {
    if (!q.is_rational() || !q.a.is_integer())
      throw std::logic_error("char_poly: non-integer coefficient");
    coeffs.push_back(q.a.num());
  }
  return ZPoly(std::move(coeffs));
}

// |det(q * (F-twist o w) - 1)| as a polynomial in q.  For graph twists the
// twist acts by the node permutation; for Suzuki/Ree types it acts by
// sigma/sqrt(d), giving Z[sqrt(d)] coefficients.  Normalised to positive
// leading coefficient.
inline QuadPoly torus_order(const RootSystem& rs, const WeylElement& w) {
  int n = rs.rank();
  const CartanType& t = rs.type();
  std::vector<std::vector<Quad>> A(n, std::vector<Quad>(n, Quad(0)));
  if (very_twisted(t)) {
    int d = 0;
    auto S = very_twisted_sigma(t, d);
    auto SM = matmul(S, w.matrix);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        // SM / sqrt(d) = SM * sqrt(d)/d
        A[i][j] = Quad(Rat(0), Rat(SM[i][j], d), d);
  } else {
    IntMatrix P(n, std::vector<Int>(n, 0));
    for (int j = 0; j < n; ++j) P[rs.phi()[j]][j] = 1;
    auto PM = matmul(P, w.matrix);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[i][j] = Quad(PM[i][j]);
  }
  std::vector<std::vector<QuadPoly>> m(n, std::vector<QuadPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Quad> c{Quad(i == j ? -1 : 0), A[i][j]};
      m[i][j] = QuadPoly(std::move(c));
    }
  QuadPoly det = det_linear_poly_matrix(m);
  Quad lead = det.coeff(det.degree());
  bool flip = lead.a < Rat(0) || (lead.a == Rat(0) && lead.b < Rat(0));
  return flip ? -det : det;
}

struct CoxeterNumber {
  int h = 0;       // order of (twist o coxeter element) on the real span
  int delta = 1;   // Frobenius exponent
  bool use_torus_order = false;  // very twisted: divisibility goes through torus_order
};

// h of the pair (W, F).  For split types this is the order of the Coxeter
// element; for graph twists the order of phi composed with it; for the very
// twisted types the order of sigma/sqrt(d) composed with it, with
// admissibility checks routed through torus_order.
inline CoxeterNumber coxeter_number(const CartanType& t) {
  validate(t);
  RootSystem rs(t);
  WeylElement c = coxeter_element(rs);
  CoxeterNumber out;
  out.delta = frobenius_exponent(t);
  out.use_torus_order = very_twisted(t);
  int n = t.rank;
  if (!very_twisted(t)) {
    IntMatrix P(n, std::vector<Int>(n, 0));
    for (int j = 0; j < n; ++j) P[rs.phi()[j]][j] = 1;
    out.h = matrix_order(matmul(P, c.matrix));
    return out;
  }
  int d = 0;
  auto S = very_twisted_sigma(t, d);
  auto SM = matmul(S, c.matrix);
  IntMatrix p = SM;
  for (int k = 1; k <= 64; ++k) {
    if (k % 2 == 0) {
      Int scale = 1;
      for (int e = 0; e < k / 2; ++e) scale *= d;
      bool is_scaled_id = true;
      for (int i = 0; i < n && is_scaled_id; ++i)
        for (int j = 0; j < n && is_scaled_id; ++j)
          if (p[i][j] != (i == j ? scale : 0)) is_scaled_id = false;
      if (is_scaled_id) {
        out.h = k;
        return out;
      }
    }
    p = matmul(p, SM);
  }
  throw std::logic_error("coxeter_number: order not found");
}

}  // namespace coxblock

#endif
