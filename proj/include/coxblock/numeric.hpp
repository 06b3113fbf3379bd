/*
  numeric.hpp - exact scalars for root-lattice arithmetic: rationals,
  quadratic integers a + b*sqrt(d), dense polynomials, cyclotomics.
*/

#ifndef COXBLOCK_NUMERIC_HPP
#define COXBLOCK_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxblock {

using Int = std::int64_t;

// Reduced fraction over Int. Ranks are at most 8 and all lattice data is
// tiny, so no overflow guarding beyond the gcd reduction is needed.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d) : num_(n), den_(d) { reduce(); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

private:
  void reduce() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  Int num_, den_;
};

// Element of Q(sqrt(d)), d in {1,2,3}; d = 1 means plain rational (b unused
// but kept zero).  Used for torus orders of the Suzuki and Ree twists.
struct Quad {
  Rat a, b;
  int d = 1;

  Quad() = default;
  Quad(Int n) : a(n), b(0), d(1) {}
  Quad(Rat ra, Rat rb, int dd) : a(ra), b(rb), d(dd) {}

  static Quad sqrt_d(int dd) { return Quad(Rat(0), Rat(1), dd); }

  bool is_zero() const { return a == Rat(0) && b == Rat(0); }
  bool is_rational() const { return b == Rat(0); }

  friend int join(const Quad& x, const Quad& y) {
    if (x.d == y.d) return x.d;
    if (x.d == 1) return y.d;
    if (y.d == 1) return x.d;
    throw std::domain_error("Quad: mixing sqrt(2) and sqrt(3)");
  }
  friend Quad operator+(const Quad& x, const Quad& y) {
    return Quad(x.a + y.a, x.b + y.b, join(x, y));
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return Quad(x.a - y.a, x.b - y.b, join(x, y));
  }
  friend Quad operator*(const Quad& x, const Quad& y) {
    int dd = join(x, y);
    return Quad(x.a * y.a + x.b * y.b * Rat(dd), x.a * y.b + x.b * y.a, dd);
  }
  Quad operator-() const { return Quad(-a, -b, d); }
  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  std::string str() const {
    auto rat = [](const Rat& r) {
      std::string s = std::to_string(r.num());
      if (!r.is_integer()) s += "/" + std::to_string(r.den());
      return s;
    };
    if (b == Rat(0)) return rat(a);
    std::string root = "v" + std::to_string(d);
    std::string bs = b == Rat(1) ? root : b == Rat(-1) ? "-" + root : rat(b) + root;
    if (a == Rat(0)) return bs;
    return rat(a) + (b < Rat(0) ? "" : "+") + bs;
  }
};

// Dense polynomial, coefficients ascending.  T is Int, Rat or Quad.
template <class T>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(T v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : T(0);
  }
  const std::vector<T>& coeffs() const { return c_; }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(int(i)) + q.coeff(int(i));
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(int(i)) - q.coeff(int(i));
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const {
    std::vector<T> r = c_;
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  template <class V>
  V eval(V at) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + V(*it);
    return acc;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using ZPoly = Polynomial<Int>;
using QuadPoly = Polynomial<Quad>;

// Exact division, throwing if the remainder is nonzero.
inline ZPoly divide_exact(const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  std::vector<Int> rem(num.coeffs());
  std::vector<Int> quo(rem.size(), 0);
  int dd = den.degree();
  Int lead = den.coeff(dd);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) throw std::domain_error("divide_exact: not divisible");
    Int q = rem[k] / lead;
    quo[k - dd] = q;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= q * den.coeff(i);
  }
  for (Int v : rem)
    if (v != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return ZPoly(std::move(quo));
}

inline bool divides(const ZPoly& den, const ZPoly& num) {
  try {
    (void)divide_exact(num, den);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// n-th cyclotomic polynomial: (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline ZPoly cyclotomic(int n) {
  std::vector<Int> xn(static_cast<size_t>(n) + 1, 0);
  xn[0] = -1;
  xn[static_cast<size_t>(n)] = 1;
  ZPoly result(std::move(xn));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) result = divide_exact(result, cyclotomic(d));
  return result;
}

// gcd of polynomials over Q, returned monic-normalized over Z (content 1,
// positive leading coefficient).  Small degrees only.
inline ZPoly poly_gcd(ZPoly a, ZPoly b) {
  auto to_rat = [](const ZPoly& p) {
    std::vector<Rat> c;
    for (Int v : p.coeffs()) c.emplace_back(v);
    return Polynomial<Rat>(std::move(c));
  };
  Polynomial<Rat> x = to_rat(a), y = to_rat(b);
  while (!y.is_zero()) {
    // remainder of x by y
    std::vector<Rat> rem(x.coeffs());
    int dy = y.degree();
    Rat lead = y.coeff(dy);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dy; --k) {
      if (rem[k] == Rat(0)) continue;
      Rat q = rem[k] / lead;
      for (int i = 0; i <= dy; ++i) rem[k - dy + i] = rem[k - dy + i] - q * y.coeff(i);
    }
    Polynomial<Rat> r(std::move(rem));
    x = y;
    y = r;
  }
  // clear denominators, strip content
  Int den = 1;
  for (const Rat& v : x.coeffs()) den = std::lcm(den, v.den());
  std::vector<Int> c;
  for (const Rat& v : x.coeffs()) c.push_back(v.num() * (den / v.den()));
  Int content = 0;
  for (Int v : c) content = std::gcd(content, v < 0 ? -v : v);
  if (content > 1)
    for (Int& v : c) v /= content;
  if (!c.empty() && c.back() < 0)
    for (Int& v : c) v = -v;
  return ZPoly(std::move(c));
}

inline Int pow_mod(Int base, Int exp, Int mod) {
  base %= mod;
  if (base < 0) base += mod;
  Int acc = 1;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

// multiplicative order of a mod m (m prime in all call sites); 0 if gcd != 1
inline Int mult_order(Int a, Int m) {
  a %= m;
  if (a < 0) a += m;
  if (std::gcd(a, m) != 1) return 0;
  Int x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace coxblock

#endif
