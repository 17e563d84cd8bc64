#pragma once

// Symbolic layer: sequence terms as exact polynomials in a, b, p, q, a small
// fraction field over MPoly for identities that divide, and a quadratic
// extension by the formal root d with d^2 = p^2 - 4q. Together these decide
// identities by expansion at fixed indices, independent of any numeric sweep.

#include <string>
#include <utility>

#include "horadam/mpoly.hpp"
#include "horadam/params.hpp"

namespace horadam {

inline constexpr long long kSymIndexBound = 16;

// The identity-proof context needs compound indices past the public default:
// the de Moivre statement at n = 6, k = 4 touches the term at n*k + 1 = 25.
inline constexpr long long kSymProofBound = 32;

// term of the chosen sequence at index n as a q-cleared polynomial;
// memoized internally, |n| beyond the bound is a usage error
QCleared sym_term(SeqKind kind, long long n, long long bound = kSymIndexBound);

// w and h rows for n = 0..maxn, one `k[n] = poly` line each, w block first
std::string sym_table(long long maxn, long long bound = kSymIndexBound);

// Table-style rendering: pure lex order with b > a > p > q, leading term
// first, so each row reads as its b-group then its a-group in falling powers
// of p. This is the ordering sym_table lines and the golden table use;
// MPoly::to_string itself stays graded-lex.
std::string table_rendering(const MPoly& poly);

// Quotient of two MPolys. Not fully reduced (no polynomial gcd); equality is
// by cross-multiplication, which is all the identity checker needs. The
// normalization below keeps denominators sign-fixed and strips shared integer
// and monomial content so printed forms stay small.
class SymFrac {
 public:
  SymFrac() : num_(), den_(1) {}
  SymFrac(int c) : num_(c), den_(1) {}
  SymFrac(Int c) : num_(std::move(c)), den_(1) {}
  SymFrac(MPoly n) : num_(std::move(n)), den_(1) {}
  SymFrac(const QCleared& qc) : num_(qc.poly), den_(MPoly::q().pow(static_cast<unsigned long long>(qc.shift))) {}
  SymFrac(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero("SymFrac: zero denominator");
    normalize();
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SymFrac operator-() const {
    SymFrac r = *this;
    r.num_ = -r.num_;
    return r;
  }

  SymFrac& operator+=(const SymFrac& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  SymFrac& operator-=(const SymFrac& o) { return *this += -o; }
  SymFrac& operator*=(const SymFrac& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  SymFrac& operator/=(const SymFrac& o) {
    if (o.num_.is_zero()) throw DivisionByZero("SymFrac: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend SymFrac operator+(SymFrac x, const SymFrac& y) { return x += y; }
  friend SymFrac operator-(SymFrac x, const SymFrac& y) { return x -= y; }
  friend SymFrac operator*(SymFrac x, const SymFrac& y) { return x *= y; }
  friend SymFrac operator/(SymFrac x, const SymFrac& y) { return x /= y; }

  // cross-multiplied: exact equality of the represented rational functions
  friend bool operator==(const SymFrac& x, const SymFrac& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  // numerator of x - y with denominators cleared; zero iff x == y
  friend MPoly cleared_difference(const SymFrac& x, const SymFrac& y) {
    return x.num_ * y.den_ - y.num_ * x.den_;
  }

  std::string to_string() const {
    if (den_ == MPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MPoly(1);
      return;
    }
    if (den_.leading_sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_.content(), den_.content());
    if (g > 1) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    Expo mn = num_.min_exponents(), md = den_.min_exponents();
    Expo common;
    bool any = false;
    for (int i = 0; i < 4; ++i) {
      common.e[i] = mn.e[i] < md.e[i] ? mn.e[i] : md.e[i];
      any = any || common.e[i] > 0;
    }
    if (any) {
      num_ = num_.shift_down(common);
      den_ = den_.shift_down(common);
    }
  }

  MPoly num_, den_;
};

inline SymFrac pow(const SymFrac& x, long long e) {
  if (e < 0) {
    if (x.is_zero()) throw DivisionByZero("pow: zero to a negative power");
    return pow(SymFrac(x.den(), x.num()), -e);
  }
  SymFrac acc(1), sq = x;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= sq;
    k >>= 1;
    if (k) sq *= sq;
  }
  return acc;
}

// Element base + coef*d of the quadratic extension with d^2 = p^2 - 4q.
class SymQuad {
 public:
  SymQuad() = default;
  SymQuad(SymFrac base, SymFrac coef) : base_(std::move(base)), coef_(std::move(coef)) {}
  static SymQuad root() { return SymQuad(SymFrac(0), SymFrac(1)); }
  static MPoly disc() { return MPoly::p() * MPoly::p() - MPoly(4) * MPoly::q(); }

  const SymFrac& base() const { return base_; }
  const SymFrac& coef() const { return coef_; }
  bool is_zero() const { return base_.is_zero() && coef_.is_zero(); }

  SymQuad conj() const { return SymQuad(base_, -coef_); }
  SymFrac norm() const { return base_ * base_ - SymFrac(disc()) * coef_ * coef_; }

  SymQuad operator-() const { return SymQuad(-base_, -coef_); }

  SymQuad& operator+=(const SymQuad& o) {
    base_ += o.base_;
    coef_ += o.coef_;
    return *this;
  }
  SymQuad& operator-=(const SymQuad& o) {
    base_ -= o.base_;
    coef_ -= o.coef_;
    return *this;
  }
  SymQuad& operator*=(const SymQuad& o) {
    SymFrac nb = base_ * o.base_ + SymFrac(disc()) * coef_ * o.coef_;
    SymFrac nc = base_ * o.coef_ + coef_ * o.base_;
    base_ = std::move(nb);
    coef_ = std::move(nc);
    return *this;
  }

  friend SymQuad operator+(SymQuad x, const SymQuad& y) { return x += y; }
  friend SymQuad operator-(SymQuad x, const SymQuad& y) { return x -= y; }
  friend SymQuad operator*(SymQuad x, const SymQuad& y) { return x *= y; }

  friend bool operator==(const SymQuad& x, const SymQuad& y) {
    return x.base_ == y.base_ && x.coef_ == y.coef_;
  }

  std::string to_string() const {
    return "(" + base_.to_string() + ") + (" + coef_.to_string() + ")*d";
  }

 private:
  SymFrac base_, coef_;
};

inline SymQuad quad_inv(const SymQuad& x) {
  SymFrac n = x.norm();
  if (n.is_zero()) throw NotInvertible("quad_inv: zero norm, not a unit");
  SymQuad c = x.conj();
  return SymQuad(c.base() / n, c.coef() / n);
}

inline SymQuad quad_pow(const SymQuad& x, long long e) {
  if (e < 0) return quad_pow(quad_inv(x), -e);
  SymQuad acc(SymFrac(1), SymFrac(0)), sq = x;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= sq;
    k >>= 1;
    if (k) sq *= sq;
  }
  return acc;
}

}  // namespace horadam
