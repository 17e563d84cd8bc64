#pragma once

// Elements base + coef*w of Q[w]/(w^2 - D). The discriminant D rides along
// with every element and operands must agree on it. For square D the ring
// has zero divisors, so nonzero elements can still fail to invert.

#include <ostream>
#include <string>
#include <utility>

#include "horadam/rational.hpp"

namespace horadam {

class QuadElem {
 public:
  QuadElem(Rational base, Rational coef, Int disc)
      : base_(std::move(base)), coef_(std::move(coef)), disc_(std::move(disc)) {}

  static QuadElem scalar(Rational r, Int disc) {
    return QuadElem(std::move(r), Rational(0), std::move(disc));
  }
  // the generator w itself
  static QuadElem root(Int disc) {
    return QuadElem(Rational(0), Rational(1), std::move(disc));
  }

  const Rational& base() const { return base_; }
  const Rational& coef() const { return coef_; }
  const Int& disc() const { return disc_; }
  bool is_rational() const { return coef_.is_zero(); }
  bool is_zero() const { return base_.is_zero() && coef_.is_zero(); }

  QuadElem conj() const { return QuadElem(base_, -coef_, disc_); }
  // multiplicative norm base^2 - D*coef^2; zero exactly for non-units
  Rational norm() const { return base_ * base_ - Rational(disc_) * coef_ * coef_; }

  QuadElem operator-() const { return QuadElem(-base_, -coef_, disc_); }

  QuadElem& operator+=(const QuadElem& o) {
    check_disc(o);
    base_ += o.base_;
    coef_ += o.coef_;
    return *this;
  }
  QuadElem& operator-=(const QuadElem& o) {
    check_disc(o);
    base_ -= o.base_;
    coef_ -= o.coef_;
    return *this;
  }
  QuadElem& operator*=(const QuadElem& o) {
    check_disc(o);
    Rational nb = base_ * o.base_ + Rational(disc_) * coef_ * o.coef_;
    coef_ = base_ * o.coef_ + coef_ * o.base_;
    base_ = std::move(nb);
    return *this;
  }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

  std::string to_string() const {
    if (coef_.is_zero()) return base_.to_string();
    std::string w = coef_ == Rational(1)    ? "w"
                    : coef_ == Rational(-1) ? "-w"
                                            : coef_.to_string() + "*w";
    if (base_.is_zero()) return w;
    if (coef_.sign() > 0) return base_.to_string() + " + " + w;
    return base_.to_string() + " - " + (-coef_ == Rational(1) ? std::string("w")
                                                              : (-coef_).to_string() + "*w");
  }

 private:
  void check_disc(const QuadElem& o) const {
    if (disc_ != o.disc_)
      throw UsageError("QuadElem: discriminant mismatch (" + disc_.str() + " vs " +
                       o.disc_.str() + ")");
  }

  Rational base_, coef_;
  Int disc_;
};

inline QuadElem quad_mul(QuadElem x, const QuadElem& y) { return x *= y; }

inline QuadElem quad_inv(const QuadElem& x) {
  Rational n = x.norm();
  if (n.is_zero()) throw NotInvertible("quad_inv: zero norm, not a unit");
  QuadElem c = x.conj();
  return QuadElem(c.base() / n, c.coef() / n, x.disc());
}

// x^e by square-and-multiply; negative e inverts first
inline QuadElem quad_pow(QuadElem x, long long e) {
  if (e < 0) {
    x = quad_inv(x);
    e = -e;
  }
  QuadElem acc = QuadElem::scalar(Rational(1), x.disc());
  unsigned long long u = static_cast<unsigned long long>(e);
  while (u) {
    if (u & 1) acc *= x;
    u >>= 1;
    if (u) x *= x;
  }
  return acc;
}

inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
  return os << x.to_string();
}

}  // namespace horadam
