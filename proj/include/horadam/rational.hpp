#pragma once

// Exact rational arithmetic on GMP-backed integers. Values stay in canonical
// form: gcd(num, den) == 1, den > 0, and zero is 0/1.

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>
#include <utility>

#include "horadam/errors.hpp"

namespace horadam {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

inline Int int_pow(const Int& base, unsigned long long e) {
  Int acc = 1, sq = base;
  while (e) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e) sq *= sq;
  }
  return acc;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ += o.num_;
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator-=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ -= o.num_;
      return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    if (den_ == 1 && o.den_ == 1) return *this;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw DivisionByZero("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  // "num/den", or just "num" for integers
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  void normalize() {
    if (den_ == 0) throw DivisionByZero("Rational: zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 1) return;
    Int g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_, den_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// x^e for any integer e; negative e inverts first
inline Rational pow(const Rational& x, long long e) {
  if (e >= 0) {
    if (x.is_integer())
      return Rational(int_pow(x.numerator(), static_cast<unsigned long long>(e)));
    return Rational(int_pow(x.numerator(), static_cast<unsigned long long>(e)),
                    int_pow(x.denominator(), static_cast<unsigned long long>(e)));
  }
  if (x.is_zero()) throw DivisionByZero("Rational: 0 to a negative power");
  return Rational(int_pow(x.denominator(), static_cast<unsigned long long>(-e)),
                  int_pow(x.numerator(), static_cast<unsigned long long>(-e)));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace horadam

#include <ostream>

namespace horadam {
inline std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}
}  // namespace horadam
