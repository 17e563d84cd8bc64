#pragma once

// 2x2 matrices over Rational with exact inverse and integer powers.

#include <utility>

#include "horadam/rational.hpp"

namespace horadam {

struct Mat2 {
  Rational a, b, c, d;  // row-major [[a, b], [c, d]]

  static Mat2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

  Rational det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 inverse(const Mat2& m) {
  Rational det = m.det();
  if (det.is_zero()) throw NotInvertible("Mat2: determinant is zero");
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

// m^n by square-and-multiply; n < 0 goes through the adjugate inverse
inline Mat2 mat_pow(Mat2 m, long long n) {
  if (n < 0) {
    m = inverse(m);
    n = -n;
  }
  Mat2 acc = Mat2::identity();
  unsigned long long u = static_cast<unsigned long long>(n);
  while (u) {
    if (u & 1) acc = acc * m;
    u >>= 1;
    if (u) m = m * m;
  }
  return acc;
}

}  // namespace horadam
