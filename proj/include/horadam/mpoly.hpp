#pragma once

// Multivariate polynomials over Z in the parameter symbols a, b, p, q.
// Terms are keyed by exponent vector in graded-lex order with a > b > p > q,
// and to_string renders leading-first in that order. The term tables use a
// different, human-facing ordering; see table_rendering in oracle.hpp.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "horadam/rational.hpp"

namespace horadam {

struct Expo {
  std::array<unsigned, 4> e{0, 0, 0, 0};  // exponents of a, b, p, q

  unsigned total() const { return e[0] + e[1] + e[2] + e[3]; }
  friend bool operator==(const Expo&, const Expo&) = default;
};

// ascending graded-lex: total degree first, ties broken on a, b, p, q
// (map's last element = leading term)
struct MonomialLess {
  bool operator()(const Expo& x, const Expo& y) const {
    unsigned tx = x.total(), ty = y.total();
    if (tx != ty) return tx < ty;
    return x.e < y.e;
  }
};

class MPoly {
 public:
  using TermMap = std::map<Expo, Int, MonomialLess>;

  MPoly() = default;
  MPoly(int c) : MPoly(Int(c)) {}
  MPoly(long long c) : MPoly(Int(c)) {}
  MPoly(Int c) {
    if (c != 0) terms_[Expo{}] = std::move(c);
  }

  static MPoly var(int i) {
    MPoly m;
    Expo ex;
    ex.e[static_cast<std::size_t>(i)] = 1;
    m.terms_[ex] = 1;
    return m;
  }
  static MPoly a() { return var(0); }
  static MPoly b() { return var(1); }
  static MPoly p() { return var(2); }
  static MPoly q() { return var(3); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [_, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [ex, c] : o.terms_) add_term(ex, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }

  friend MPoly operator*(const MPoly& x, const MPoly& y) {
    MPoly r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Expo ez;
        for (int i = 0; i < 4; ++i) ez.e[i] = ex.e[i] + ey.e[i];
        r.add_term(ez, cx * cy);
      }
    return r;
  }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(unsigned long long e) const {
    MPoly acc(1), sq = *this;
    while (e) {
      if (e & 1) acc *= sq;
      e >>= 1;
      if (e) sq *= sq;
    }
    return acc;
  }

  // every term carries q to at least the first power
  bool divisible_by_q() const {
    for (const auto& [ex, _] : terms_)
      if (ex.e[3] == 0) return false;
    return !terms_.empty();
  }

  MPoly div_q() const {
    MPoly r;
    for (const auto& [ex, c] : terms_) {
      if (ex.e[3] == 0) throw InternalError("MPoly::div_q: term without q factor");
      Expo e2 = ex;
      --e2.e[3];
      r.terms_[e2] = c;
    }
    return r;
  }

  // gcd of all coefficients, nonnegative; zero for the zero polynomial
  Int content() const {
    Int g = 0;
    for (const auto& [_, c] : terms_) g = gcd(g, c);
    return g;
  }

  MPoly divexact(const Int& g) const {
    MPoly r;
    for (const auto& [ex, c] : terms_) r.terms_[ex] = c / g;
    return r;
  }

  // componentwise minimum exponent vector across all terms
  Expo min_exponents() const {
    Expo m;
    bool first = true;
    for (const auto& [ex, _] : terms_) {
      if (first) {
        m = ex;
        first = false;
      } else {
        for (int i = 0; i < 4; ++i) m.e[i] = m.e[i] < ex.e[i] ? m.e[i] : ex.e[i];
      }
    }
    return m;
  }

  MPoly shift_down(const Expo& by) const {
    MPoly r;
    for (const auto& [ex, c] : terms_) {
      Expo e2;
      for (int i = 0; i < 4; ++i) {
        if (ex.e[i] < by.e[i]) throw InternalError("MPoly::shift_down: negative exponent");
        e2.e[i] = ex.e[i] - by.e[i];
      }
      r.terms_[e2] = c;
    }
    return r;
  }

  // sign of the leading (graded-lex greatest) coefficient; 0 for zero poly
  int leading_sign() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second < 0 ? -1 : 1;
  }

  Rational eval(const Rational& va, const Rational& vb, const Rational& vp,
                const Rational& vq) const {
    Rational acc(0);
    for (const auto& [ex, c] : terms_) {
      Rational t = Rational(c);
      t *= horadam::pow(va, ex.e[0]);
      t *= horadam::pow(vb, ex.e[1]);
      t *= horadam::pow(vp, ex.e[2]);
      t *= horadam::pow(vq, ex.e[3]);
      acc += t;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  void add_term(const Expo& ex, Int c) {
    if (c == 0) return;
    auto it = terms_.find(ex);
    if (it == terms_.end()) {
      terms_.emplace(ex, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"a", "b", "p", "q"};
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [ex, c] = *it;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool constant = ex.total() == 0;
    std::string mono;
    for (int i = 0; i < 4; ++i) {
      if (ex.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (ex.e[i] > 1) mono += "^" + std::to_string(ex.e[i]);
    }
    if (constant) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

// A polynomial divided by a power of q, with the power kept minimal.
// Negative-index terms live here: their denominators divide q^|n|.
struct QCleared {
  MPoly poly;
  long long shift = 0;  // value = poly / q^shift

  QCleared() = default;
  QCleared(MPoly p, long long s) : poly(std::move(p)), shift(s) { normalize(); }

  void normalize() {
    if (poly.is_zero()) {
      shift = 0;
      return;
    }
    while (shift > 0 && poly.divisible_by_q()) {
      poly = poly.div_q();
      --shift;
    }
  }

  friend bool operator==(const QCleared&, const QCleared&) = default;

  std::string to_string() const {
    if (shift == 0) return poly.to_string();
    return "(" + poly.to_string() + ")/q^" + std::to_string(shift);
  }
};

}  // namespace horadam
