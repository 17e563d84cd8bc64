#pragma once

// Sequence parameters (a, b; p, q) for the recurrence x_n = p*x_{n-1} - q*x_{n-2}
// together with the derived quantities used throughout:
//   D = p^2 - 4q          discriminant of x^2 - px + q
//   E = b^2 - abp + a^2 q seed invariant (A*B in the Binet form)
//   h0 = 2b - ap, h1 = bp - 2aq   seeds of the companion h-sequence
// Kinds: W = (a, b), H = (h0, h1), U = (0, 1), V = (2, p).

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "horadam/mat2.hpp"
#include "horadam/quad.hpp"
#include "horadam/rational.hpp"

namespace horadam {

enum class SeqKind { W, H, U, V };

inline std::string to_string(SeqKind k) {
  switch (k) {
    case SeqKind::W: return "w";
    case SeqKind::H: return "h";
    case SeqKind::U: return "u";
    case SeqKind::V: return "v";
  }
  throw InternalError("SeqKind: bad enum value");
}

inline SeqKind kind_from_string(std::string_view s) {
  if (s == "w" || s == "W") return SeqKind::W;
  if (s == "h" || s == "H") return SeqKind::H;
  if (s == "u" || s == "U") return SeqKind::U;
  if (s == "v" || s == "V") return SeqKind::V;
  throw UsageError("unknown sequence kind '" + std::string(s) + "' (want w, h, u or v)");
}

struct Params {
  Int a, b, p, q;
  Int D, E, h0, h1;

  Params() : Params(0, 0, 0, 0) {}
  Params(Int a_, Int b_, Int p_, Int q_)
      : a(std::move(a_)), b(std::move(b_)), p(std::move(p_)), q(std::move(q_)) {
    D = p * p - 4 * q;
    E = b * b - a * b * p + a * a * q;
    h0 = 2 * b - a * p;
    h1 = b * p - 2 * a * q;
  }

  std::pair<Rational, Rational> seeds(SeqKind k) const {
    switch (k) {
      case SeqKind::W: return {Rational(a), Rational(b)};
      case SeqKind::H: return {Rational(h0), Rational(h1)};
      case SeqKind::U: return {Rational(0), Rational(1)};
      case SeqKind::V: return {Rational(2), Rational(p)};
    }
    throw InternalError("Params::seeds: bad kind");
  }

  friend bool operator==(const Params& x, const Params& y) {
    return x.a == y.a && x.b == y.b && x.p == y.p && x.q == y.q;
  }
};

// Binet data over the carrier Q[w]/(w^2 - D): the roots alpha, beta of
// x^2 - px + q and the seed combinations A = b - a*beta, B = b - a*alpha.
// Well defined for any D; evaluators decide whether D = 0 is usable.
struct BinetData {
  QuadElem alpha, beta, A, B;

  explicit BinetData(const Params& ps)
      : alpha(Rational(ps.p, 2), Rational(1, 2), ps.D),
        beta(Rational(ps.p, 2), Rational(-1, 2), ps.D),
        A(Rational(ps.h0, 2), Rational(ps.a, 2), ps.D),
        B(Rational(ps.h0, 2), Rational(-ps.a, 2), ps.D) {}
};

// companion matrix R = [[p, -q], [1, 0]]
inline Mat2 companion(const Params& ps) {
  return {Rational(ps.p), Rational(-ps.q), Rational(1), Rational(0)};
}

// Named specializations: the classical rows (Fibonacci/Lucas, Pell/Pell-Lucas,
// Jacobsthal/Jacobsthal-Lucas) and the two seed families with collapsed kinds.
std::optional<std::string> classify(const Params& ps);

}  // namespace horadam
