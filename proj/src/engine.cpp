#include "horadam/engine.hpp"

#include <utility>

namespace horadam {

Evaluator evaluator_from_string(std::string_view s) {
  if (s == "auto") return Evaluator::Auto;
  if (s == "naive" || s == "recurrence") return Evaluator::Recurrence;
  if (s == "matrix") return Evaluator::Matrix;
  if (s == "binet") return Evaluator::Binet;
  throw UsageError("unknown evaluator '" + std::string(s) +
                   "' (want auto, naive, matrix or binet)");
}

std::string to_string(Evaluator e) {
  switch (e) {
    case Evaluator::Auto: return "auto";
    case Evaluator::Recurrence: return "naive";
    case Evaluator::Matrix: return "matrix";
    case Evaluator::Binet: return "binet";
  }
  throw InternalError("Evaluator: bad enum value");
}

Rational term_recurrence(const Params& ps, SeqKind k, long long n) {
  auto [s0, s1] = ps.seeds(k);
  if (n >= 0) {
    if (n == 0) return s0;
    Int prev = s0.numerator(), cur = s1.numerator();  // seeds are integers
    for (long long i = 1; i < n; ++i) {
      Int next = ps.p * cur - ps.q * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return Rational(std::move(cur));
  }
  if (ps.q == 0) throw DegenerateQ("term_recurrence: q = 0, negative indices undefined");
  Rational rp(ps.p), rq(ps.q);
  Rational above = std::move(s1), at = std::move(s0);  // t_{j+1}, t_j for j = 0
  for (long long j = 0; j > n; --j) {
    Rational below = (rp * at - above) / rq;
    above = std::move(at);
    at = std::move(below);
  }
  return at;
}

Rational term_matrix(const Params& ps, SeqKind k, long long n) {
  if (n < 0 && ps.q == 0) throw DegenerateQ("term_matrix: q = 0, negative indices undefined");
  Mat2 rn = mat_pow(companion(ps), n);
  // R^n = [[u_{n+1}, -q*u_n], [u_n, -q*u_{n-1}]]; s_n = s1*u_n + s0*(-q*u_{n-1})
  auto [s0, s1] = ps.seeds(k);
  return s1 * rn.c + s0 * rn.d;
}

Rational term_binet(const Params& ps, SeqKind k, long long n) {
  if (ps.D == 0) throw RepeatedRoot("term_binet: repeated root (p^2 = 4q)");
  if (n < 0 && ps.q == 0) throw DegenerateQ("term_binet: q = 0, negative indices undefined");
  BinetData bd(ps);
  QuadElem an = quad_pow(bd.alpha, n), bn = quad_pow(bd.beta, n);
  switch (k) {
    case SeqKind::W:
    case SeqKind::U: {
      // (X - Y)/d lands on the pure w-coefficient when X - Y is antisymmetric
      QuadElem diff = k == SeqKind::W ? bd.A * an - bd.B * bn : an - bn;
      if (!diff.base().is_zero()) throw InternalError("term_binet: nonzero base component");
      return diff.coef();
    }
    case SeqKind::H:
    case SeqKind::V: {
      QuadElem sum = k == SeqKind::H ? bd.A * an + bd.B * bn : an + bn;
      if (!sum.coef().is_zero()) throw InternalError("term_binet: nonzero w-component");
      return sum.base();
    }
  }
  throw InternalError("term_binet: bad kind");
}

Rational term(const Params& ps, SeqKind k, long long n, Evaluator ev) {
  switch (ev) {
    case Evaluator::Auto:
      return (n > kMatrixCrossover || n < -kMatrixCrossover) ? term_matrix(ps, k, n)
                                                             : term_recurrence(ps, k, n);
    case Evaluator::Recurrence: return term_recurrence(ps, k, n);
    case Evaluator::Matrix: return term_matrix(ps, k, n);
    case Evaluator::Binet: return term_binet(ps, k, n);
  }
  throw InternalError("term: bad evaluator");
}

std::vector<Rational> gf_coefficients(const Params& ps, std::size_t count) {
  std::vector<Rational> num{Rational(ps.h0), Rational(ps.h1 - ps.p * ps.h0)};
  std::vector<Rational> den{Rational(1), Rational(-ps.p), Rational(ps.q)};
  return detail::series_divide<Rational>(num, den, count);
}

const Rational& TermCache::term(SeqKind k, long long n) {
  Lane& ln = lane(k);
  if (ln.fwd.empty()) {
    auto [s0, s1] = ps_.seeds(k);
    ln.fwd.push_back(std::move(s0));
    ln.fwd.push_back(std::move(s1));
  }
  Rational rp(ps_.p), rq(ps_.q);
  if (n >= 0) {
    auto need = static_cast<std::size_t>(n) + 1;
    while (ln.fwd.size() < need) {
      auto& f = ln.fwd;
      f.push_back(rp * f[f.size() - 1] - rq * f[f.size() - 2]);
    }
    return ln.fwd[static_cast<std::size_t>(n)];
  }
  if (ps_.q == 0) throw DegenerateQ("TermCache: q = 0, negative indices undefined");
  auto need = static_cast<std::size_t>(-n);  // bwd[i] holds the term at -(i+1)
  auto& f = ln.fwd;
  auto& bk = ln.bwd;
  while (bk.size() < need) {
    const Rational& at = bk.empty() ? f[0] : bk.back();
    const Rational& above = bk.size() >= 2 ? bk[bk.size() - 2] : (bk.size() == 1 ? f[0] : f[1]);
    bk.push_back((rp * at - above) / rq);
  }
  return bk[need - 1];
}

}  // namespace horadam
