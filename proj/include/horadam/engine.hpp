#pragma once

// Term evaluators. Three independent routes to the same value:
//   term_recurrence  iterates the recurrence (backwards through q for n < 0)
//   term_matrix      reads terms off mat_pow of the companion matrix
//   term_binet       evaluates the closed form in Q[w]/(w^2 - D)
// plus the generating-function coefficients of h and a lazy per-parameter
// term cache used by the identity sweeps.

#include <cstddef>
#include <vector>

#include "horadam/params.hpp"

namespace horadam {

enum class Evaluator { Auto, Recurrence, Matrix, Binet };

// Auto switches from the recurrence to the matrix route above this |n|
inline constexpr long long kMatrixCrossover = 64;

Evaluator evaluator_from_string(std::string_view s);
std::string to_string(Evaluator e);

Rational term_recurrence(const Params& ps, SeqKind k, long long n);
Rational term_matrix(const Params& ps, SeqKind k, long long n);
Rational term_binet(const Params& ps, SeqKind k, long long n);
Rational term(const Params& ps, SeqKind k, long long n, Evaluator ev = Evaluator::Auto);

// first `count` Taylor coefficients of (h0 + (h1 - p*h0) x) / (1 - px + qx^2);
// these equal h_0, h_1, h_2, ...
std::vector<Rational> gf_coefficients(const Params& ps, std::size_t count);

class TermCache {
 public:
  explicit TermCache(const Params& ps) : ps_(ps) {}

  const Params& params() const { return ps_; }
  const Rational& term(SeqKind k, long long n);

 private:
  struct Lane {
    std::vector<Rational> fwd;  // indices 0, 1, 2, ...
    std::vector<Rational> bwd;  // indices -1, -2, ...
  };
  Lane& lane(SeqKind k) { return lanes_[static_cast<int>(k)]; }

  Params ps_;
  Lane lanes_[4];
};

namespace detail {

// power series division: coefficients of num(x)/den(x); den[0] must be a unit
template <class V>
std::vector<V> series_divide(const std::vector<V>& num, const std::vector<V>& den,
                             std::size_t count) {
  std::vector<V> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    V acc = i < num.size() ? num[i] : V(0);
    for (std::size_t j = 1; j < den.size() && j <= i; ++j)
      acc = acc - den[j] * out[i - j];
    out.push_back(acc / den[0]);
  }
  return out;
}

}  // namespace detail

}  // namespace horadam
