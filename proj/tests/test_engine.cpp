#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "horadam/engine.hpp"

using namespace horadam;

namespace {

// plain two-sided rational recurrence, no shortcuts; the reference the
// evaluators are judged against
Rational brute(const Params& ps, SeqKind k, long long n) {
  auto [s0, s1] = ps.seeds(k);
  Rational lo(s0), hi(s1);
  if (n >= 0) {
    if (n == 0) return lo;
    for (long long i = 1; i < n; ++i) {
      Rational nx = Rational(ps.p) * hi - Rational(ps.q) * lo;
      lo = hi;
      hi = nx;
    }
    return hi;
  }
  Rational above = hi, at = lo;
  for (long long i = 0; i > n; --i) {
    Rational below = (Rational(ps.p) * at - above) / Rational(ps.q);
    above = at;
    at = below;
  }
  return at;
}

const std::vector<SeqKind> kKinds{SeqKind::W, SeqKind::H, SeqKind::U, SeqKind::V};

}  // namespace

TEST_CASE("derived parameters") {
  Params fib(0, 1, 1, -1);
  CHECK(fib.D == 5);
  CHECK(fib.E == 1);
  CHECK(fib.h0 == 2);
  CHECK(fib.h1 == 1);
  Params g(1, 3, 3, 2);
  CHECK(g.D == 1);
  CHECK(g.E == 2);
  CHECK(g.h0 == 3);
  CHECK(g.h1 == 5);
}

TEST_CASE("Lucas values, all evaluators") {
  Params ps(0, 1, 1, -1);
  const long long want[] = {2, 1, 3, 4, 7, 11, 18};
  for (long long n = 0; n <= 6; ++n)
    for (auto ev : {Evaluator::Recurrence, Evaluator::Matrix, Evaluator::Binet, Evaluator::Auto})
      CHECK(term(ps, SeqKind::H, n, ev) == Rational(want[n]));
  for (auto ev : {Evaluator::Recurrence, Evaluator::Matrix, Evaluator::Binet})
    CHECK(term(ps, SeqKind::H, -1, ev) == Rational(-1));
}

TEST_CASE("pinned h values for other parameter sets") {
  Params g(1, 3, 3, 2);
  const long long want[] = {3, 5, 9, 17, 33};
  for (long long n = 0; n <= 4; ++n) CHECK(term(g, SeqKind::H, n) == Rational(want[n]));
  CHECK(term(Params(1, 2, 3, 2), SeqKind::H, 5) == Rational(32));
  CHECK(term(Params(0, 1, 2, -1), SeqKind::H, 2) == Rational(6));
}

TEST_CASE("repeated root rejects the Binet evaluator only") {
  Params rep(0, 1, 2, 1);  // p^2 = 4q
  CHECK_THROWS_AS(term(rep, SeqKind::H, 3, Evaluator::Binet), RepeatedRoot);
  CHECK(term(rep, SeqKind::H, 3, Evaluator::Recurrence) ==
        term(rep, SeqKind::H, 3, Evaluator::Matrix));
}

TEST_CASE("evaluators agree with the brute recurrence on a small grid") {
  for (long long a = -1; a <= 1; ++a)
    for (long long b = -1; b <= 1; ++b)
      for (long long p = -2; p <= 2; ++p)
        for (long long q = -2; q <= 2; ++q) {
          if (q == 0) continue;
          Params ps(a, b, p, q);
          for (auto k : kKinds)
            for (long long n = -8; n <= 12; ++n) {
              Rational want = brute(ps, k, n);
              CHECK(term(ps, k, n, Evaluator::Recurrence) == want);
              CHECK(term(ps, k, n, Evaluator::Matrix) == want);
              if (ps.D != 0) CHECK(term(ps, k, n, Evaluator::Binet) == want);
            }
        }
}

TEST_CASE("terms at n >= 0 are integers; negative denominators divide q^|n|") {
  for (long long a = -2; a <= 2; a += 2)
    for (long long b = -1; b <= 2; ++b)
      for (long long p = -3; p <= 3; p += 3)
        for (long long q : {-2LL, 2LL, 3LL}) {
          Params ps(a, b, p, q);
          for (auto k : kKinds) {
            for (long long n = 0; n <= 10; ++n) CHECK(term(ps, k, n).is_integer());
            for (long long n = -1; n >= -8; --n) {
              Rational t = term(ps, k, n);
              CHECK((t * pow(Rational(q), -n)).is_integer());
            }
          }
        }
}

TEST_CASE("q = 0 makes negative indices degenerate") {
  Params ps(1, 2, 3, 0);
  CHECK_THROWS_AS(term(ps, SeqKind::W, -1, Evaluator::Recurrence), DegenerateQ);
  CHECK_THROWS_AS(term(ps, SeqKind::W, -1, Evaluator::Matrix), DegenerateQ);
  TermCache cache(ps);
  CHECK_THROWS_AS(cache.term(SeqKind::W, -1), DegenerateQ);
  // forward direction stays fine: w(n+1) = p*w(n)
  CHECK(term(ps, SeqKind::W, 3) == Rational(18));
}

TEST_CASE("u(-1) = -1/q and the closed negative-index forms") {
  for (long long q : {-3LL, -1LL, 2LL, 5LL}) {
    Params ps(1, 1, 4, q);
    CHECK(term(ps, SeqKind::U, -1) == Rational(-1) / Rational(q));
    for (long long n = 1; n <= 6; ++n) {
      CHECK(term(ps, SeqKind::U, -n) ==
            -(pow(Rational(q), -n) * term(ps, SeqKind::U, n)));
      CHECK(term(ps, SeqKind::V, -n) == pow(Rational(q), -n) * term(ps, SeqKind::V, n));
    }
  }
}

TEST_CASE("TermCache agrees with direct evaluation under random access") {
  Params ps(2, -1, 3, 2);
  TermCache cache(ps);
  const long long order[] = {5, -3, 0, 12, -7, 1, -1, 8, -3, 5};
  for (auto k : kKinds)
    for (long long n : order) CHECK(cache.term(k, n) == brute(ps, k, n));
  CHECK(cache.params() == ps);
}

TEST_CASE("auto evaluator crosses over to the matrix path") {
  Params ps(0, 1, 1, -1);
  CHECK(term(ps, SeqKind::H, 100, Evaluator::Auto) ==
        term(ps, SeqKind::H, 100, Evaluator::Matrix));
  CHECK(term(ps, SeqKind::H, -80, Evaluator::Auto) ==
        term(ps, SeqKind::H, -80, Evaluator::Matrix));
}

TEST_CASE("generating-function coefficients, pinned") {
  auto lucas = gf_coefficients(Params(0, 1, 1, -1), 5);
  REQUIRE(lucas.size() == 5);
  const long long want[] = {2, 1, 3, 4, 7};
  for (std::size_t i = 0; i < 5; ++i) CHECK(lucas[i] == Rational(want[i]));
  auto jac = gf_coefficients(Params(0, 1, 1, -2), 4);
  REQUIRE(jac.size() == 4);
  const long long wantj[] = {2, 1, 5, 7};
  for (std::size_t i = 0; i < 4; ++i) CHECK(jac[i] == Rational(wantj[i]));
  auto one = gf_coefficients(Params(1, 3, 3, 2), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Rational(3));  // 2b - ap
  CHECK(gf_coefficients(Params(1, 3, 3, 2), 0).empty());
}

TEST_CASE("generating-function coefficients equal h terms") {
  for (long long a : {-2LL, 0LL, 1LL})
    for (long long b : {-1LL, 1LL, 2LL})
      for (long long p : {-3LL, 1LL, 2LL})
        for (long long q : {-2LL, 0LL, 3LL}) {
          Params ps(a, b, p, q);
          auto co = gf_coefficients(ps, 21);
          for (long long n = 0; n <= 20; ++n)
            CHECK(co[static_cast<std::size_t>(n)] == term(ps, SeqKind::H, n));
        }
}

TEST_CASE("evaluator names round-trip") {
  CHECK(evaluator_from_string("naive") == Evaluator::Recurrence);
  CHECK(evaluator_from_string("recurrence") == Evaluator::Recurrence);
  CHECK(evaluator_from_string("matrix") == Evaluator::Matrix);
  CHECK(evaluator_from_string("binet") == Evaluator::Binet);
  CHECK(evaluator_from_string("auto") == Evaluator::Auto);
  CHECK_THROWS_AS(evaluator_from_string("fast"), UsageError);
  CHECK(to_string(Evaluator::Recurrence) == "naive");
  CHECK(to_string(Evaluator::Matrix) == "matrix");
}

TEST_CASE("kind names round-trip") {
  CHECK(kind_from_string("w") == SeqKind::W);
  CHECK(kind_from_string("h") == SeqKind::H);
  CHECK(kind_from_string("u") == SeqKind::U);
  CHECK(kind_from_string("v") == SeqKind::V);
  CHECK_THROWS_AS(kind_from_string("x"), UsageError);
  CHECK(to_string(SeqKind::H) == "h");
}

TEST_CASE("classical family names") {
  CHECK(classify(Params(0, 1, 1, -1)) == std::string("Fibonacci / Lucas"));
  CHECK(classify(Params(0, 1, 2, -1)) == std::string("Pell / Pell-Lucas"));
  CHECK(classify(Params(0, 1, 1, -2)) == std::string("Jacobsthal / Jacobsthal-Lucas"));
  CHECK(classify(Params(0, 1, 3, 2)) == std::string("fundamental pair (w = u, h = v)"));
  CHECK(classify(Params(2, 3, 3, 1)) == std::string("companion pair (w = v, h = D*u)"));
  CHECK_FALSE(classify(Params(1, 1, 1, 1)).has_value());
}
