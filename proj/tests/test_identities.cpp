#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "horadam/identities.hpp"

using namespace horadam;

namespace {

const Params kFib(0, 1, 1, -1);

Verdict eval(const Params& ps, IdentityId id, IndexMap ix) {
  return evaluate_identity(ps, id, ix);
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  CHECK(cat.size() == 52);
  for (std::size_t i = 0; i < cat.size(); ++i)
    CHECK(static_cast<std::size_t>(cat[i].id) == i);
  std::set<std::string> names;
  for (const auto& e : cat) names.insert(e.name);
  CHECK(names.size() == cat.size());
  // every printed/corrected pair links back to itself
  for (const auto& e : cat) CHECK(entry(e.paired).paired == e.id);
}

TEST_CASE("catalog statuses are fixed") {
  const std::set<IdentityId> disputed{
      IdentityId::InterrelWFromHPrinted, IdentityId::DoubleWPlusPrinted,
      IdentityId::DoubleWMinusPrinted,   IdentityId::DoubleHPlusPrinted,
      IdentityId::DoubleHMinusPrinted,   IdentityId::GfPrinted,
      IdentityId::HonsbergerWPrinted,    IdentityId::PythPrinted,
      IdentityId::NegWPrinted,           IdentityId::NegUPrinted};
  const std::set<IdentityId> corrections{
      IdentityId::InterrelWFromHCorrected, IdentityId::DoubleHPlusCorrected,
      IdentityId::DoubleHMinusCorrected,   IdentityId::GfCorrected,
      IdentityId::HonsbergerWCorrected,    IdentityId::PythCorrected,
      IdentityId::NegWCorrected,           IdentityId::NegUCorrected};
  int nc = 0, nd = 0, nk = 0;
  for (const auto& e : catalog()) {
    if (disputed.count(e.id)) {
      CHECK(e.status == Status::Disputed);
      ++nd;
    } else if (corrections.count(e.id)) {
      CHECK(e.status == Status::Correction);
      ++nk;
    } else {
      CHECK(e.status == Status::Confirmed);
      ++nc;
    }
    if (e.status != Status::Confirmed) CHECK(e.paired != e.id);
  }
  CHECK(nc == 34);
  CHECK(nd == 10);
  CHECK(nk == 8);
}

TEST_CASE("name lookup") {
  CHECK(to_string(IdentityId::Cassini) == "cassini");
  CHECK(to_string(IdentityId::NegUPrinted) == "neg-u-printed");
  CHECK(to_string(Status::Confirmed) == "CONFIRMED");
  CHECK(to_string(Status::Disputed) == "DISPUTED");
  CHECK(to_string(Status::Correction) == "CORRECTION");
  REQUIRE(find_entry("cassini") != nullptr);
  CHECK(find_entry("cassini")->id == IdentityId::Cassini);
  CHECK(find_entry("CASSINI")->id == IdentityId::Cassini);
  CHECK(find_entry("neg_u_printed")->id == IdentityId::NegUPrinted);
  CHECK(find_entry("no-such-identity") == nullptr);
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(eval(kFib, IdentityId::Cassini, {}), UsageError);
  CHECK_THROWS_AS(eval(kFib, IdentityId::Cassini, {{"n", 1}, {"m", 2}}), UsageError);
  CHECK_THROWS_AS(eval(kFib, IdentityId::Vajda, {{"n", 3}, {"r", 1}}), UsageError);
  CHECK_THROWS_AS(
      eval(kFib, IdentityId::BilinearH,
           {{"xa", 1}, {"xb", 2}, {"xc", 3}, {"xd", 1}, {"r", 0}}),
      UsageError);
  CHECK_NOTHROW(eval(kFib, IdentityId::BilinearH,
                     {{"xa", 1}, {"xb", 2}, {"xc", 3}, {"xd", 0}, {"r", 1}}));
}

TEST_CASE("confirmed identities, pinned instances") {
  Verdict v = eval(kFib, IdentityId::Cassini, {{"n", 2}});
  CHECK(v.evaluated);
  CHECK(v.holds);
  CHECK(v.lhs == "-5");
  CHECK(v.rhs == "-5");

  v = eval(Params(1, 3, 3, 2), IdentityId::Vajda, {{"n", 2}, {"r", 1}, {"s", 1}});
  CHECK(v.holds);
  CHECK(v.lhs == "4");

  v = eval(kFib, IdentityId::Melham, {{"n", 1}, {"k", 1}});
  CHECK(v.holds);
  CHECK(v.lhs == "20");

  v = eval(kFib, IdentityId::SumLinear, {{"n", 3}});
  CHECK(v.holds);
  CHECK(v.lhs == "8");

  v = eval(kFib, IdentityId::NegV, {{"n", 3}});
  CHECK(v.holds);
  CHECK(v.lhs == "-4");

  v = eval(kFib, IdentityId::Norm, {{"n", 3}});
  CHECK(v.holds);
  CHECK(v.lhs == "-4");

  v = eval(Params(1, 3, 3, 2), IdentityId::BinetH, {{"n", 4}});
  CHECK(v.holds);

  v = eval(kFib, IdentityId::Brahmagupta,
           {{"n", 0}, {"m", 0}, {"r", 0}, {"s", 0}, {"k", 1}, {"t", 1}});
  CHECK(v.holds);
  CHECK(v.lhs == "64");
}

TEST_CASE("division renders in natural divided form") {
  Verdict v = eval(kFib, IdentityId::UniversalRec, {{"n", 1}});
  CHECK(v.holds);
  CHECK(v.lhs == "7");
  CHECK(v.rhs == "7");
}

TEST_CASE("disputed forms fail where the corrections hold") {
  Verdict v = eval(kFib, IdentityId::DoubleHPlusPrinted, {{"m", 2}, {"n", 1}});
  CHECK(v.evaluated);
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "8");
  CHECK(v.rhs == "18");
  v = eval(kFib, IdentityId::DoubleHPlusCorrected, {{"m", 2}, {"n", 1}});
  CHECK(v.holds);
  CHECK(v.lhs == "8");

  v = eval(kFib, IdentityId::HonsbergerWPrinted, {{"n", 2}, {"m", 2}});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "3");
  CHECK(v.rhs == "2");
  v = eval(kFib, IdentityId::HonsbergerWCorrected, {{"n", 2}, {"m", 2}});
  CHECK(v.holds);
  CHECK(v.lhs == "3");

  v = eval(kFib, IdentityId::InterrelWFromHPrinted, {{"n", 2}});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "1");
  CHECK(v.rhs == "7/5");
  v = eval(kFib, IdentityId::InterrelWFromHCorrected, {{"n", 2}});
  CHECK(v.holds);
  CHECK(v.lhs == "1");
  CHECK(v.rhs == "1");

  v = eval(kFib, IdentityId::NegUPrinted, {{"n", 3}});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "2");
  CHECK(v.rhs == "1");
  v = eval(kFib, IdentityId::NegUCorrected, {{"n", 3}});
  CHECK(v.holds);
  CHECK(v.lhs == "2");

  v = eval(kFib, IdentityId::PythPrinted, {{"n", 0}});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "640");
  CHECK(v.rhs == "784");
  v = eval(kFib, IdentityId::PythCorrected, {{"n", 0}});
  CHECK(v.holds);

  v = eval(kFib, IdentityId::GfPrinted, {{"n", 2}});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "-1");
  CHECK(v.rhs == "3");
  v = eval(kFib, IdentityId::GfCorrected, {{"n", 2}});
  CHECK(v.holds);
  CHECK(v.lhs == "3");

  Params lucas_seeded(1, 0, 1, -1);
  v = eval(lucas_seeded, IdentityId::DoubleWPlusPrinted, {{"m", 1}, {"n", 1}});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == "2");
  CHECK(v.rhs == "0");
  v = eval(lucas_seeded, IdentityId::DoubleWPlus, {{"m", 1}, {"n", 1}});
  CHECK(v.holds);
}

TEST_CASE("guards skip with documented reasons") {
  Verdict v = eval(Params(1, 1, 3, 2), IdentityId::SumLinear, {{"n", 3}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "denominator p - q - 1 = 0");
  CHECK(v.lhs.empty());
  CHECK(v.rhs.empty());

  v = eval(Params(0, 1, 2, 1), IdentityId::Cassini, {{"n", 2}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "repeated root: p^2 = 4q");

  v = eval(Params(1, 2, 3, 2), IdentityId::DeMoivre, {{"n", 1}, {"k", 2}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "E = 0: 2*A*d has zero norm");

  v = eval(Params(1, 2, 3, 0), IdentityId::ShiftbackH, {{"n", 2}, {"k", 1}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "q = 0: negative q-power undefined");

  v = eval(kFib, IdentityId::NegWPrinted, {{"n", 0}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "stated for positive indices");

  v = eval(kFib, IdentityId::NegWPrinted, {{"n", 1}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "denominator a*u(n) + (b - p*a)*u(n-1) = 0");

  v = eval(Params(1, 1, 2, 1), IdentityId::UniversalRec, {{"n", 1}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "universal recurrence denominator h(n-1)*h(n+1) - h(n)^2 = 0");

  v = eval(Params(1, 2, 3, 0), IdentityId::SumAlt, {{"n", -1}});
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "sum range undefined for n < 0");
}

TEST_CASE("specializations agree: catalan = vajda at r = s") {
  for (long long n = -2; n <= 4; ++n)
    for (long long r = 0; r <= 3; ++r) {
      Params ps(1, 2, 3, 2);
      Verdict cat = eval(ps, IdentityId::Catalan, {{"n", n}, {"r", r}});
      Verdict vaj = eval(ps, IdentityId::Vajda, {{"n", n}, {"r", r}, {"s", r}});
      REQUIRE(cat.evaluated);
      REQUIRE(vaj.evaluated);
      CHECK(cat.holds == vaj.holds);
      CHECK(cat.lhs == vaj.lhs);
      CHECK(cat.rhs == vaj.rhs);
    }
}

TEST_CASE("specializations agree: cassini = catalan at r = 1") {
  for (long long n = -3; n <= 5; ++n) {
    Params ps(2, -1, 3, 2);
    Verdict cas = eval(ps, IdentityId::Cassini, {{"n", n}});
    Verdict cat = eval(ps, IdentityId::Catalan, {{"n", n}, {"r", 1}});
    REQUIRE(cas.evaluated);
    CHECK(cas.holds == cat.holds);
    CHECK(cas.lhs == cat.lhs);
    CHECK(cas.rhs == cat.rhs);
  }
}

TEST_CASE("specializations agree: docagne = vajda at s = 1, r = n - m") {
  for (long long n = -2; n <= 4; ++n)
    for (long long m = -2; m <= 4; ++m) {
      Params ps(1, 3, 3, 2);
      Verdict doc = eval(ps, IdentityId::DOcagne, {{"n", n}, {"m", m}});
      Verdict vaj = eval(ps, IdentityId::Vajda, {{"n", n}, {"r", n - m}, {"s", 1}});
      REQUIRE(doc.evaluated);
      CHECK(doc.holds == vaj.holds);
      CHECK(doc.lhs == vaj.lhs);
      CHECK(doc.rhs == vaj.rhs);
    }
}

TEST_CASE("verdicts are evaluator independent") {
  const std::pair<IdentityId, IndexMap> probes[] = {
      {IdentityId::Cassini, {{"n", 3}}},
      {IdentityId::UniversalRec, {{"n", 2}}},
      {IdentityId::InterrelWFromHPrinted, {{"n", 2}}},
      {IdentityId::AddsubHMinus, {{"n", 2}, {"m", 1}}},
      {IdentityId::ShiftbackW, {{"n", 1}, {"k", 3}}},
  };
  for (const Params ps : {Params(0, 1, 1, -1), Params(2, -1, 3, 2)})
    for (const auto& [id, ix] : probes) {
      EvalOptions naive;
      naive.evaluator = Evaluator::Recurrence;
      Verdict va = evaluate_identity(ps, id, ix);
      Verdict vn = evaluate_identity(ps, id, ix, naive);
      CHECK(va.evaluated == vn.evaluated);
      CHECK(va.holds == vn.holds);
      CHECK(va.lhs == vn.lhs);
      CHECK(va.rhs == vn.rhs);
    }
}

TEST_CASE("de moivre check, pinned") {
  Verdict v = de_moivre_check(kFib, 1, 2);
  CHECK(v.evaluated);
  CHECK(v.holds);
  CHECK(v.lhs == "3/2 + 1/2*w");
  CHECK(v.rhs == "3/2 + 1/2*w");

  v = de_moivre_check(kFib, 1, 1);
  CHECK(v.holds);

  v = de_moivre_check(kFib, 1, 0);
  CHECK(v.holds);
  CHECK(v.lhs == "1");

  v = de_moivre_check(kFib, 2, -2);
  CHECK(v.holds);

  v = de_moivre_check(Params(0, 1, 2, 1), 1, 2);
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "repeated root: p^2 = 4q");

  v = de_moivre_check(Params(1, 2, 3, 0), 0, 1);
  CHECK_FALSE(v.evaluated);
  CHECK(v.skip_reason == "q = 0: negative indices undefined");
}

TEST_CASE("pythagorean triples, pinned") {
  TripleResult t = pythagorean_triple(kFib, 0);
  CHECK(t.exact[0] == Rational(32));
  CHECK(t.exact[1] == Rational(24));
  CHECK(t.exact[2] == Rational(40));
  CHECK(t.primitive[0] == 3);
  CHECK(t.primitive[1] == 4);
  CHECK(t.primitive[2] == 5);

  t = pythagorean_triple(Params(0, 1, 1, -2), 0);
  CHECK(t.primitive[0] == 161);
  CHECK(t.primitive[1] == 240);
  CHECK(t.primitive[2] == 289);

  CHECK_THROWS_AS(pythagorean_triple(Params(1, 1, 2, 0), 1), DegenerateQ);
  CHECK_THROWS_AS(pythagorean_triple(Params(0, 0, 1, 1), 0), DegenerateTriple);
}

TEST_CASE("pythagorean triples are exact and primitive") {
  for (long long a : {-1LL, 0LL, 2LL})
    for (long long b : {-2LL, 1LL})
      for (long long p : {1LL, 3LL})
        for (long long q : {-2LL, -1LL, 2LL})
          for (long long n = -3; n <= 3; ++n) {
            Params ps(a, b, p, q);
            TripleResult t;
            try {
              t = pythagorean_triple(ps, n);
            } catch (const DegenerateTriple&) {
              continue;
            }
            CHECK(t.exact[0] * t.exact[0] + t.exact[1] * t.exact[1] ==
                  t.exact[2] * t.exact[2]);
            const auto& pr = t.primitive;
            CHECK(pr[0] * pr[0] + pr[1] * pr[1] == pr[2] * pr[2]);
            CHECK(gcd(gcd(pr[0], pr[1]), pr[2]) == 1);
            CHECK(pr[0] <= pr[1]);
            CHECK(pr[1] <= pr[2]);
          }
}

TEST_CASE("symbolic verification, pinned") {
  SymResult r = sym_verify(IdentityId::Cassini, {{"n", 2}});
  CHECK(r.proven);
  CHECK(r.witness.is_zero());

  r = sym_verify(IdentityId::Vajda, {{"n", 3}, {"r", 1}, {"s", 2}});
  CHECK(r.proven);

  r = sym_verify(IdentityId::DoubleHPlusCorrected, {{"m", 3}, {"n", 2}});
  CHECK(r.proven);

  r = sym_verify(IdentityId::InterrelWFromHPrinted, {{"n", 2}});
  CHECK_FALSE(r.proven);
  CHECK_FALSE(r.witness.is_zero());

  r = sym_verify(IdentityId::NegUPrinted, {{"n", 3}});
  CHECK_FALSE(r.proven);

  r = sym_verify(IdentityId::DeMoivre, {{"n", 1}, {"k", 2}});
  CHECK(r.proven);

  CHECK_THROWS_AS(sym_verify(IdentityId::Cassini, {}), UsageError);
}

TEST_CASE("symbolic proof implies numeric success on a spot sweep") {
  for (IdentityId id : {IdentityId::Catalan, IdentityId::HonsbergerH}) {
    IndexMap ix = id == IdentityId::Catalan ? IndexMap{{"n", 2}, {"r", 1}}
                                            : IndexMap{{"n", 2}, {"m", 1}};
    REQUIRE(sym_verify(id, ix).proven);
    for (long long a = -1; a <= 1; ++a)
      for (long long q : {-2LL, 1LL, 3LL}) {
        Verdict v = eval(Params(a, 2, 3, q), id, ix);
        REQUIRE(v.evaluated);
        CHECK(v.holds);
      }
  }
}
