#pragma once

// The identity catalog. Every identity the library audits is one data entry:
// an id, a status (CONFIRMED as stated / DISPUTED printed form / CORRECTION
// paired with a disputed form), the free indices with their sweep domains, an
// optional degeneracy guard, and one evaluator body instantiated twice — over
// exact rationals for numeric sweeps and over polynomial fractions for
// symbolic proof. Statements with division are compared in cleared
// multiplicative form; the guards carry the nonvanishing side conditions.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horadam/engine.hpp"
#include "horadam/oracle.hpp"
#include "horadam/quad.hpp"

namespace horadam {

enum class IdentityId {
  BinetH,
  DeMoivre,
  Brahmagupta,
  UniversalRec,
  InterrelHFromW,
  InterrelWFromHPrinted,
  InterrelWFromHCorrected,
  NegRec,
  Norm,
  AddsubWPlus,
  AddsubWMinus,
  AddsubHPlus,
  AddsubHMinus,
  DoubleWPlus,
  DoubleWPlusPrinted,
  DoubleWMinus,
  DoubleWMinusPrinted,
  DoubleHPlusPrinted,
  DoubleHPlusCorrected,
  DoubleHMinusPrinted,
  DoubleHMinusCorrected,
  GfPrinted,
  GfCorrected,
  SqDiff,
  Vajda,
  Catalan,
  Cassini,
  DOcagne,
  GelinCesaro,
  SumLinear,
  SumAlt,
  SumEven,
  SumOdd,
  LinformU,
  LinformV,
  VuRelation,
  HonsbergerWPrinted,
  HonsbergerWCorrected,
  HonsbergerH,
  ShiftbackH,
  ShiftbackW,
  Melham,
  BilinearH,
  BilinearW,
  PythPrinted,
  PythCorrected,
  NegWPrinted,
  NegWCorrected,
  NegUPrinted,
  NegUCorrected,
  NegV,
  MatrixPower,
};

enum class Status { Confirmed, Disputed, Correction };

std::string to_string(IdentityId id);
std::string to_string(Status s);

using IndexMap = std::map<std::string, long long>;

// thrown by evaluator bodies when a tuple is degenerate; recorded as a skip
struct GuardSkip {
  std::string reason;
};

struct Verdict {
  IdentityId id = IdentityId::BinetH;
  Params params;
  IndexMap indices;
  bool evaluated = false;  // false = guard skipped this tuple
  bool holds = false;
  std::string skip_reason;  // nonempty iff !evaluated
  std::string lhs, rhs;     // first differing pair when failing, else first pair
};

// Collects (lhs, rhs) comparisons; an identity holds iff every pair is equal.
template <typename V>
struct PairSink {
  bool all_equal = true;
  int first_diff = -1;
  std::vector<std::pair<V, V>> pairs;
  // set by bodies whose sides are ring elements rather than single values
  // (the quad ids); used verbatim for the verdict rendering
  std::string lhs_display, rhs_display;

  void pair(V l, V r) {
    if (!(l == r) && all_equal) {
      all_equal = false;
      first_diff = static_cast<int>(pairs.size());
    }
    pairs.emplace_back(std::move(l), std::move(r));
  }
};

// Numeric evaluation context: terms through a shared TermCache (or a chosen
// evaluator), indices by name, parameter constants as exact Rationals.
class NumCtx {
 public:
  using Value = Rational;
  using Quad = QuadElem;

  NumCtx(TermCache& cache, const IndexMap& idx, Evaluator ev)
      : cache_(cache), idx_(idx), ev_(ev) {}

  const Params& params() const { return cache_.params(); }
  long long i(const char* name) const;

  Rational term(SeqKind k, long long n) {
    if (ev_ == Evaluator::Auto) return cache_.term(k, n);
    return horadam::term(params(), k, n, ev_);
  }
  Rational w(long long n) { return term(SeqKind::W, n); }
  Rational h(long long n) { return term(SeqKind::H, n); }
  Rational u(long long n) { return term(SeqKind::U, n); }
  Rational v(long long n) { return term(SeqKind::V, n); }

  Rational qpow(long long e) const {
    if (e < 0 && params().q == 0) throw GuardSkip{"q = 0: negative q-power undefined"};
    return pow(Rational(params().q), e);
  }
  Rational c(long long v) const { return Rational(v); }

  Rational a() const { return Rational(params().a); }
  Rational b() const { return Rational(params().b); }
  Rational p() const { return Rational(params().p); }
  Rational q() const { return Rational(params().q); }
  Rational D() const { return Rational(params().D); }
  Rational E() const { return Rational(params().E); }
  Rational h0() const { return Rational(params().h0); }
  Rational h1() const { return Rational(params().h1); }

  QuadElem quad(Rational base, Rational coef) const {
    return QuadElem(std::move(base), std::move(coef), params().D);
  }

  // entries of R^n as [e11, e12, e21, e22]
  std::array<Rational, 4> rpow(long long n) const;

 private:
  TermCache& cache_;
  const IndexMap& idx_;
  Evaluator ev_;
};

// Symbolic twin of NumCtx over the fraction field of Z[a,b,p,q].
class SymCtx {
 public:
  using Value = SymFrac;
  using Quad = SymQuad;

  explicit SymCtx(const IndexMap& idx) : idx_(idx) {}

  long long i(const char* name) const;

  SymFrac term(SeqKind k, long long n) const {
    return SymFrac(sym_term(k, n, kSymProofBound));
  }
  SymFrac w(long long n) const { return term(SeqKind::W, n); }
  SymFrac h(long long n) const { return term(SeqKind::H, n); }
  SymFrac u(long long n) const { return term(SeqKind::U, n); }
  SymFrac v(long long n) const { return term(SeqKind::V, n); }

  SymFrac qpow(long long e) const {
    if (e >= 0) return SymFrac(MPoly::q().pow(static_cast<unsigned long long>(e)));
    return SymFrac(MPoly(1), MPoly::q().pow(static_cast<unsigned long long>(-e)));
  }
  SymFrac c(long long v) const { return SymFrac(Int(v)); }

  SymFrac a() const { return SymFrac(MPoly::a()); }
  SymFrac b() const { return SymFrac(MPoly::b()); }
  SymFrac p() const { return SymFrac(MPoly::p()); }
  SymFrac q() const { return SymFrac(MPoly::q()); }
  SymFrac D() const { return SymFrac(SymQuad::disc()); }
  SymFrac E() const;
  SymFrac h0() const;
  SymFrac h1() const;

  SymQuad quad(SymFrac base, SymFrac coef) const {
    return SymQuad(std::move(base), std::move(coef));
  }

  std::array<SymFrac, 4> rpow(long long n) const;

 private:
  const IndexMap& idx_;
};

enum class IndexDomain { Main, Aux };

struct IndexSpec {
  std::string name;
  IndexDomain domain;
};

// BilinearSum: indices xa + xb = xc + xd (xd is derived during sweeps)
enum class TupleRule { None, BilinearSum };

struct IdentityEntry {
  IdentityId id;
  std::string name;  // CLI identifier, kebab-case
  Status status;
  IdentityId paired;  // printed <-> corrected partner; == id when none
  std::string statement;
  std::vector<IndexSpec> indices;
  TupleRule tuple_rule = TupleRule::None;
  std::function<std::optional<std::string>(const Params&, const IndexMap&)> guard;
  std::function<void(NumCtx&, PairSink<Rational>&)> eval_num;
  std::function<void(SymCtx&, PairSink<SymFrac>&)> eval_sym;
};

const std::vector<IdentityEntry>& catalog();
const IdentityEntry& entry(IdentityId id);
const IdentityEntry* find_entry(std::string_view name);  // nullptr when unknown

struct EvalOptions {
  Evaluator evaluator = Evaluator::Auto;
  TermCache* cache = nullptr;  // reused when it matches params
};

Verdict evaluate_identity(const Params& ps, IdentityId id, const IndexMap& indices,
                          const EvalOptions& opts = {});

// the de Moivre statement as a standalone check (same Verdict shape)
Verdict de_moivre_check(const Params& ps, long long n, long long k,
                        const EvalOptions& opts = {});

// X = s^2 - t^2, Y = 2st, Z = s^2 + t^2 from s = (p^2 - q)h_{n+2}, t = q^2 h_n
struct TripleResult {
  std::array<Rational, 3> exact;    // (X, Y, Z), X^2 + Y^2 = Z^2 exactly
  std::array<Int, 3> primitive;     // scaled, reduced, absolute, ascending
};
TripleResult pythagorean_triple(const Params& ps, long long n);

// Polynomial proof at fixed indices: proven iff every cleared difference is
// the zero polynomial; otherwise the first nonzero difference is the witness.
struct SymResult {
  bool proven = false;
  MPoly witness;
};
SymResult sym_verify(IdentityId id, const IndexMap& indices);

}  // namespace horadam
