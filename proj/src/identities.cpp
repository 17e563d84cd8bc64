#include "horadam/identities.hpp"

#include <algorithm>
#include <cctype>
#include <type_traits>

namespace horadam {

long long NumCtx::i(const char* name) const {
  auto it = idx_.find(name);
  if (it == idx_.end()) throw InternalError(std::string("NumCtx: missing index ") + name);
  return it->second;
}

std::array<Rational, 4> NumCtx::rpow(long long n) const {
  Mat2 m = mat_pow(companion(params()), n);
  return {m.a, m.b, m.c, m.d};
}

long long SymCtx::i(const char* name) const {
  auto it = idx_.find(name);
  if (it == idx_.end()) throw InternalError(std::string("SymCtx: missing index ") + name);
  return it->second;
}

SymFrac SymCtx::E() const {
  MPoly a = MPoly::a(), b = MPoly::b(), p = MPoly::p(), q = MPoly::q();
  return SymFrac(b * b - a * b * p + a * a * q);
}

SymFrac SymCtx::h0() const { return SymFrac(MPoly(2) * MPoly::b() - MPoly::a() * MPoly::p()); }

SymFrac SymCtx::h1() const {
  return SymFrac(MPoly::b() * MPoly::p() - MPoly(2) * MPoly::a() * MPoly::q());
}

std::array<SymFrac, 4> SymCtx::rpow(long long n) const {
  auto mul = [](const std::array<SymFrac, 4>& x, const std::array<SymFrac, 4>& y) {
    return std::array<SymFrac, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                  x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  std::array<SymFrac, 4> sq;
  if (n >= 0) {
    sq = {SymFrac(MPoly::p()), -SymFrac(MPoly::q()), SymFrac(1), SymFrac(0)};
  } else {
    SymFrac q(MPoly::q());
    sq = {SymFrac(0), SymFrac(1), -(SymFrac(1) / q), SymFrac(MPoly::p()) / q};
    n = -n;
  }
  std::array<SymFrac, 4> acc{SymFrac(1), SymFrac(0), SymFrac(0), SymFrac(1)};
  auto e = static_cast<unsigned long long>(n);
  while (e) {
    if (e & 1) acc = mul(acc, sq);
    e >>= 1;
    if (e) sq = mul(sq, sq);
  }
  return acc;
}

namespace {

using Guard = std::function<std::optional<std::string>(const Params&, const IndexMap&)>;

IndexSpec main_n() { return {"n", IndexDomain::Main}; }
IndexSpec aux(const char* nm) { return {nm, IndexDomain::Aux}; }

std::optional<std::string> g_repeated_root(const Params& ps, const IndexMap&) {
  if (ps.D == 0) return "repeated root: p^2 = 4q";
  return std::nullopt;
}

std::optional<std::string> g_de_moivre(const Params& ps, const IndexMap& ix) {
  if (ps.D == 0) return "repeated root: p^2 = 4q";
  if (ps.E == 0) return "E = 0: 2*A*d has zero norm";
  if (ps.q == 0 && (ix.at("n") < 1 || ix.at("k") < 1))
    return "q = 0: negative indices undefined";
  return std::nullopt;
}

std::optional<std::string> g_sum_linear(const Params& ps, const IndexMap& ix) {
  if (ix.at("n") < 0) return "sum range undefined for n < 0";
  if (ps.p - ps.q - 1 == 0) return "denominator p - q - 1 = 0";
  return std::nullopt;
}

std::optional<std::string> g_sum_alt(const Params& ps, const IndexMap& ix) {
  if (ix.at("n") < 0) return "sum range undefined for n < 0";
  if (ps.p + ps.q + 1 == 0) return "denominator p + q + 1 = 0";
  return std::nullopt;
}

std::optional<std::string> g_sum_even(const Params& ps, const IndexMap& ix) {
  if (ix.at("n") < 0) return "sum range undefined for n < 0";
  if (ps.p * ps.p - (ps.q + 1) * (ps.q + 1) == 0) return "denominator p^2 - (q+1)^2 = 0";
  return std::nullopt;
}

std::optional<std::string> g_sum_odd(const Params& ps, const IndexMap& ix) {
  if (ix.at("n") < 0) return "sum range undefined for n < 0";
  if (ps.p * ps.p - (ps.q + 1) * (ps.q + 1) == 0) return "denominator p^2 - (q+1)^2 = 0";
  if (ix.at("n") == 0 && ps.q == 0) return "q = 0: h(-1) undefined at n = 0";
  return std::nullopt;
}

std::optional<std::string> g_gf(const Params&, const IndexMap& ix) {
  if (ix.at("n") < 0) return "coefficient index negative";
  return std::nullopt;
}

std::optional<std::string> g_pyth_printed(const Params& ps, const IndexMap&) {
  if (ps.q == 0) return "q = 0: P = (p^2 - q)/(2*q^2) undefined";
  return std::nullopt;
}

std::optional<std::string> g_positive_n(const Params&, const IndexMap& ix) {
  if (ix.at("n") < 1) return "stated for positive indices";
  return std::nullopt;
}

std::optional<std::string> g_matrix_power(const Params& ps, const IndexMap& ix) {
  if (ps.q == 0 && ix.at("n") <= 0) return "q = 0: negative indices undefined";
  return std::nullopt;
}

template <typename F>
IdentityEntry make(IdentityId id, const char* name, Status st, IdentityId paired,
                   const char* statement, std::vector<IndexSpec> indices, TupleRule rule,
                   Guard guard, F body) {
  IdentityEntry e;
  e.id = id;
  e.name = name;
  e.status = st;
  e.paired = paired;
  e.statement = statement;
  e.indices = std::move(indices);
  e.tuple_rule = rule;
  e.guard = std::move(guard);
  e.eval_num = body;
  e.eval_sym = std::move(body);
  return e;
}

// the common shapes: one free index n / n plus one auxiliary
std::vector<IndexSpec> ix_n() { return {main_n()}; }
std::vector<IndexSpec> ix_nm() { return {main_n(), aux("m")}; }

std::vector<IdentityEntry> build_catalog() {
  std::vector<IdentityEntry> cat;
  cat.reserve(52);

  cat.push_back(make(
      IdentityId::BinetH, "binet-h", Status::Confirmed, IdentityId::BinetH,
      "h(n) = A*alpha^n + B*beta^n and w(n)*d = A*alpha^n - B*beta^n in Q[d]/(d^2 - D), "
      "alpha = (p + d)/2, beta = (p - d)/2, A = (h(0) + a*d)/2, B = (h(0) - a*d)/2",
      ix_n(), TupleRule::None, g_repeated_root, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto half = ctx.c(1) / ctx.c(2);
        auto alpha = ctx.quad(ctx.p() * half, half);
        auto beta = ctx.quad(ctx.p() * half, -half);
        auto ca = ctx.quad(ctx.h0() * half, ctx.a() * half);
        auto cb = ctx.quad(ctx.h0() * half, -(ctx.a() * half));
        auto an = quad_pow(alpha, n), bn = quad_pow(beta, n);
        auto hside = ca * an + cb * bn;
        sink.pair(hside.base(), ctx.h(n));
        sink.pair(hside.coef(), ctx.c(0));
        auto wside = ca * an - cb * bn;
        sink.pair(wside.coef(), ctx.w(n));
        sink.pair(wside.base(), ctx.c(0));
      }));

  cat.push_back(make(
      IdentityId::DeMoivre, "de-moivre", Status::Confirmed, IdentityId::DeMoivre,
      "((x(n) + h(n)*d) / (2*A*d))^k = (x(n*k) + h(n*k)*d) / (2*A*d), "
      "x(n) = h(n+1) - q*h(n-1), 2*A*d = a*D + h(0)*d",
      {main_n(), aux("k")}, TupleRule::None, g_de_moivre, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n"), k = ctx.i("k");
        auto inv = quad_inv(ctx.quad(ctx.a() * ctx.D(), ctx.h0()));
        auto zl = quad_pow(ctx.quad(ctx.h(n + 1) - ctx.q() * ctx.h(n - 1), ctx.h(n)) * inv, k);
        auto zr = ctx.quad(ctx.h(n * k + 1) - ctx.q() * ctx.h(n * k - 1), ctx.h(n * k)) * inv;
        sink.lhs_display = zl.to_string();
        sink.rhs_display = zr.to_string();
        sink.pair(zl.base(), zr.base());
        sink.pair(zl.coef(), zr.coef());
      }));

  cat.push_back(make(
      IdentityId::Brahmagupta, "brahmagupta", Status::Confirmed, IdentityId::Brahmagupta,
      "(k*h(n)^2 + t*h(m)^2) * (k*h(r)^2 + t*h(s)^2) = "
      "(k*h(n)*h(r) - t*h(m)*h(s))^2 + k*t*(h(n)*h(s) + h(m)*h(r))^2",
      {main_n(), aux("m"), aux("r"), aux("s"), aux("k"), aux("t")}, TupleRule::None, nullptr,
      [](auto& ctx, auto& sink) {
        auto k = ctx.c(ctx.i("k")), t = ctx.c(ctx.i("t"));
        auto hn = ctx.h(ctx.i("n")), hm = ctx.h(ctx.i("m"));
        auto hr = ctx.h(ctx.i("r")), hs = ctx.h(ctx.i("s"));
        auto x = k * hn * hr - t * hm * hs;
        auto y = hn * hs + hm * hr;
        sink.pair((k * hn * hn + t * hm * hm) * (k * hr * hr + t * hs * hs),
                  x * x + k * t * y * y);
      }));

  cat.push_back(make(
      IdentityId::UniversalRec, "universal-rec", Status::Confirmed, IdentityId::UniversalRec,
      "h(n+3) = (h(n+1)^3 - 2*h(n)*h(n+1)*h(n+2) + h(n-1)*h(n+2)^2) / "
      "(h(n-1)*h(n+1) - h(n)^2)",
      ix_n(), TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto den = ctx.h(n - 1) * ctx.h(n + 1) - ctx.h(n) * ctx.h(n);
        if (den.is_zero())
          throw GuardSkip{"universal recurrence denominator h(n-1)*h(n+1) - h(n)^2 = 0"};
        auto num = ctx.h(n + 1) * ctx.h(n + 1) * ctx.h(n + 1) -
                   ctx.c(2) * ctx.h(n) * ctx.h(n + 1) * ctx.h(n + 2) +
                   ctx.h(n - 1) * ctx.h(n + 2) * ctx.h(n + 2);
        sink.pair(ctx.h(n + 3), num / den);
      }));

  cat.push_back(make(IdentityId::InterrelHFromW, "interrel-h-from-w", Status::Confirmed,
                     IdentityId::InterrelHFromW, "h(n) = w(n+1) - q*w(n-1)", ix_n(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.h(n), ctx.w(n + 1) - ctx.q() * ctx.w(n - 1));
                     }));

  cat.push_back(make(IdentityId::InterrelWFromHPrinted, "interrel-w-from-h-printed",
                     Status::Disputed, IdentityId::InterrelWFromHCorrected,
                     "w(n) = (2*h(n+1) - p*h(n-1)) / D", ix_n(), TupleRule::None,
                     g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.w(n),
                                 (ctx.c(2) * ctx.h(n + 1) - ctx.p() * ctx.h(n - 1)) / ctx.D());
                     }));

  cat.push_back(make(IdentityId::InterrelWFromHCorrected, "interrel-w-from-h-corrected",
                     Status::Correction, IdentityId::InterrelWFromHPrinted,
                     "w(n) = (2*h(n+1) - p*h(n)) / D", ix_n(), TupleRule::None,
                     g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.w(n),
                                 (ctx.c(2) * ctx.h(n + 1) - ctx.p() * ctx.h(n)) / ctx.D());
                     }));

  cat.push_back(make(
      IdentityId::NegRec, "neg-rec", Status::Confirmed, IdentityId::NegRec,
      "q*h(-n-1) = p*h(-n) - h(-n+1), seeded by q*h(-1) = b*p - a*(p^2 - 2*q)", ix_n(),
      TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        sink.pair(ctx.q() * ctx.h(-n - 1), ctx.p() * ctx.h(-n) - ctx.h(-n + 1));
        sink.pair(ctx.q() * ctx.h(-1),
                  ctx.b() * ctx.p() - ctx.a() * (ctx.p() * ctx.p() - ctx.c(2) * ctx.q()));
      }));

  cat.push_back(make(IdentityId::Norm, "norm", Status::Confirmed, IdentityId::Norm,
                     "h(n)^2 - D*w(n)^2 = 4*E*q^n", ix_n(), TupleRule::None, g_repeated_root,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.h(n) * ctx.h(n) - ctx.D() * ctx.w(n) * ctx.w(n),
                                 ctx.c(4) * ctx.E() * ctx.qpow(n));
                     }));

  cat.push_back(make(IdentityId::AddsubWPlus, "addsub-w-plus", Status::Confirmed,
                     IdentityId::AddsubWPlus, "w(m+n) + q^n*w(m-n) = w(m)*v(n)", ix_nm(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.w(m + n) + ctx.qpow(n) * ctx.w(m - n),
                                 ctx.w(m) * ctx.v(n));
                     }));

  cat.push_back(make(IdentityId::AddsubWMinus, "addsub-w-minus", Status::Confirmed,
                     IdentityId::AddsubWMinus, "w(m+n) - q^n*w(m-n) = h(m)*u(n)", ix_nm(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.w(m + n) - ctx.qpow(n) * ctx.w(m - n),
                                 ctx.h(m) * ctx.u(n));
                     }));

  cat.push_back(make(IdentityId::AddsubHPlus, "addsub-h-plus", Status::Confirmed,
                     IdentityId::AddsubHPlus, "h(m+n) + q^n*h(m-n) = h(m)*v(n)", ix_nm(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.h(m + n) + ctx.qpow(n) * ctx.h(m - n),
                                 ctx.h(m) * ctx.v(n));
                     }));

  cat.push_back(make(IdentityId::AddsubHMinus, "addsub-h-minus", Status::Confirmed,
                     IdentityId::AddsubHMinus, "h(m+n) - q^n*h(m-n) = D*w(m)*u(n)", ix_nm(),
                     TupleRule::None, g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.h(m + n) - ctx.qpow(n) * ctx.h(m - n),
                                 ctx.D() * ctx.w(m) * ctx.u(n));
                     }));

  cat.push_back(make(IdentityId::DoubleWPlus, "double-w-plus", Status::Confirmed,
                     IdentityId::DoubleWPlusPrinted, "2*w(m+n) = w(m)*v(n) + h(m)*u(n)",
                     ix_nm(), TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.w(m + n),
                                 ctx.w(m) * ctx.v(n) + ctx.h(m) * ctx.u(n));
                     }));

  cat.push_back(make(IdentityId::DoubleWPlusPrinted, "double-w-plus-printed", Status::Disputed,
                     IdentityId::DoubleWPlus, "2*w(m+n) = w(m)*v(n) + v(m)*w(n)", ix_nm(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.w(m + n),
                                 ctx.w(m) * ctx.v(n) + ctx.v(m) * ctx.w(n));
                     }));

  cat.push_back(make(IdentityId::DoubleWMinus, "double-w-minus", Status::Confirmed,
                     IdentityId::DoubleWMinusPrinted, "2*q^n*w(m-n) = w(m)*v(n) - h(m)*u(n)",
                     ix_nm(), TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.qpow(n) * ctx.w(m - n),
                                 ctx.w(m) * ctx.v(n) - ctx.h(m) * ctx.u(n));
                     }));

  cat.push_back(make(IdentityId::DoubleWMinusPrinted, "double-w-minus-printed",
                     Status::Disputed, IdentityId::DoubleWMinus,
                     "2*q^n*w(m-n) = w(m)*v(n) - v(m)*w(n)", ix_nm(), TupleRule::None, nullptr,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.qpow(n) * ctx.w(m - n),
                                 ctx.w(m) * ctx.v(n) - ctx.v(m) * ctx.w(n));
                     }));

  cat.push_back(make(IdentityId::DoubleHPlusPrinted, "double-h-plus-printed", Status::Disputed,
                     IdentityId::DoubleHPlusCorrected, "2*h(m+n) = h(m)*(v(n) + D*u(n))",
                     ix_nm(), TupleRule::None, g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.h(m + n),
                                 ctx.h(m) * (ctx.v(n) + ctx.D() * ctx.u(n)));
                     }));

  cat.push_back(make(IdentityId::DoubleHPlusCorrected, "double-h-plus-corrected",
                     Status::Correction, IdentityId::DoubleHPlusPrinted,
                     "2*h(m+n) = h(m)*v(n) + D*w(m)*u(n)", ix_nm(), TupleRule::None,
                     g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.h(m + n),
                                 ctx.h(m) * ctx.v(n) + ctx.D() * ctx.w(m) * ctx.u(n));
                     }));

  cat.push_back(make(IdentityId::DoubleHMinusPrinted, "double-h-minus-printed",
                     Status::Disputed, IdentityId::DoubleHMinusCorrected,
                     "2*q^n*h(m+n) = h(m)*(v(n) - D*u(n))", ix_nm(), TupleRule::None,
                     g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.qpow(n) * ctx.h(m + n),
                                 ctx.h(m) * (ctx.v(n) - ctx.D() * ctx.u(n)));
                     }));

  cat.push_back(make(IdentityId::DoubleHMinusCorrected, "double-h-minus-corrected",
                     Status::Correction, IdentityId::DoubleHMinusPrinted,
                     "2*q^n*h(m-n) = h(m)*v(n) - D*w(m)*u(n)", ix_nm(), TupleRule::None,
                     g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.c(2) * ctx.qpow(n) * ctx.h(m - n),
                                 ctx.h(m) * ctx.v(n) - ctx.D() * ctx.w(m) * ctx.u(n));
                     }));

  auto gf_body = [](bool corrected_sign) {
    return [corrected_sign](auto& ctx, auto& sink) {
      long long n = ctx.i("n");
      using V = std::decay_t<decltype(ctx.c(0))>;
      std::vector<V> num{ctx.h0(), ctx.h1() - ctx.p() * ctx.h0()};
      std::vector<V> den{ctx.c(1), -ctx.p(), corrected_sign ? ctx.q() : -ctx.q()};
      auto co = detail::series_divide<V>(num, den, static_cast<std::size_t>(n) + 1);
      sink.pair(co[static_cast<std::size_t>(n)], ctx.h(n));
    };
  };

  cat.push_back(make(IdentityId::GfPrinted, "gf-printed", Status::Disputed,
                     IdentityId::GfCorrected,
                     "[x^n] (h(0) + (h(1) - p*h(0))*x) / (1 - p*x - q*x^2) = h(n)", ix_n(),
                     TupleRule::None, g_gf, gf_body(false)));

  cat.push_back(make(IdentityId::GfCorrected, "gf-corrected", Status::Correction,
                     IdentityId::GfPrinted,
                     "[x^n] (h(0) + (h(1) - p*h(0))*x) / (1 - p*x + q*x^2) = h(n)", ix_n(),
                     TupleRule::None, g_gf, gf_body(true)));

  cat.push_back(make(
      IdentityId::SqDiff, "sqdiff", Status::Confirmed, IdentityId::SqDiff,
      "h(n+1)^2 - q*h(n)^2 = D*((b^2 - a^2*q)*u(2n+1) - a*q*(2*b - a*p)*u(2n))", ix_n(),
      TupleRule::None, g_repeated_root, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        sink.pair(ctx.h(n + 1) * ctx.h(n + 1) - ctx.q() * ctx.h(n) * ctx.h(n),
                  ctx.D() * ((ctx.b() * ctx.b() - ctx.a() * ctx.a() * ctx.q()) *
                                 ctx.u(2 * n + 1) -
                             ctx.a() * ctx.q() * (ctx.c(2) * ctx.b() - ctx.a() * ctx.p()) *
                                 ctx.u(2 * n)));
      }));

  cat.push_back(make(IdentityId::Vajda, "vajda", Status::Confirmed, IdentityId::Vajda,
                     "h(n+s)*h(n-r) - h(n)*h(n-r+s) = E*q^(n-r)*(v(r+s) - q^s*v(r-s))",
                     {main_n(), aux("r"), aux("s")}, TupleRule::None, nullptr,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), r = ctx.i("r"), s = ctx.i("s");
                       sink.pair(ctx.h(n + s) * ctx.h(n - r) - ctx.h(n) * ctx.h(n - r + s),
                                 ctx.E() * ctx.qpow(n - r) *
                                     (ctx.v(r + s) - ctx.qpow(s) * ctx.v(r - s)));
                     }));

  cat.push_back(make(IdentityId::Catalan, "catalan", Status::Confirmed, IdentityId::Catalan,
                     "h(n+r)*h(n-r) - h(n)^2 = E*q^(n-r)*(v(2r) - 2*q^r)",
                     {main_n(), aux("r")}, TupleRule::None, nullptr,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), r = ctx.i("r");
                       sink.pair(ctx.h(n + r) * ctx.h(n - r) - ctx.h(n) * ctx.h(n),
                                 ctx.E() * ctx.qpow(n - r) *
                                     (ctx.v(2 * r) - ctx.c(2) * ctx.qpow(r)));
                     }));

  cat.push_back(make(IdentityId::Cassini, "cassini", Status::Confirmed, IdentityId::Cassini,
                     "h(n+1)*h(n-1) - h(n)^2 = E*D*q^(n-1)", ix_n(), TupleRule::None,
                     g_repeated_root, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.h(n + 1) * ctx.h(n - 1) - ctx.h(n) * ctx.h(n),
                                 ctx.E() * ctx.D() * ctx.qpow(n - 1));
                     }));

  cat.push_back(make(IdentityId::DOcagne, "docagne", Status::Confirmed, IdentityId::DOcagne,
                     "h(m)*h(n+1) - h(n)*h(m+1) = E*q^m*(v(n-m+1) - q*v(n-m-1))", ix_nm(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.h(m) * ctx.h(n + 1) - ctx.h(n) * ctx.h(m + 1),
                                 ctx.E() * ctx.qpow(m) *
                                     (ctx.v(n - m + 1) - ctx.q() * ctx.v(n - m - 1)));
                     }));

  cat.push_back(make(
      IdentityId::GelinCesaro, "gelin-cesaro", Status::Confirmed, IdentityId::GelinCesaro,
      "h(n-2)*h(n-1)*h(n+1)*h(n+2) - h(n)^4 = "
      "E*D*q^(n-2)*((p^2 + q)*h(n)^2 + E*D*p^2*q^(n-1))",
      ix_n(), TupleRule::None, g_repeated_root, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto h2 = ctx.h(n) * ctx.h(n);
        sink.pair(ctx.h(n - 2) * ctx.h(n - 1) * ctx.h(n + 1) * ctx.h(n + 2) - h2 * h2,
                  ctx.E() * ctx.D() * ctx.qpow(n - 2) *
                      ((ctx.p() * ctx.p() + ctx.q()) * h2 +
                       ctx.E() * ctx.D() * ctx.p() * ctx.p() * ctx.qpow(n - 1)));
      }));

  cat.push_back(make(IdentityId::SumLinear, "sum-linear", Status::Confirmed,
                     IdentityId::SumLinear,
                     "sum_{i=1..n} h(i) = (h(n+1) - q*h(n) - h(1) + q*h(0)) / (p - q - 1)",
                     ix_n(), TupleRule::None, g_sum_linear, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       auto acc = ctx.c(0);
                       for (long long i = 1; i <= n; ++i) acc += ctx.h(i);
                       sink.pair(acc, (ctx.h(n + 1) - ctx.q() * ctx.h(n) - ctx.h(1) +
                                       ctx.q() * ctx.h(0)) /
                                          (ctx.p() - ctx.q() - ctx.c(1)));
                     }));

  cat.push_back(make(
      IdentityId::SumAlt, "sum-alt", Status::Confirmed, IdentityId::SumAlt,
      "sum_{i=1..n} (-1)^i*h(i) = ((-1)^n*(h(n+1) + q*h(n)) - h(1) - q*h(0)) / (p + q + 1)",
      ix_n(), TupleRule::None, g_sum_alt, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto acc = ctx.c(0);
        for (long long i = 1; i <= n; ++i) {
          auto t = ctx.h(i);
          acc += (i % 2 == 0) ? t : -t;
        }
        auto sn = (n % 2 == 0) ? ctx.c(1) : ctx.c(-1);
        sink.pair(acc, (sn * (ctx.h(n + 1) + ctx.q() * ctx.h(n)) - ctx.h(1) -
                        ctx.q() * ctx.h(0)) /
                           (ctx.p() + ctx.q() + ctx.c(1)));
      }));

  cat.push_back(make(
      IdentityId::SumEven, "sum-even", Status::Confirmed, IdentityId::SumEven,
      "sum_{i=1..n} h(2i) = (h(2n+2) - q^2*h(2n) - h(2) + q^2*h(0)) / (p^2 - (q+1)^2)",
      ix_n(), TupleRule::None, g_sum_even, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto acc = ctx.c(0);
        for (long long i = 1; i <= n; ++i) acc += ctx.h(2 * i);
        auto q2 = ctx.q() * ctx.q();
        sink.pair(acc, (ctx.h(2 * n + 2) - q2 * ctx.h(2 * n) - ctx.h(2) + q2 * ctx.h(0)) /
                           (ctx.p() * ctx.p() - (ctx.q() + ctx.c(1)) * (ctx.q() + ctx.c(1))));
      }));

  cat.push_back(make(
      IdentityId::SumOdd, "sum-odd", Status::Confirmed, IdentityId::SumOdd,
      "sum_{i=1..n} h(2i-1) = (h(2n+1) - q^2*h(2n-1) - (q+1)*h(1) + p*q*h(0)) / "
      "(p^2 - (q+1)^2)",
      ix_n(), TupleRule::None, g_sum_odd, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto acc = ctx.c(0);
        for (long long i = 1; i <= n; ++i) acc += ctx.h(2 * i - 1);
        auto q2 = ctx.q() * ctx.q();
        sink.pair(acc, (ctx.h(2 * n + 1) - q2 * ctx.h(2 * n - 1) -
                        (ctx.q() + ctx.c(1)) * ctx.h(1) + ctx.p() * ctx.q() * ctx.h(0)) /
                           (ctx.p() * ctx.p() - (ctx.q() + ctx.c(1)) * (ctx.q() + ctx.c(1))));
      }));

  cat.push_back(make(IdentityId::LinformU, "linform-u", Status::Confirmed,
                     IdentityId::LinformU, "h(n) = h(1)*u(n) - q*h(0)*u(n-1)", ix_n(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.h(n), ctx.h1() * ctx.u(n) -
                                               ctx.q() * ctx.h0() * ctx.u(n - 1));
                     }));

  cat.push_back(make(IdentityId::LinformV, "linform-v", Status::Confirmed,
                     IdentityId::LinformV, "h(n) = b*v(n) - a*q*v(n-1)", ix_n(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.h(n),
                                 ctx.b() * ctx.v(n) - ctx.a() * ctx.q() * ctx.v(n - 1));
                     }));

  cat.push_back(make(IdentityId::VuRelation, "vu-relation", Status::Confirmed,
                     IdentityId::VuRelation,
                     "v(n) = 2*u(n+1) - p*u(n) and v(n) = p*u(n) - 2*q*u(n-1)", ix_n(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.v(n), ctx.c(2) * ctx.u(n + 1) - ctx.p() * ctx.u(n));
                       sink.pair(ctx.v(n),
                                 ctx.p() * ctx.u(n) - ctx.c(2) * ctx.q() * ctx.u(n - 1));
                     }));

  cat.push_back(make(IdentityId::HonsbergerWPrinted, "honsberger-w-printed", Status::Disputed,
                     IdentityId::HonsbergerWCorrected,
                     "w(n+m) = u(n)*w(m) - q*u(n-1)*w(m-1)", ix_nm(), TupleRule::None, nullptr,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.w(n + m), ctx.u(n) * ctx.w(m) -
                                                   ctx.q() * ctx.u(n - 1) * ctx.w(m - 1));
                     }));

  cat.push_back(make(IdentityId::HonsbergerWCorrected, "honsberger-w-corrected",
                     Status::Correction, IdentityId::HonsbergerWPrinted,
                     "w(n+m) = u(n+1)*w(m) - q*u(n)*w(m-1)", ix_nm(), TupleRule::None, nullptr,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.w(n + m), ctx.u(n + 1) * ctx.w(m) -
                                                   ctx.q() * ctx.u(n) * ctx.w(m - 1));
                     }));

  cat.push_back(make(IdentityId::HonsbergerH, "honsberger-h", Status::Confirmed,
                     IdentityId::HonsbergerH, "h(n+m) = u(m)*h(n+1) - q*u(m-1)*h(n)", ix_nm(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n"), m = ctx.i("m");
                       sink.pair(ctx.h(n + m), ctx.u(m) * ctx.h(n + 1) -
                                                   ctx.q() * ctx.u(m - 1) * ctx.h(n));
                     }));

  cat.push_back(make(
      IdentityId::ShiftbackH, "shiftback-h", Status::Confirmed, IdentityId::ShiftbackH,
      "h(n-k) = q^(1-k)*(u(k)*h(n-1) - u(k-1)*h(n)) = q^(-k)*(h(n)*u(k+1) - h(n+1)*u(k))",
      {main_n(), aux("k")}, TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n"), k = ctx.i("k");
        sink.pair(ctx.h(n - k),
                  ctx.qpow(1 - k) * (ctx.u(k) * ctx.h(n - 1) - ctx.u(k - 1) * ctx.h(n)));
        sink.pair(ctx.h(n - k),
                  ctx.qpow(-k) * (ctx.h(n) * ctx.u(k + 1) - ctx.h(n + 1) * ctx.u(k)));
      }));

  cat.push_back(make(
      IdentityId::ShiftbackW, "shiftback-w", Status::Confirmed, IdentityId::ShiftbackW,
      "w(n-k) = q^(1-k)*(u(k)*w(n-1) - u(k-1)*w(n)) = q^(-k)*(w(n)*u(k+1) - w(n+1)*u(k))",
      {main_n(), aux("k")}, TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n"), k = ctx.i("k");
        sink.pair(ctx.w(n - k),
                  ctx.qpow(1 - k) * (ctx.u(k) * ctx.w(n - 1) - ctx.u(k - 1) * ctx.w(n)));
        sink.pair(ctx.w(n - k),
                  ctx.qpow(-k) * (ctx.w(n) * ctx.u(k + 1) - ctx.w(n + 1) * ctx.u(k)));
      }));

  cat.push_back(make(
      IdentityId::Melham, "melham", Status::Confirmed, IdentityId::Melham,
      "h(n+k+1)^2 - q^(2k+1)*h(n-k)^2 = "
      "D*u(2k+1)*((b^2 - a^2*q)*u(2n+1) - a*q*(2*b - a*p)*u(2n))",
      {main_n(), aux("k")}, TupleRule::None, g_repeated_root, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n"), k = ctx.i("k");
        sink.pair(ctx.h(n + k + 1) * ctx.h(n + k + 1) -
                      ctx.qpow(2 * k + 1) * ctx.h(n - k) * ctx.h(n - k),
                  ctx.D() * ctx.u(2 * k + 1) *
                      ((ctx.b() * ctx.b() - ctx.a() * ctx.a() * ctx.q()) * ctx.u(2 * n + 1) -
                       ctx.a() * ctx.q() * (ctx.c(2) * ctx.b() - ctx.a() * ctx.p()) *
                           ctx.u(2 * n)));
      }));

  cat.push_back(make(
      IdentityId::BilinearH, "bilinear-h", Status::Confirmed, IdentityId::BilinearH,
      "u(xa)*h(xb) - u(xc)*h(xd) = q^r*(u(xa-r)*h(xb-r) - u(xc-r)*h(xd-r)), xa + xb = xc + xd",
      {aux("xa"), aux("xb"), aux("xc"), aux("xd"), aux("r")}, TupleRule::BilinearSum, nullptr,
      [](auto& ctx, auto& sink) {
        long long xa = ctx.i("xa"), xb = ctx.i("xb"), xc = ctx.i("xc"), xd = ctx.i("xd");
        long long r = ctx.i("r");
        sink.pair(ctx.u(xa) * ctx.h(xb) - ctx.u(xc) * ctx.h(xd),
                  ctx.qpow(r) * (ctx.u(xa - r) * ctx.h(xb - r) -
                                 ctx.u(xc - r) * ctx.h(xd - r)));
      }));

  cat.push_back(make(
      IdentityId::BilinearW, "bilinear-w", Status::Confirmed, IdentityId::BilinearW,
      "u(xa)*w(xb) - u(xc)*w(xd) = q^r*(u(xa-r)*w(xb-r) - u(xc-r)*w(xd-r)), xa + xb = xc + xd",
      {aux("xa"), aux("xb"), aux("xc"), aux("xd"), aux("r")}, TupleRule::BilinearSum, nullptr,
      [](auto& ctx, auto& sink) {
        long long xa = ctx.i("xa"), xb = ctx.i("xb"), xc = ctx.i("xc"), xd = ctx.i("xd");
        long long r = ctx.i("r");
        sink.pair(ctx.u(xa) * ctx.w(xb) - ctx.u(xc) * ctx.w(xd),
                  ctx.qpow(r) * (ctx.u(xa - r) * ctx.w(xb - r) -
                                 ctx.u(xc - r) * ctx.w(xd - r)));
      }));

  cat.push_back(make(
      IdentityId::PythPrinted, "pyth-printed", Status::Disputed, IdentityId::PythCorrected,
      "X^2 + Y^2 = Z^2 for X = (p/q^2)*h(n)*h(n+3), Y = 2P*h(n+2)*(2P*h(n+2) - h(n)), "
      "Z = h(n)^2 + 2P*h(n+2)*(2P*h(n+2) - h(n)), P = (p^2 - q)/(2*q^2)",
      ix_n(), TupleRule::None, g_pyth_printed, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto q2 = ctx.q() * ctx.q();
        auto cp = (ctx.p() * ctx.p() - ctx.q()) / (ctx.c(2) * q2);
        auto x = ctx.p() / q2 * ctx.h(n) * ctx.h(n + 3);
        auto t2 = ctx.c(2) * cp * ctx.h(n + 2);
        auto y = t2 * (t2 - ctx.h(n));
        auto z = ctx.h(n) * ctx.h(n) + y;
        sink.pair(x * x + y * y, z * z);
      }));

  cat.push_back(make(
      IdentityId::PythCorrected, "pyth-corrected", Status::Correction, IdentityId::PythPrinted,
      "(s^2 - t^2)^2 + (2st)^2 = (s^2 + t^2)^2 for s = (p^2 - q)*h(n+2), t = q^2*h(n), "
      "anchored by (p^2 - q)*h(n+2) - p*h(n+3) = q^2*h(n)",
      ix_n(), TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto s = (ctx.p() * ctx.p() - ctx.q()) * ctx.h(n + 2);
        auto t = ctx.q() * ctx.q() * ctx.h(n);
        sink.pair(s - ctx.p() * ctx.h(n + 3), t);
        auto x = s * s - t * t;
        auto y = ctx.c(2) * s * t;
        auto z = s * s + t * t;
        sink.pair(x * x + y * y, z * z);
      }));

  cat.push_back(make(
      IdentityId::NegWPrinted, "neg-w-printed", Status::Disputed, IdentityId::NegWCorrected,
      "w(-n) = q^(-n)*(a*u(n) - b*u(n-1)) / (a*u(n) + (b - p*a)*u(n-1))", ix_n(),
      TupleRule::None, g_positive_n, [](auto& ctx, auto& sink) {
        long long n = ctx.i("n");
        auto den = ctx.a() * ctx.u(n) + (ctx.b() - ctx.p() * ctx.a()) * ctx.u(n - 1);
        if (den.is_zero()) throw GuardSkip{"denominator a*u(n) + (b - p*a)*u(n-1) = 0"};
        sink.pair(ctx.w(-n),
                  ctx.qpow(-n) * (ctx.a() * ctx.u(n) - ctx.b() * ctx.u(n - 1)) / den);
      }));

  cat.push_back(make(IdentityId::NegWCorrected, "neg-w-corrected", Status::Correction,
                     IdentityId::NegWPrinted, "w(-n) = q^(-n)*(a*u(n+1) - b*u(n))", ix_n(),
                     TupleRule::None, nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.w(-n), ctx.qpow(-n) * (ctx.a() * ctx.u(n + 1) -
                                                            ctx.b() * ctx.u(n)));
                     }));

  cat.push_back(make(IdentityId::NegUPrinted, "neg-u-printed", Status::Disputed,
                     IdentityId::NegUCorrected, "u(-n) = q^(-n+1)*u(n-2)", ix_n(),
                     TupleRule::None, g_positive_n, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.u(-n), ctx.qpow(-n + 1) * ctx.u(n - 2));
                     }));

  cat.push_back(make(IdentityId::NegUCorrected, "neg-u-corrected", Status::Correction,
                     IdentityId::NegUPrinted, "u(-n) = -q^(-n)*u(n)", ix_n(), TupleRule::None,
                     nullptr, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.u(-n), -(ctx.qpow(-n) * ctx.u(n)));
                     }));

  cat.push_back(make(IdentityId::NegV, "neg-v", Status::Confirmed, IdentityId::NegV,
                     "v(-n) = q^(-n)*v(n)", ix_n(), TupleRule::None, nullptr,
                     [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       sink.pair(ctx.v(-n), ctx.qpow(-n) * ctx.v(n));
                     }));

  cat.push_back(make(IdentityId::MatrixPower, "matrix-power", Status::Confirmed,
                     IdentityId::MatrixPower,
                     "R^n = [[u(n+1), -q*u(n)], [u(n), -q*u(n-1)]] for R = [[p, -q], [1, 0]]",
                     ix_n(), TupleRule::None, g_matrix_power, [](auto& ctx, auto& sink) {
                       long long n = ctx.i("n");
                       auto rn = ctx.rpow(n);
                       sink.pair(rn[0], ctx.u(n + 1));
                       sink.pair(rn[1], -(ctx.q() * ctx.u(n)));
                       sink.pair(rn[2], ctx.u(n));
                       sink.pair(rn[3], -(ctx.q() * ctx.u(n - 1)));
                     }));

  return cat;
}

void validate_indices(const IdentityEntry& e, const IndexMap& indices) {
  for (const auto& spec : e.indices)
    if (indices.find(spec.name) == indices.end())
      throw UsageError("identity '" + e.name + "' needs index '" + spec.name + "'");
  for (const auto& kv : indices) {
    bool known = false;
    for (const auto& spec : e.indices) known = known || spec.name == kv.first;
    if (!known) throw UsageError("identity '" + e.name + "' has no index '" + kv.first + "'");
  }
  if (e.tuple_rule == TupleRule::BilinearSum &&
      indices.at("xa") + indices.at("xb") != indices.at("xc") + indices.at("xd"))
    throw UsageError("identity '" + e.name + "' requires xa + xb = xc + xd");
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> cat = build_catalog();
  return cat;
}

const IdentityEntry& entry(IdentityId id) {
  const auto& cat = catalog();
  auto i = static_cast<std::size_t>(id);
  if (i >= cat.size() || cat[i].id != id)
    throw InternalError("entry: catalog order does not match IdentityId");
  return cat[i];
}

const IdentityEntry* find_entry(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return c == '_' ? '-' : std::tolower(c); });
  for (const auto& e : catalog())
    if (e.name == key) return &e;
  return nullptr;
}

std::string to_string(IdentityId id) { return entry(id).name; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Confirmed: return "CONFIRMED";
    case Status::Disputed: return "DISPUTED";
    case Status::Correction: return "CORRECTION";
  }
  throw InternalError("Status: bad enum value");
}

Verdict evaluate_identity(const Params& ps, IdentityId id, const IndexMap& indices,
                          const EvalOptions& opts) {
  const IdentityEntry& e = entry(id);
  validate_indices(e, indices);
  Verdict v;
  v.id = id;
  v.params = ps;
  v.indices = indices;
  if (e.guard) {
    if (auto reason = e.guard(ps, indices)) {
      v.skip_reason = *reason;
      return v;
    }
  }
  TermCache local(ps);
  TermCache* cache =
      (opts.cache && opts.cache->params() == ps) ? opts.cache : &local;
  NumCtx ctx(*cache, indices, opts.evaluator);
  PairSink<Rational> sink;
  try {
    e.eval_num(ctx, sink);
  } catch (const GuardSkip& g) {
    v.skip_reason = g.reason;
    return v;
  } catch (const DegenerateQ& ex) {
    v.skip_reason = ex.what();
    return v;
  } catch (const RepeatedRoot& ex) {
    v.skip_reason = ex.what();
    return v;
  } catch (const NotInvertible& ex) {
    v.skip_reason = ex.what();
    return v;
  } catch (const DivisionByZero& ex) {
    v.skip_reason = ex.what();
    return v;
  }
  v.evaluated = true;
  v.holds = sink.all_equal;
  if (!sink.pairs.empty()) {
    auto pick = static_cast<std::size_t>(sink.all_equal ? 0 : sink.first_diff);
    v.lhs = sink.lhs_display.empty() ? sink.pairs[pick].first.to_string() : sink.lhs_display;
    v.rhs = sink.rhs_display.empty() ? sink.pairs[pick].second.to_string() : sink.rhs_display;
  }
  return v;
}

Verdict de_moivre_check(const Params& ps, long long n, long long k, const EvalOptions& opts) {
  return evaluate_identity(ps, IdentityId::DeMoivre, IndexMap{{"n", n}, {"k", k}}, opts);
}

TripleResult pythagorean_triple(const Params& ps, long long n) {
  if (ps.q == 0) throw DegenerateQ("pythagorean_triple: q = 0");
  TermCache cache(ps);
  Rational s = Rational(ps.p * ps.p - ps.q) * cache.term(SeqKind::H, n + 2);
  Rational t = Rational(ps.q * ps.q) * cache.term(SeqKind::H, n);
  Rational x = s * s - t * t;
  Rational y = Rational(2) * s * t;
  Rational z = s * s + t * t;
  if (x.is_zero() && y.is_zero())
    throw DegenerateTriple("pythagorean_triple: degenerate, s = t = 0");
  Int scale = lcm(x.denominator(), lcm(y.denominator(), z.denominator()));
  Int xi = (x * Rational(scale)).numerator();
  Int yi = (y * Rational(scale)).numerator();
  Int zi = (z * Rational(scale)).numerator();
  Int g = gcd(gcd(abs(xi), abs(yi)), abs(zi));
  std::array<Int, 3> prim{abs(xi / g), abs(yi / g), abs(zi / g)};
  std::sort(prim.begin(), prim.end());
  return TripleResult{{std::move(x), std::move(y), std::move(z)}, std::move(prim)};
}

SymResult sym_verify(IdentityId id, const IndexMap& indices) {
  const IdentityEntry& e = entry(id);
  validate_indices(e, indices);
  SymCtx ctx(indices);
  PairSink<SymFrac> sink;
  try {
    e.eval_sym(ctx, sink);
  } catch (const GuardSkip& g) {
    throw InternalError("sym_verify: symbolic degeneracy: " + g.reason);
  }
  SymResult r;
  r.proven = true;
  for (const auto& [l, rr] : sink.pairs) {
    MPoly diff = cleared_difference(l, rr);
    if (!diff.is_zero()) {
      r.proven = false;
      r.witness = std::move(diff);
      break;
    }
  }
  return r;
}

}  // namespace horadam
