#include "horadam/oracle.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace horadam {

namespace {

struct SymLane {
  std::vector<MPoly> fwd;
  std::vector<QCleared> bwd;  // bwd[i] holds the term at -(i+1)
};

std::array<SymLane, 4>& lanes() {
  static std::array<SymLane, 4> ls;
  return ls;
}

void seed(SeqKind k, SymLane& ln) {
  if (!ln.fwd.empty()) return;
  MPoly a = MPoly::a(), b = MPoly::b(), p = MPoly::p(), q = MPoly::q();
  switch (k) {
    case SeqKind::W: ln.fwd = {a, b}; break;
    case SeqKind::H: ln.fwd = {MPoly(2) * b - a * p, b * p - MPoly(2) * a * q}; break;
    case SeqKind::U: ln.fwd = {MPoly(0), MPoly(1)}; break;
    case SeqKind::V: ln.fwd = {MPoly(2), p}; break;
  }
}

}  // namespace

QCleared sym_term(SeqKind kind, long long n, long long bound) {
  if (n > bound || n < -bound)
    throw UsageError("sym_term: index " + std::to_string(n) + " outside [-" +
                     std::to_string(bound) + ", " + std::to_string(bound) + "]");
  SymLane& ln = lanes()[static_cast<std::size_t>(kind)];
  seed(kind, ln);
  MPoly p = MPoly::p(), q = MPoly::q();
  if (n >= 0) {
    while (ln.fwd.size() <= static_cast<std::size_t>(n)) {
      const auto& f = ln.fwd;
      ln.fwd.push_back(p * f[f.size() - 1] - q * f[f.size() - 2]);
    }
    return QCleared(ln.fwd[static_cast<std::size_t>(n)], 0);
  }
  auto need = static_cast<std::size_t>(-n);
  while (ln.bwd.size() < need) {
    // t_{j-1} = (p*t_j - t_{j+1}) / q, run over cleared fractions
    QCleared at = ln.bwd.empty() ? QCleared(ln.fwd[0], 0) : ln.bwd.back();
    QCleared above = ln.bwd.size() >= 2
                         ? ln.bwd[ln.bwd.size() - 2]
                         : QCleared(ln.fwd[ln.bwd.size() == 1 ? 0 : 1], 0);
    long long s = std::max(at.shift, above.shift);
    MPoly numer = p * at.poly * q.pow(static_cast<unsigned long long>(s - at.shift)) -
                  above.poly * q.pow(static_cast<unsigned long long>(s - above.shift));
    ln.bwd.emplace_back(std::move(numer), s + 1);
  }
  return ln.bwd[need - 1];
}

std::string table_rendering(const MPoly& poly) {
  if (poly.is_zero()) return "0";
  static const char* names[4] = {"a", "b", "p", "q"};
  std::vector<std::pair<Expo, Int>> ts(poly.terms().begin(), poly.terms().end());
  // descending lex with priority b > a > p > q
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    const auto& ex = x.first.e;
    const auto& ey = y.first.e;
    if (ex[1] != ey[1]) return ex[1] > ey[1];
    if (ex[0] != ey[0]) return ex[0] > ey[0];
    if (ex[2] != ey[2]) return ex[2] > ey[2];
    return ex[3] > ey[3];
  });
  std::string out;
  for (const auto& [ex, c] : ts) {
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

std::string sym_table(long long maxn, long long bound) {
  if (maxn < 0) throw UsageError("sym_table: maxn must be nonnegative");
  if (maxn > bound)
    throw UsageError("sym_table: maxn " + std::to_string(maxn) + " exceeds bound " +
                     std::to_string(bound));
  std::string out;
  for (long long n = 0; n <= maxn; ++n)
    out += "w[" + std::to_string(n) + "] = " +
           table_rendering(sym_term(SeqKind::W, n, bound).poly) + "\n";
  for (long long n = 0; n <= maxn; ++n)
    out += "h[" + std::to_string(n) + "] = " +
           table_rendering(sym_term(SeqKind::H, n, bound).poly) + "\n";
  return out;
}

}  // namespace horadam
