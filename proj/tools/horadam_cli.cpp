// Command-line front end: exact terms, term tables, identity checks, the
// catalog audit, Pythagorean triples, generating-function coefficients,
// symbolic tables and evaluator benchmarks.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "horadam/audit.hpp"
#include "horadam/engine.hpp"
#include "horadam/identities.hpp"
#include "horadam/oracle.hpp"

namespace {

using horadam::Int;
using horadam::Params;
using horadam::Rational;
using horadam::SeqKind;

Int parse_int(const std::string& s, const std::string& flag) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw horadam::UsageError("cli: " + flag + ": invalid integer '" + s + "'");
  }
}

// a, b, p, q arrive as strings so arbitrary-precision values survive
struct ParamFlags {
  std::string a, b, p, q;

  void attach(CLI::App* cmd) {
    cmd->add_option("-a,--a", a, "seed w(0)")->required();
    cmd->add_option("-b,--b", b, "seed w(1)")->required();
    cmd->add_option("-p,--p", p, "recurrence coefficient p")->required();
    cmd->add_option("-q,--q", q, "recurrence coefficient q")->required();
  }
  Params params() const {
    return Params(parse_int(a, "-a"), parse_int(b, "-b"), parse_int(p, "-p"),
                  parse_int(q, "-q"));
  }
};

nlohmann::ordered_json params_json(const Params& ps) {
  nlohmann::ordered_json j;
  j["a"] = ps.a.str();
  j["b"] = ps.b.str();
  j["p"] = ps.p.str();
  j["q"] = ps.q.str();
  return j;
}

std::vector<SeqKind> parse_kinds(const std::string& csv) {
  std::vector<SeqKind> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(horadam::kind_from_string(item));
  if (out.empty()) throw horadam::UsageError("cli: --kinds: empty kind list");
  return out;
}

int run_term(const ParamFlags& pf, const std::string& kind, long long n,
             const std::string& evaluator) {
  Params ps = pf.params();
  SeqKind k = horadam::kind_from_string(kind);
  if (evaluator == "all") {
    Rational r = horadam::term(ps, k, n, horadam::Evaluator::Recurrence);
    Rational m = horadam::term(ps, k, n, horadam::Evaluator::Matrix);
    if (r != m) throw horadam::InternalError("cli: naive and matrix evaluators disagree");
    if (ps.D != 0) {
      Rational bi = horadam::term(ps, k, n, horadam::Evaluator::Binet);
      if (r != bi) throw horadam::InternalError("cli: binet evaluator disagrees");
    }
    std::cout << r.to_string() << "\n";
    return 0;
  }
  auto ev = horadam::evaluator_from_string(evaluator);
  std::cout << horadam::term(ps, k, n, ev).to_string() << "\n";
  return 0;
}

int run_table(const ParamFlags& pf, long long from, long long to, const std::string& kinds_csv,
              const std::string& format, const std::string& evaluator) {
  if (from > to) throw horadam::UsageError("cli: --from must not exceed --to");
  Params ps = pf.params();
  auto kinds = parse_kinds(kinds_csv);
  auto ev = horadam::evaluator_from_string(evaluator);
  horadam::TermCache cache(ps);
  auto at = [&](SeqKind k, long long n) {
    return ev == horadam::Evaluator::Auto ? cache.term(k, n) : horadam::term(ps, k, n, ev);
  };
  if (format == "json") {
    nlohmann::ordered_json j;
    j["params"] = params_json(ps);
    auto rows = nlohmann::ordered_json::array();
    for (long long n = from; n <= to; ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      for (auto k : kinds) row[horadam::to_string(k)] = at(k, n).to_string();
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const char* sep = format == "csv" ? "," : "\t";
  std::cout << "n";
  for (auto k : kinds) std::cout << sep << horadam::to_string(k);
  std::cout << "\n";
  for (long long n = from; n <= to; ++n) {
    std::cout << n;
    for (auto k : kinds) std::cout << sep << at(k, n).to_string();
    std::cout << "\n";
  }
  return 0;
}

void put_index(horadam::IndexMap& ix, const char* name, const std::optional<long long>& v) {
  if (v) ix[name] = *v;
}

int run_check(const ParamFlags& pf, const std::string& id_name, const horadam::IndexMap& ix,
              const std::string& format, const std::string& evaluator) {
  const horadam::IdentityEntry* e = horadam::find_entry(id_name);
  if (!e) throw horadam::UsageError("cli: unknown identity '" + id_name + "'");
  horadam::EvalOptions opts;
  opts.evaluator = horadam::evaluator_from_string(evaluator);
  horadam::Verdict v = horadam::evaluate_identity(pf.params(), e->id, ix, opts);
  if (format == "text") {
    std::cout << e->name << ": ";
    if (!v.evaluated)
      std::cout << "skipped (" << v.skip_reason << ")\n";
    else
      std::cout << (v.holds ? "holds" : "FAILS") << "  lhs = " << v.lhs
                << "  rhs = " << v.rhs << "\n";
  } else if (format == "csv") {
    std::cout << "id,evaluated,holds,lhs,rhs,skip_reason\n";
    std::cout << e->name << ',' << (v.evaluated ? 1 : 0) << ',' << (v.holds ? 1 : 0) << ','
              << v.lhs << ',' << v.rhs << ',' << v.skip_reason << "\n";
  } else {
    std::cout << horadam::to_json(v, true) << "\n";
  }
  return v.evaluated ? 0 : 3;
}

int run_audit(const horadam::Grid& grid, const std::string& ids_csv, std::size_t cap,
              const std::string& format) {
  std::vector<horadam::IdentityId> ids;
  if (ids_csv.empty()) {
    for (const auto& e : horadam::catalog()) ids.push_back(e.id);
  } else {
    std::stringstream ss(ids_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const horadam::IdentityEntry* e = horadam::find_entry(item);
      if (!e) throw horadam::UsageError("cli: unknown identity '" + item + "'");
      ids.push_back(e->id);
    }
  }
  horadam::AuditReport rep = horadam::audit_sweep(grid, ids, cap);
  if (format == "json")
    std::cout << horadam::to_json(rep, true) << "\n";
  else if (format == "csv")
    std::cout << horadam::to_csv(rep);
  else
    std::cout << horadam::to_text(rep);
  return rep.statuses_reproduced() ? 0 : 1;
}

int run_triple(const ParamFlags& pf, long long n, const std::string& format) {
  horadam::TripleResult tr = horadam::pythagorean_triple(pf.params(), n);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["x"] = tr.exact[0].to_string();
    j["y"] = tr.exact[1].to_string();
    j["z"] = tr.exact[2].to_string();
    auto prim = nlohmann::ordered_json::array();
    for (const auto& v : tr.primitive) prim.push_back(v.str());
    j["primitive"] = std::move(prim);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << tr.primitive[0].str() << ' ' << tr.primitive[1].str() << ' '
              << tr.primitive[2].str() << "\n";
  }
  return 0;
}

int run_gf(const ParamFlags& pf, long long count, const std::string& format) {
  if (count < 0) throw horadam::UsageError("cli: --count must be >= 0");
  auto co = horadam::gf_coefficients(pf.params(), static_cast<std::size_t>(count));
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : co) arr.push_back(c.to_string());
    std::cout << arr.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "i,coefficient\n";
    for (std::size_t i = 0; i < co.size(); ++i)
      std::cout << i << ',' << co[i].to_string() << "\n";
  } else {
    for (std::size_t i = 0; i < co.size(); ++i)
      std::cout << (i ? " " : "") << co[i].to_string();
    std::cout << "\n";
  }
  return 0;
}

int run_symtable(long long maxn) {
  std::cout << horadam::sym_table(maxn);
  return 0;
}

int run_bench(const ParamFlags& pf, const std::string& kind, long long n, bool force_naive) {
  Params ps = pf.params();
  SeqKind k = horadam::kind_from_string(kind);
  long long cross = std::min<long long>(std::llabs(n), 10000);
  Rational cr = horadam::term(ps, k, cross, horadam::Evaluator::Recurrence);
  Rational cm = horadam::term(ps, k, cross, horadam::Evaluator::Matrix);
  if (cr != cm)
    throw horadam::InternalError("cli: bench cross-check failed, naive != matrix");
  if (ps.D != 0) {
    Rational cb = horadam::term(ps, k, cross, horadam::Evaluator::Binet);
    if (cr != cb)
      throw horadam::InternalError("cli: bench cross-check failed, binet differs");
  }
  std::cout << "cross-check at n = " << cross << ": ok\n";
  auto time_one = [&](horadam::Evaluator ev) {
    auto t0 = std::chrono::steady_clock::now();
    Rational v = horadam::term(ps, k, n, ev);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << horadam::to_string(ev) << ": " << ms << " ms ("
              << v.numerator().str().size() << "-digit numerator)\n";
    return v;
  };
  Rational vm = time_one(horadam::Evaluator::Matrix);
  if (std::llabs(n) <= 200000 || force_naive) {
    Rational vn = time_one(horadam::Evaluator::Recurrence);
    if (vn != vm) throw horadam::InternalError("cli: bench evaluators disagree at n");
  } else {
    std::cout << "naive: skipped at |n| > 200000 (pass --force-naive to run)\n";
  }
  if (ps.D != 0) {
    Rational vb = time_one(horadam::Evaluator::Binet);
    if (vb != vm) throw horadam::InternalError("cli: bench evaluators disagree at n");
  } else {
    std::cout << "binet: skipped (repeated root)\n";
  }
  return 0;
}

int run_classify(const ParamFlags& pf) {
  auto fam = horadam::classify(pf.params());
  std::cout << (fam ? *fam : std::string("none")) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Horadam / Horadam-Lucas sequence toolkit"};
  app.require_subcommand(1);
  int code = 0;

  static const std::vector<std::string> kFormats{"text", "csv", "json"};
  auto format_opt = [&](CLI::App* cmd, std::string& var) {
    cmd->add_option("--format", var, "output format")->check(CLI::IsMember(kFormats));
  };

  // term
  auto* c_term = app.add_subcommand("term", "print one exact term");
  ParamFlags p_term;
  p_term.attach(c_term);
  std::string term_kind;
  long long term_n = 0;
  std::string term_ev = "auto";
  c_term->add_option("-k,--kind", term_kind, "sequence kind: w, h, u or v")->required();
  c_term->add_option("-n", term_n, "index, may be negative")->required();
  c_term->add_option("--evaluator", term_ev, "auto, naive, matrix, binet or all");
  c_term->callback([&] { code = run_term(p_term, term_kind, term_n, term_ev); });

  // table
  auto* c_table = app.add_subcommand("table", "print a table of terms");
  ParamFlags p_table;
  p_table.attach(c_table);
  long long tb_from = 0, tb_to = 0;
  std::string tb_kinds = "w,h,u,v", tb_fmt = "text", tb_ev = "auto";
  c_table->add_option("--from", tb_from, "first index")->required();
  c_table->add_option("--to", tb_to, "last index")->required();
  c_table->add_option("--kinds", tb_kinds, "comma-separated kinds");
  format_opt(c_table, tb_fmt);
  c_table->add_option("--evaluator", tb_ev, "auto, naive, matrix or binet");
  c_table->callback(
      [&] { code = run_table(p_table, tb_from, tb_to, tb_kinds, tb_fmt, tb_ev); });

  // check
  auto* c_check = app.add_subcommand("check", "evaluate one identity at one index tuple");
  ParamFlags p_check;
  p_check.attach(c_check);
  std::string ck_id, ck_fmt = "json", ck_ev = "auto";
  std::optional<long long> ck_n, ck_m, ck_r, ck_s, ck_k, ck_t, ck_xa, ck_xb, ck_xc, ck_xd;
  c_check->add_option("--id", ck_id, "identity name")->required();
  c_check->add_option("-n", ck_n, "index n");
  c_check->add_option("-m", ck_m, "index m");
  c_check->add_option("-r", ck_r, "index r");
  c_check->add_option("-s", ck_s, "index s");
  c_check->add_option("-k", ck_k, "index k");
  c_check->add_option("-t", ck_t, "index t");
  c_check->add_option("--xa", ck_xa, "index xa");
  c_check->add_option("--xb", ck_xb, "index xb");
  c_check->add_option("--xc", ck_xc, "index xc");
  c_check->add_option("--xd", ck_xd, "index xd");
  format_opt(c_check, ck_fmt);
  c_check->add_option("--evaluator", ck_ev, "auto, naive, matrix or binet");
  c_check->callback([&] {
    horadam::IndexMap ix;
    put_index(ix, "n", ck_n);
    put_index(ix, "m", ck_m);
    put_index(ix, "r", ck_r);
    put_index(ix, "s", ck_s);
    put_index(ix, "k", ck_k);
    put_index(ix, "t", ck_t);
    put_index(ix, "xa", ck_xa);
    put_index(ix, "xb", ck_xb);
    put_index(ix, "xc", ck_xc);
    put_index(ix, "xd", ck_xd);
    code = run_check(p_check, ck_id, ix, ck_fmt, ck_ev);
  });

  // audit
  auto* c_audit = app.add_subcommand("audit", "sweep the identity catalog over a grid");
  horadam::Grid grid;
  std::string au_ids, au_fmt = "text";
  long long au_cap = 16;
  c_audit->add_option("--amin", grid.a.lo, "min a");
  c_audit->add_option("--amax", grid.a.hi, "max a");
  c_audit->add_option("--bmin", grid.b.lo, "min b");
  c_audit->add_option("--bmax", grid.b.hi, "max b");
  c_audit->add_option("--pmin", grid.p.lo, "min p");
  c_audit->add_option("--pmax", grid.p.hi, "max p");
  c_audit->add_option("--qmin", grid.q.lo, "min q");
  c_audit->add_option("--qmax", grid.q.hi, "max q");
  c_audit->add_option("--nmin", grid.n.lo, "min main index");
  c_audit->add_option("--nmax", grid.n.hi, "max main index");
  c_audit->add_option("--auxmin", grid.aux.lo, "min auxiliary index");
  c_audit->add_option("--auxmax", grid.aux.hi, "max auxiliary index");
  c_audit->add_flag("--include-zero-q", grid.include_zero_q, "also sweep q = 0");
  c_audit->add_option("--ids", au_ids, "comma-separated identity names (default: all)");
  c_audit->add_option("--cap", au_cap, "max recorded counterexamples per id")
      ->check(CLI::NonNegativeNumber);
  format_opt(c_audit, au_fmt);
  c_audit->callback(
      [&] { code = run_audit(grid, au_ids, static_cast<std::size_t>(au_cap), au_fmt); });

  // triple
  auto* c_triple = app.add_subcommand("triple", "Pythagorean triple from consecutive terms");
  ParamFlags p_triple;
  p_triple.attach(c_triple);
  long long tr_n = 0;
  std::string tr_fmt = "text";
  c_triple->add_option("-n", tr_n, "index n")->required();
  format_opt(c_triple, tr_fmt);
  c_triple->callback([&] { code = run_triple(p_triple, tr_n, tr_fmt); });

  // gf
  auto* c_gf = app.add_subcommand("gf", "generating-function coefficients");
  ParamFlags p_gf;
  p_gf.attach(c_gf);
  long long gf_count = 0;
  std::string gf_fmt = "text";
  c_gf->add_option("--count", gf_count, "number of coefficients")->required();
  format_opt(c_gf, gf_fmt);
  c_gf->callback([&] { code = run_gf(p_gf, gf_count, gf_fmt); });

  // symtable
  auto* c_sym = app.add_subcommand("symtable", "symbolic w and h terms in a, b, p, q");
  long long sy_maxn = 5;
  c_sym->add_option("--maxn", sy_maxn, "largest index");
  c_sym->callback([&] { code = run_symtable(sy_maxn); });

  // bench
  auto* c_bench = app.add_subcommand("bench", "time the evaluators at one index");
  ParamFlags p_bench;
  p_bench.attach(c_bench);
  long long be_n = 0;
  std::string be_kind = "h";
  bool be_force = false;
  c_bench->add_option("-n", be_n, "index to time")->required();
  c_bench->add_option("-k,--kind", be_kind, "sequence kind");
  c_bench->add_flag("--force-naive", be_force, "run the naive evaluator at any index");
  c_bench->callback([&] { code = run_bench(p_bench, be_kind, be_n, be_force); });

  // classify
  auto* c_cls = app.add_subcommand("classify", "name the classical family, if any");
  ParamFlags p_cls;
  p_cls.attach(c_cls);
  c_cls->callback([&] { code = run_classify(p_cls); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const horadam::UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const horadam::DegenerateQ& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 3;
  } catch (const horadam::RepeatedRoot& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 3;
  } catch (const horadam::DegenerateTriple& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 3;
  } catch (const horadam::NotInvertible& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 3;
  } catch (const horadam::DivisionByZero& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 3;
  } catch (const horadam::InternalError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return code;
}
