// Python shim over the core: exact values cross the boundary as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "horadam/audit.hpp"
#include "horadam/engine.hpp"
#include "horadam/errors.hpp"
#include "horadam/identities.hpp"
#include "horadam/oracle.hpp"
#include "horadam/params.hpp"

namespace py = pybind11;
using namespace horadam;

namespace {

Params make_params(long long a, long long b, long long p, long long q) {
  return Params(a, b, p, q);
}

IndexMap to_index_map(const py::dict& d) {
  IndexMap ix;
  for (auto item : d) ix[item.first.cast<std::string>()] = item.second.cast<long long>();
  return ix;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["id"] = to_string(v.id);
  py::dict ps;
  ps["a"] = v.params.a.str();
  ps["b"] = v.params.b.str();
  ps["p"] = v.params.p.str();
  ps["q"] = v.params.q.str();
  d["params"] = ps;
  py::dict ix;
  for (const auto& [name, value] : v.indices) ix[py::str(name)] = value;
  d["indices"] = ix;
  d["evaluated"] = v.evaluated;
  if (v.evaluated) {
    d["holds"] = v.holds;
    d["lhs"] = v.lhs;
    d["rhs"] = v.rhs;
  } else {
    d["skip_reason"] = v.skip_reason;
  }
  return d;
}

Range to_range(const std::pair<long long, long long>& p) { return Range{p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Horadam sequence terms, identity audits, symbolic proofs";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DegenerateQ>(m, "DegenerateQ", PyExc_ArithmeticError);
  py::register_exception<RepeatedRoot>(m, "RepeatedRoot", PyExc_ArithmeticError);
  py::register_exception<DegenerateTriple>(m, "DegenerateTriple", PyExc_ArithmeticError);
  py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  m.def(
      "term",
      [](long long a, long long b, long long p, long long q, const std::string& kind,
         long long n, const std::string& evaluator) {
        return term(make_params(a, b, p, q), kind_from_string(kind), n,
                    evaluator_from_string(evaluator))
            .to_string();
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("kind"), py::arg("n"),
      py::arg("evaluator") = "auto");

  m.def(
      "terms",
      [](long long a, long long b, long long p, long long q, const std::string& kind,
         long long lo, long long hi) {
        Params ps = make_params(a, b, p, q);
        SeqKind k = kind_from_string(kind);
        if (lo > hi) throw UsageError("terms: lo > hi");
        TermCache cache(ps);
        std::vector<std::string> out;
        for (long long n = lo; n <= hi; ++n) out.push_back(cache.term(k, n).to_string());
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("kind"), py::arg("lo"),
      py::arg("hi"));

  m.def(
      "gf_coefficients",
      [](long long a, long long b, long long p, long long q, std::size_t count) {
        std::vector<std::string> out;
        for (const auto& c : gf_coefficients(make_params(a, b, p, q), count))
          out.push_back(c.to_string());
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("count"));

  m.def(
      "classify",
      [](long long a, long long b, long long p, long long q) {
        return classify(make_params(a, b, p, q));
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));

  m.def("identity_ids", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });

  m.def(
      "identity_info",
      [](const std::string& name) {
        const IdentityEntry* e = find_entry(name);
        if (!e) throw UsageError("identity_info: unknown identity: " + name);
        py::dict d;
        d["name"] = e->name;
        d["status"] = to_string(e->status);
        d["statement"] = e->statement;
        d["paired"] = e->paired == e->id ? py::object(py::none())
                                         : py::object(py::str(entry(e->paired).name));
        std::vector<std::string> idx;
        for (const auto& spec : e->indices) idx.push_back(spec.name);
        d["indices"] = idx;
        return d;
      },
      py::arg("name"));

  m.def(
      "check",
      [](const std::string& name, long long a, long long b, long long p, long long q,
         const py::dict& indices, const std::string& evaluator) {
        const IdentityEntry* e = find_entry(name);
        if (!e) throw UsageError("check: unknown identity: " + name);
        EvalOptions opts;
        opts.evaluator = evaluator_from_string(evaluator);
        return verdict_dict(
            evaluate_identity(make_params(a, b, p, q), e->id, to_index_map(indices), opts));
      },
      py::arg("name"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"),
      py::arg("indices"), py::arg("evaluator") = "auto");

  m.def(
      "de_moivre",
      [](long long a, long long b, long long p, long long q, long long n, long long k) {
        return verdict_dict(de_moivre_check(make_params(a, b, p, q), n, k));
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("n"), py::arg("k"));

  m.def(
      "pythagorean_triple",
      [](long long a, long long b, long long p, long long q, long long n) {
        TripleResult t = pythagorean_triple(make_params(a, b, p, q), n);
        py::dict d;
        d["exact"] = std::vector<std::string>{t.exact[0].to_string(), t.exact[1].to_string(),
                                              t.exact[2].to_string()};
        d["primitive"] = std::vector<std::string>{t.primitive[0].str(), t.primitive[1].str(),
                                                  t.primitive[2].str()};
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("n"));

  m.def(
      "audit_json",
      [](std::vector<std::string> ids, std::pair<long long, long long> a,
         std::pair<long long, long long> b, std::pair<long long, long long> p,
         std::pair<long long, long long> q, std::pair<long long, long long> n,
         std::pair<long long, long long> aux, bool include_zero_q, std::size_t cap) {
        Grid grid;
        grid.a = to_range(a);
        grid.b = to_range(b);
        grid.p = to_range(p);
        grid.q = to_range(q);
        grid.n = to_range(n);
        grid.aux = to_range(aux);
        grid.include_zero_q = include_zero_q;
        std::vector<IdentityId> want;
        if (ids.empty()) {
          for (const auto& e : catalog()) want.push_back(e.id);
        } else {
          for (const auto& name : ids) {
            const IdentityEntry* e = find_entry(name);
            if (!e) throw UsageError("audit_json: unknown identity: " + name);
            want.push_back(e->id);
          }
        }
        return to_json(audit_sweep(grid, want, cap));
      },
      py::arg("ids") = std::vector<std::string>{},
      py::arg("a") = std::make_pair(-2LL, 2LL), py::arg("b") = std::make_pair(-2LL, 2LL),
      py::arg("p") = std::make_pair(-3LL, 3LL), py::arg("q") = std::make_pair(-3LL, 3LL),
      py::arg("n") = std::make_pair(-4LL, 8LL), py::arg("aux") = std::make_pair(0LL, 4LL),
      py::arg("include_zero_q") = false, py::arg("cap") = std::size_t{16});

  m.def(
      "sym_term",
      [](const std::string& kind, long long n) {
        return sym_term(kind_from_string(kind), n).to_string();
      },
      py::arg("kind"), py::arg("n"));

  m.def("sym_table", [](long long maxn) { return sym_table(maxn); }, py::arg("maxn"));

  m.def(
      "sym_verify",
      [](const std::string& name, const py::dict& indices) {
        const IdentityEntry* e = find_entry(name);
        if (!e) throw UsageError("sym_verify: unknown identity: " + name);
        SymResult r = sym_verify(e->id, to_index_map(indices));
        py::dict d;
        d["proven"] = r.proven;
        d["witness"] = r.witness.to_string();
        return d;
      },
      py::arg("name"), py::arg("indices"));
}
