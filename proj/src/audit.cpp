#include "horadam/audit.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace horadam {

namespace {

void tally(IdReport& ir, Verdict v, std::size_t cap) {
  if (!v.evaluated) {
    ++ir.skipped;
    ++ir.skip_reasons[v.skip_reason];
    return;
  }
  ++ir.evaluated;
  if (v.holds) {
    ++ir.held;
  } else {
    ++ir.failed;
    if (ir.counterexamples.size() < cap) ir.counterexamples.push_back(std::move(v));
  }
}

// Brahmagupta over the default-ish grids is ~40k tuples per parameter set;
// the identity is homogeneous of degree 4 in the h terms, so scaling every
// term by q^negdepth clears denominators and the whole sweep fits in int128.
// Returns false when the bounds are not safely met; caller then goes tuple
// by tuple through evaluate_identity.
bool brahmagupta_batch(IdReport& ir, const Params& ps, TermCache& cache, const Grid& grid,
                       std::size_t cap, const EvalOptions& opts) {
  long long lo = std::min(grid.n.lo, grid.aux.lo);
  long long hi = std::max(grid.n.hi, grid.aux.hi);
  if (lo > hi || grid.n.lo > grid.n.hi || grid.aux.lo > grid.aux.hi) return false;
  if (ps.q == 0 && lo < 0) return false;
  if (std::max(std::llabs(grid.aux.lo), std::llabs(grid.aux.hi)) > 31) return false;
  long long negdepth = lo < 0 ? -lo : 0;
  Rational scale = pow(Rational(ps.q), negdepth);
  const Int bound = Int(1) << 27;
  std::vector<long long> hs;
  hs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long i = lo; i <= hi; ++i) {
    Rational v = cache.term(SeqKind::H, i) * scale;
    if (!v.is_integer() || abs(v.numerator()) > bound) return false;
    hs.push_back(v.numerator().convert_to<long long>());
  }
  auto at = [&](long long i) { return static_cast<__int128>(hs[static_cast<std::size_t>(i - lo)]); };
  for (long long n = grid.n.lo; n <= grid.n.hi; ++n) {
    const __int128 hn = at(n);
    for (long long m = grid.aux.lo; m <= grid.aux.hi; ++m) {
      const __int128 hm = at(m);
      for (long long r = grid.aux.lo; r <= grid.aux.hi; ++r) {
        const __int128 hr = at(r);
        for (long long s = grid.aux.lo; s <= grid.aux.hi; ++s) {
          const __int128 hz = at(s);
          const __int128 nn = hn * hn, mm = hm * hm, rr = hr * hr, zz = hz * hz;
          const __int128 nr = hn * hr, mz = hm * hz;
          const __int128 y2 = (hn * hz + hm * hr) * (hn * hz + hm * hr);
          for (long long k = grid.aux.lo; k <= grid.aux.hi; ++k) {
            for (long long t = grid.aux.lo; t <= grid.aux.hi; ++t) {
              const __int128 lhs = (k * nn + t * mm) * (k * rr + t * zz);
              const __int128 x = k * nr - t * mz;
              if (lhs == x * x + k * t * y2) {
                ++ir.evaluated;
                ++ir.held;
              } else {
                tally(ir,
                      evaluate_identity(ps, IdentityId::Brahmagupta,
                                        IndexMap{{"n", n}, {"m", m}, {"r", r}, {"s", s},
                                                 {"k", k}, {"t", t}},
                                        opts),
                      cap);
              }
            }
          }
        }
      }
    }
  }
  return true;
}

nlohmann::ordered_json params_json(const Params& ps) {
  nlohmann::ordered_json j;
  j["a"] = ps.a.str();
  j["b"] = ps.b.str();
  j["p"] = ps.p.str();
  j["q"] = ps.q.str();
  return j;
}

nlohmann::ordered_json indices_json(const IndexMap& ix) {
  auto j = nlohmann::ordered_json::object();
  for (const auto& kv : ix) j[kv.first] = kv.second;
  return j;
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["id"] = to_string(v.id);
  j["params"] = params_json(v.params);
  j["indices"] = indices_json(v.indices);
  if (v.evaluated) {
    j["guard"] = "evaluated";
    j["holds"] = v.holds;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
  } else {
    j["guard"] = "skipped-degenerate";
    j["skip_reason"] = v.skip_reason;
  }
  return j;
}

nlohmann::ordered_json counterexample_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["params"] = params_json(v.params);
  j["indices"] = indices_json(v.indices);
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  return j;
}

nlohmann::ordered_json range_json(const Range& r) {
  return nlohmann::ordered_json::array({r.lo, r.hi});
}

}  // namespace

bool AuditReport::confirmed_clean() const {
  for (const auto& ir : ids)
    if (ir.status != Status::Disputed && ir.failed != 0) return false;
  return true;
}

bool AuditReport::disputed_all_failed() const {
  for (const auto& ir : ids)
    if (ir.status == Status::Disputed && ir.failed == 0) return false;
  return true;
}

std::vector<IndexMap> index_tuples(const IdentityEntry& e, const Range& main,
                                   const Range& aux) {
  std::vector<const IndexSpec*> loops;
  for (const auto& spec : e.indices)
    if (!(e.tuple_rule == TupleRule::BilinearSum && spec.name == "xd"))
      loops.push_back(&spec);
  auto range_of = [&](const IndexSpec& s) -> const Range& {
    return s.domain == IndexDomain::Main ? main : aux;
  };
  std::vector<IndexMap> out;
  if (loops.empty()) return out;
  for (const auto* spec : loops)
    if (range_of(*spec).lo > range_of(*spec).hi) return out;
  std::vector<long long> cur(loops.size());
  for (std::size_t i = 0; i < loops.size(); ++i) cur[i] = range_of(*loops[i]).lo;
  while (true) {
    IndexMap m;
    for (std::size_t i = 0; i < loops.size(); ++i) m[loops[i]->name] = cur[i];
    if (e.tuple_rule == TupleRule::BilinearSum)
      m["xd"] = m.at("xa") + m.at("xb") - m.at("xc");
    out.push_back(std::move(m));
    std::size_t i = loops.size();
    while (i > 0 && cur[i - 1] == range_of(*loops[i - 1]).hi) {
      cur[i - 1] = range_of(*loops[i - 1]).lo;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

AuditReport audit_sweep(const Grid& grid, const std::vector<IdentityId>& ids_in,
                        std::size_t cap) {
  AuditReport rep;
  rep.grid = grid;
  rep.cap = cap;
  const std::vector<IdentityId>& ids = ids_in;
  rep.ids.reserve(ids.size());
  std::vector<std::vector<IndexMap>> tuples;
  tuples.reserve(ids.size());
  for (auto id : ids) {
    IdReport ir;
    ir.id = id;
    ir.status = entry(id).status;
    rep.ids.push_back(std::move(ir));
    tuples.push_back(index_tuples(entry(id), grid.n, grid.aux));
  }
  for (long long a = grid.a.lo; a <= grid.a.hi; ++a)
    for (long long b = grid.b.lo; b <= grid.b.hi; ++b)
      for (long long p = grid.p.lo; p <= grid.p.hi; ++p)
        for (long long q = grid.q.lo; q <= grid.q.hi; ++q) {
          if (q == 0 && !grid.include_zero_q) continue;
          Params ps(a, b, p, q);
          TermCache cache(ps);
          EvalOptions opts;
          opts.cache = &cache;
          for (std::size_t j = 0; j < ids.size(); ++j) {
            if (ids[j] == IdentityId::Brahmagupta &&
                brahmagupta_batch(rep.ids[j], ps, cache, grid, cap, opts))
              continue;
            for (const IndexMap& ix : tuples[j])
              tally(rep.ids[j], evaluate_identity(ps, ids[j], ix, opts), cap);
          }
        }
  return rep;
}

std::string to_json(const Verdict& v, bool pretty) {
  return verdict_json(v).dump(pretty ? 2 : -1);
}

std::string to_json(const AuditReport& r, bool pretty) {
  nlohmann::ordered_json j;
  j["grid"] = {{"a", range_json(r.grid.a)},     {"b", range_json(r.grid.b)},
               {"p", range_json(r.grid.p)},     {"q", range_json(r.grid.q)},
               {"n", range_json(r.grid.n)},     {"aux", range_json(r.grid.aux)},
               {"include_zero_q", r.grid.include_zero_q}};
  j["cap"] = r.cap;
  j["statuses_reproduced"] = r.statuses_reproduced();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& ir : r.ids) {
    nlohmann::ordered_json ji;
    ji["id"] = to_string(ir.id);
    ji["status"] = to_string(ir.status);
    ji["evaluated"] = ir.evaluated;
    ji["held"] = ir.held;
    ji["failed"] = ir.failed;
    ji["skipped"] = ir.skipped;
    auto reasons = nlohmann::ordered_json::object();
    for (const auto& kv : ir.skip_reasons) reasons[kv.first] = kv.second;
    ji["skip_reasons"] = reasons;
    auto cx = nlohmann::ordered_json::array();
    for (const auto& v : ir.counterexamples) cx.push_back(counterexample_json(v));
    ji["counterexamples"] = cx;
    arr.push_back(std::move(ji));
  }
  j["ids"] = std::move(arr);
  return j.dump(pretty ? 2 : -1);
}

std::string to_text(const AuditReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(30) << "id" << std::setw(12) << "status" << std::right
     << std::setw(10) << "evaluated" << std::setw(10) << "held" << std::setw(10) << "failed"
     << std::setw(10) << "skipped" << "\n";
  for (const auto& ir : r.ids) {
    os << std::left << std::setw(30) << to_string(ir.id) << std::setw(12)
       << to_string(ir.status) << std::right << std::setw(10) << ir.evaluated
       << std::setw(10) << ir.held << std::setw(10) << ir.failed << std::setw(10)
       << ir.skipped << "\n";
  }
  os << "statuses reproduced: " << (r.statuses_reproduced() ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_csv(const AuditReport& r) {
  std::ostringstream os;
  os << "id,status,evaluated,held,failed,skipped\n";
  for (const auto& ir : r.ids)
    os << to_string(ir.id) << ',' << to_string(ir.status) << ',' << ir.evaluated << ','
       << ir.held << ',' << ir.failed << ',' << ir.skipped << "\n";
  return os.str();
}

}  // namespace horadam
