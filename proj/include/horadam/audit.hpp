#pragma once

// Grid sweeps over parameters and index tuples for every catalog identity,
// with per-id tallies, capped counterexample lists in deterministic
// (lexicographic) encounter order, and JSON / text / CSV renderings.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "horadam/identities.hpp"

namespace horadam {

struct Range {
  long long lo = 0, hi = 0;  // inclusive
};

struct Grid {
  Range a{-2, 2}, b{-2, 2}, p{-3, 3}, q{-3, 3};
  Range n{-4, 8};   // window for indices named "n"
  Range aux{0, 4};  // window for every other index
  bool include_zero_q = false;
};

struct IdReport {
  IdentityId id = IdentityId::BinetH;
  Status status = Status::Confirmed;
  long long evaluated = 0, held = 0, failed = 0, skipped = 0;
  std::map<std::string, long long> skip_reasons;
  std::vector<Verdict> counterexamples;  // capped, encounter order
};

struct AuditReport {
  Grid grid;
  std::size_t cap = 16;
  std::vector<IdReport> ids;

  bool confirmed_clean() const;      // CONFIRMED and CORRECTION ids: failed == 0
  bool disputed_all_failed() const;  // DISPUTED ids: failed > 0
  bool statuses_reproduced() const { return confirmed_clean() && disputed_all_failed(); }
};

// Sweep exactly the given ids over the grid; an empty id set yields a report
// with no tallies. Deterministic: params ascend lexicographically in
// (a, b, p, q), q = 0 skipped unless included, index tuples ascend in each
// entry's declared index order.
AuditReport audit_sweep(const Grid& grid, const std::vector<IdentityId>& ids = {},
                        std::size_t cap = 16);

// All index tuples for one entry, ascending in declared order; indices named
// "n" range over main, all others over aux, and a BilinearSum entry derives
// xd = xa + xb - xc instead of looping it.
std::vector<IndexMap> index_tuples(const IdentityEntry& e, const Range& main,
                                   const Range& aux);

std::string to_json(const Verdict& v, bool pretty = false);
std::string to_json(const AuditReport& r, bool pretty = true);
std::string to_text(const AuditReport& r);
std::string to_csv(const AuditReport& r);

}  // namespace horadam
