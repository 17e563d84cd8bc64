#include "horadam/params.hpp"

namespace horadam {

std::optional<std::string> classify(const Params& ps) {
  if (ps.a == 0 && ps.b == 1) {
    if (ps.p == 1 && ps.q == -1) return "Fibonacci / Lucas";
    if (ps.p == 2 && ps.q == -1) return "Pell / Pell-Lucas";
    if (ps.p == 1 && ps.q == -2) return "Jacobsthal / Jacobsthal-Lucas";
    return "fundamental pair (w = u, h = v)";
  }
  if (ps.a == 2 && ps.b == ps.p) return "companion pair (w = v, h = D*u)";
  return std::nullopt;
}

}  // namespace horadam
