#include "lift/period.hpp"

#include "lift/polytope.hpp"

namespace lift {

namespace {

// Keep e in the running power f^j only if -e lies in m*Newt(f) for some
// remaining number of factors m <= dmax - j; otherwise e can never return
// to the constant term.
Laurent prune_support(const Laurent& g, const Polytope& newt, int remaining) {
  Laurent out(g.dimension());
  for (const auto& [e, c] : g.terms()) {
    IVec neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -Int(e[i]);
    bool reachable = false;
    for (int m = 0; m <= remaining && !reachable; ++m)
      reachable = newt.contains_dilated(neg, m);
    if (reachable) out.add_term(e, c);
  }
  return out;
}

}  // namespace

PeriodSeq classical_period(const Laurent& f, int dmax, PeriodStrategy strategy) {
  if (dmax < 0) throw error("classical_period: dmax must be non-negative");
  PeriodSeq seq;
  seq.coeffs.reserve(dmax + 1);
  seq.coeffs.push_back(1);
  if (dmax == 0) return seq;

  if (f.is_zero()) {
    seq.coeffs.assign(dmax + 1, Int(0));
    seq.coeffs[0] = 1;
    return seq;
  }

  if (strategy == PeriodStrategy::naive) {
    Laurent g = Laurent::constant(f.dimension(), 1);
    for (int d = 1; d <= dmax; ++d) {
      g = g * f;
      seq.coeffs.push_back(g.constant_term());
    }
    return seq;
  }

  Polytope newt = newton_polytope(f);
  Laurent g = Laurent::constant(f.dimension(), 1);
  for (int d = 1; d <= dmax; ++d) {
    g = prune_support(g * f, newt, dmax - d);
    seq.coeffs.push_back(g.constant_term());
  }
  return seq;
}

}  // namespace lift
