#pragma once

#include <vector>

#include "lift/laurent.hpp"
#include "lift/scaffold.hpp"

namespace lift {

/// An algebraic mutation: weight covector w and factor F supported on
/// w-perp. Acts by x^e -> x^e * F^{<w,e>}.
struct Mutation {
  IVec weight;
  Laurent factor;

  void validate(std::size_t dim) const;
};

/// Apply the mutation. Heights h < 0 require the height slice to be
/// divisible by F^{-h}; otherwise not_laurent_error is thrown.
Laurent mutate(const Laurent& f, const Mutation& m);

/// Exact Laurent division f / g; throws not_laurent_error when f is not
/// a multiple of g (over the integers).
Laurent exact_divide(const Laurent& f, const Laurent& g);

/// Doran-Harder amenability (conditions on <w_i, rho_j> over the parts):
/// -1 on the own part, 0 on earlier parts, >= 0 on later parts.
bool amenable_check(const std::vector<IVec>& weights, const std::vector<IVec>& rho,
                    const std::vector<std::vector<std::size_t>>& parts);

struct ChartResult {
  Laurent chart;                 // superpotential on the torus chart, in the
                                 // polynomial's variable order
  std::vector<Laurent> factors;  // F_1..F_k on T_M (distinguished coords)
};

/// Compose the mutations mu_1..mu_k with the given amenable weights
/// (default w_i = -u_i), pull back W = sum x^{rho_i}, and restrict to the
/// chart x^{rho_{s_i}} = 1 by dropping the eliminated coordinates.
ChartResult compose_charts(const WeightMatrix& wm);
ChartResult compose_charts(const WeightMatrix& wm, const std::vector<IVec>& weights);

}  // namespace lift
