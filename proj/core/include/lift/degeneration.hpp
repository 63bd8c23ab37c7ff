#pragma once

#include <utility>
#include <vector>

#include "lift/fan.hpp"
#include "lift/git.hpp"
#include "lift/scaffold.hpp"

namespace lift {

/// Nef-partition forms u_j in M, written in the coordinates dual to the
/// distinguished basis { rho_i : r < i <= R } of N: the indicator of the
/// S_j column block. u_j(rho_b) = -l_{b,j} follows for b <= r.
std::vector<IVec> nef_partition_forms(const WeightMatrix& wm);

/// Distinguished basis of N' = N with all u_j = 0: columns are rho_i for
/// i in U and rho_i - rho_{s_j} for i in S_j minus the eliminated slot,
/// ordered by the variable each column carries, so the induced
/// isomorphism N' = A matches the polynomial's coordinates.
IntMat distinguished_basis(const WeightMatrix& wm);

/// Sigma' = the fan of Y sliced by all hyperplanes u_j = 0, re-expressed
/// in the distinguished basis.
Fan degeneration_fan(const StackyFan& sigma, const WeightMatrix& wm);

bool is_spanning_fan(const Fan& sigma_prime, const Polytope& newt);

/// Every maximal cone of sigma_prime contained in some maximal cone of
/// the spanning fan.
bool refines_spanning_fan(const Fan& sigma_prime, const Polytope& newt);

/// Binomial section exponent pairs for each bundle L_i:
/// (sum_a l_{a,i} e_a , sum_{j in S_i} e_j) in Z^R, both mapping to L_i
/// under the character matrix.
std::vector<std::pair<IVec, IVec>> binomial_sections(const WeightMatrix& wm);

struct DegenerationReport {
  std::vector<IVec> forms;
  IntMat basis;
  Fan restricted;
  bool spanning = false;
  bool refines = false;
  std::vector<std::pair<IVec, IVec>> sections;
};

/// Full degeneration analysis for one chamber's ambient fan.
DegenerationReport degeneration_report(const WeightMatrix& wm, const StackyFan& sigma,
                                       const Polytope& newt);

}  // namespace lift
