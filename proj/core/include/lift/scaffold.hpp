#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lift/git.hpp"
#include "lift/laurent.hpp"
#include "lift/matrix.hpp"
#include "lift/polytope.hpp"

namespace lift {

/// Partition of a lattice basis of A into parts S'_1..S'_k and a free set
/// U'. Indices are 0-based coordinates of the polynomial's exponent
/// lattice. An optional unimodular basis supports generalised
/// scaffoldings; operations transform exponents into that basis first.
struct BasisPartition {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> parts;  // S'_i, disjoint, nonempty
  std::vector<std::size_t> free_indices;        // U'
  std::optional<IntMat> basis;                  // columns = basis vectors

  void validate() const;
  std::size_t k() const { return parts.size(); }
};

/// A strut: translation + sum of dilated standard simplices. Its
/// polynomial is prod_i (1 + sum_{j in S'_i} x_j)^{l_i} * x^translation.
struct Strut {
  std::vector<Int> dilations;  // one per part, non-negative
  ExpVec translation;

  bool operator==(const Strut& other) const = default;
  auto operator<=>(const Strut& other) const = default;
};

struct Scaffolding {
  BasisPartition partition;
  std::vector<Strut> struts;         // a = 1..r
  std::vector<std::size_t> points;   // uneliminated U' indices, sorted
  Int shift = 0;                     // sum of parts - f
};

Laurent strut_to_polynomial(const Strut& s, const BasisPartition& p);

/// f with exponents rewritten in the partition's basis (identity when no
/// basis is set).
Laurent to_partition_coords(const Laurent& f, const BasisPartition& p);

/// Sum of all strut polynomials and uneliminated monomials (no shift).
Laurent scaffolding_sum(const Scaffolding& sc);

/// True iff sum of parts - f is a constant; returns that constant.
std::pair<bool, Int> validate_scaffolding(const Laurent& f, const Scaffolding& sc);

/// All scaffoldings of f for the partition: multisets of struts plus a
/// subset of uneliminated basis points, every piece contained in Newt(f),
/// summing to f exactly (or up to an additive constant when allow_shift).
/// Deterministic order. Struts that are bare constants are excluded.
std::vector<Scaffolding> enumerate_scaffoldings(const Laurent& f, const BasisPartition& p,
                                                bool allow_shift);

/// The weight matrix (I_r | m) together with its column book-keeping.
/// Columns are ordered B, S_1, ..., S_k, U; within part i the eliminated
/// slot s_i sits at a chosen position (first by default) and the other
/// columns carry the part's variables in ascending coordinate order.
struct WeightMatrix {
  IntMat m;        // r x R
  std::size_t r = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> part_cols;  // S_i as column index lists
  std::vector<std::size_t> s_cols;                  // s_i column per part
  std::vector<std::size_t> u_cols;                  // U columns
  // Per column: the A-coordinate (variable) it carries, or nullopt for
  // basis columns and eliminated slots.
  std::vector<std::optional<std::size_t>> col_var;

  std::size_t R() const { return m.cols(); }
  std::size_t n_vars() const;
  std::vector<IVec> characters() const;             // columns of m
  IVec bundle_class(std::size_t part) const;        // L_i = sum of S_i columns
  std::vector<Int> dilation_of_row(std::size_t row) const;  // l_{row,i}
  /// Distinguished rays: rho_j = e_{j-r} for j > r, rho_b = -(m-row b).
  std::vector<IVec> distinguished_rho() const;
  IVec anticanonical() const;
};

/// Read the weight matrix off a scaffolding. s_positions[i] places the
/// eliminated slot inside part i's column block (0-based, default 0).
WeightMatrix scaffolding_to_weight_matrix(const Scaffolding& sc,
                                          const std::vector<std::size_t>& s_positions = {});

/// Rebuild the struts from a weight matrix (inverse of the above).
std::vector<Strut> struts_from_weight_matrix(const WeightMatrix& wm);

/// The Laurent polynomial of the elimination: sum of struts plus
/// uneliminated variables minus k, in the matrix's variable order.
Laurent forward_from_weight_matrix(const WeightMatrix& wm);

/// Partition of GIT indices (0-based) for the forward construction.
struct ConvexPartition {
  std::vector<std::size_t> basis;               // B
  std::vector<std::vector<std::size_t>> parts;  // S_1..S_k
  std::vector<std::size_t> free_indices;        // U
  std::vector<std::size_t> s_choices;           // s_i in S_i
};

/// Forward mirror construction from raw GIT data: checks clauses (i),
/// (ii), (iii) and (v) of a convex partition with basis, eliminates the
/// constraints and returns W as a Laurent polynomial (convexity of the
/// bundles, clause (iv), is reported by invert, not here).
Laurent forward_mirror(const GitData& g, const ConvexPartition& cp);

/// Rewrite GIT data so that B = [r] and the columns follow the canonical
/// weight-matrix layout; returns the weight matrix.
WeightMatrix weight_matrix_from_git(const GitData& g, const ConvexPartition& cp);

struct BundleReport {
  IVec cls;
  IVec lift;
  bool nef = false, ample = false, convex = false;
};

struct ChamberReport {
  std::vector<IVec> chamber_rays;
  RVec omega;
  bool ok = false;           // fan construction succeeded
  std::string failure;       // set when !ok
  bool deligne_mumford = false;
  bool orbifold = false;
  bool smooth_fixed_point = false;
  bool omega_nonneg_on_basis = false;  // clause (ii)
  bool dilations_nonneg = false;       // clause (v)
  bool all_bundles_convex = false;     // clause (iv)
  std::vector<BundleReport> bundles;
  IVec anticanonical;
  PositivityTier anticanonical_tier = PositivityTier::not_nef;
  IVec fano_class;  // -K_Y - sum L_i
  PositivityTier fano_tier = PositivityTier::not_nef;
  std::vector<Int> max_cone_dets;
  std::optional<StackyFan> stacky;
};

struct InversionReport {
  WeightMatrix wm;
  Int shift = 0;
  bool strictly_convex = false;  // characters span a strictly convex full-dim cone
  std::string failure;           // set when !strictly_convex
  std::vector<ChamberReport> chambers;
};

/// Full inversion of a validated scaffolding: weight matrix, GIT
/// characters, secondary-fan chambers and per-chamber positivity checks.
/// A failed strict-convexity check is reported, not thrown.
InversionReport invert(const Laurent& f, const Scaffolding& sc,
                       const std::vector<std::size_t>& s_positions = {});

/// Candidate bases for generalised scaffoldings: unimodular matrices b
/// whose inverse (entries bounded by entry_bound) carries P into the box
/// [-box_bound, box_bound]^n. Desk scale only.
std::vector<IntMat> enumerate_bases(const Polytope& p, std::int64_t entry_bound,
                                    std::int64_t box_bound);

}  // namespace lift
