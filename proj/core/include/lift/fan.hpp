#pragma once

#include <optional>
#include <vector>

#include "lift/cone.hpp"
#include "lift/matrix.hpp"
#include "lift/polytope.hpp"

namespace lift {

/// A fan: a global primitive ray list plus maximal cones as index subsets.
/// Cones need not be simplicial (restriction can produce non-simplicial
/// slices); they are always stored by their extreme rays.
class Fan {
public:
  Fan() = default;
  Fan(std::size_t ambient, std::vector<IVec> rays,
      std::vector<std::vector<std::size_t>> max_cones);

  /// Build from explicit cone generator lists, dropping cones contained
  /// in others and deduplicating rays.
  static Fan from_cones(std::size_t ambient, const std::vector<std::vector<IVec>>& cones);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<IVec>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }

  Cone cone(std::size_t index) const;
  std::vector<IVec> cone_rays(std::size_t index) const;

  bool is_simplicial() const;
  /// Complete iff every codimension-1 face is shared by exactly two
  /// maximal cones (all of which must be full-dimensional).
  bool is_complete() const;

  /// Sorted rays, remapped and sorted cone index sets; fans compare equal
  /// iff their canonical forms are identical.
  Fan canonical() const;

private:
  std::size_t ambient_ = 0;
  std::vector<IVec> rays_;
  std::vector<std::vector<std::size_t>> cones_;
};

bool fans_equal(const Fan& a, const Fan& b);

/// Exhaustive fan validity check (pairwise intersections are faces).
/// Desk-scale only; used by tests and validators.
bool fan_is_valid(const Fan& f);

/// The complete fan whose maximal cones are the cones over the facets of
/// P. Requires the origin strictly interior to P.
Fan spanning_fan(const Polytope& p);

/// Intersect every cone of the fan with the subspace cut out by the given
/// covectors, re-expressing rays in a basis of the sublattice
/// N' = N  /\  {u . x = 0}. If no basis is supplied, the saturated kernel
/// basis of the equation matrix is used (columns = basis vectors).
Fan restrict_fan(const Fan& fan, const std::vector<IVec>& equations,
                 const std::optional<IntMat>& basis = std::nullopt);

}  // namespace lift
