#pragma once

#include <memory>
#include <vector>

#include "lift/ints.hpp"
#include "lift/matrix.hpp"

namespace lift {

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

/// Generators of a polyhedral cone: extreme rays modulo a lineality space.
/// All vectors are primitive integer vectors.
struct ConeGens {
  std::size_t dim = 0;
  std::vector<IVec> rays;
  std::vector<IVec> lineality;
};

/// Double description: extreme rays and lineality of
///   { x : ineq_i . x >= 0, eq_j . x = 0 }.
/// Exact integer arithmetic throughout.
ConeGens solve_cone(std::size_t dim, const std::vector<IVec>& ineqs,
                    const std::vector<IVec>& eqs = {});

/// Generators of the dual cone { y : g . y >= 0 for all generators g }.
ConeGens dual_cone(std::size_t dim, const std::vector<IVec>& generators);

/// A polyhedral cone given by ray generators (primitive, pairwise
/// distinct). The dual description is computed once on demand and cached;
/// membership, relative-interior and facet queries all go through it.
class Cone {
public:
  Cone() = default;
  Cone(std::size_t dim, std::vector<IVec> rays);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IVec>& rays() const { return rays_; }

  /// Rank of the ray span (the cone's dimension).
  std::size_t dim() const;

  bool contains(const IVec& v) const;
  bool contains(const RVec& v) const;
  /// Relative interior membership (strict inside every facet, inside the span).
  bool contains_relint(const IVec& v) const;
  bool contains_relint(const RVec& v) const;

  /// True iff the cone contains no line.
  bool is_strictly_convex() const;

  /// Irredundant generator set; requires a pointed cone.
  std::vector<IVec> extreme_rays() const;

  /// Extreme rays, sorted. Two cones are equal iff canonical_rays agree.
  std::vector<IVec> canonical_rays() const;

  /// H-representation: facet inequalities and span equalities.
  const ConeGens& dual() const;

  /// A point in the relative interior (sum of extreme rays).
  IVec relint_point() const;

  bool contains_cone(const Cone& other) const;

private:
  std::size_t dim_ = 0;
  std::vector<IVec> rays_;
  mutable std::shared_ptr<const ConeGens> dual_;  // lazily filled cache
};

bool cones_equal(const Cone& a, const Cone& b);

/// Intersection of two cones (ray description of the result).
Cone intersect(const Cone& a, const Cone& b);

/// Exact membership of v in the cone spanned by the given generators.
bool in_cone_hull(const std::vector<IVec>& generators, const IVec& v);

/// Maximal cones of the common refinement of all cones spanned by subsets
/// of the characters: the secondary fan's chambers.  Deterministic order
/// (lexicographic by sorted ray lists), independent of input order.
std::vector<Cone> secondary_fan_chambers(const std::vector<IVec>& characters);

/// The chamber whose relative interior contains omega, if any; nullopt
/// when omega sits on a wall or outside cone(characters).
std::optional<Cone> chamber_containing(const std::vector<IVec>& characters, const RVec& omega);

}  // namespace lift
