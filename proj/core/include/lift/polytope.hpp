#pragma once

#include <utility>
#include <vector>

#include "lift/cone.hpp"
#include "lift/laurent.hpp"

namespace lift {

/// A lattice polytope with exact rational hull machinery. Vertices are
/// irredundant; facets (normal . x >= offset) and affine-hull equalities
/// (normal . x == offset) are computed exactly at construction.
class Polytope {
public:
  struct Facet {
    IVec normal;
    Int offset;
  };

  /// Convex hull of a nonempty set of lattice points.
  static Polytope hull(const std::vector<IVec>& points);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Facet>& equalities() const { return equalities_; }

  bool is_full_dim() const { return equalities_.empty(); }
  /// True iff 0 lies strictly inside (requires full dimension).
  bool origin_interior() const;

  bool contains(const IVec& p) const;
  /// Membership of p in the m-fold dilation m*P (m >= 0).
  bool contains_dilated(const IVec& p, const Int& m) const;

  std::pair<IVec, IVec> bounding_box() const;
  std::vector<IVec> lattice_points() const;

  bool operator==(const Polytope& other) const { return vertices_ == other.vertices_; }

private:
  std::size_t dim_ = 0;
  std::vector<IVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equalities_;
};

/// Newton polytope of a nonzero Laurent polynomial.
Polytope newton_polytope(const Laurent& f);

}  // namespace lift
