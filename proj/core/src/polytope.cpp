#include "lift/polytope.hpp"

#include <algorithm>

namespace lift {

Polytope Polytope::hull(const std::vector<IVec>& points) {
  if (points.empty()) throw error("convex hull of an empty point set");
  Polytope p;
  p.dim_ = points[0].size();
  const std::size_t n = p.dim_;

  // Homogenize: P = conv(points) corresponds to the cone over {(1, pt)}.
  std::vector<IVec> hp;
  for (const auto& pt : points) {
    if (pt.size() != n) throw error("hull: inconsistent point dimensions");
    IVec v(n + 1);
    v[0] = 1;
    for (std::size_t i = 0; i < n; ++i) v[i + 1] = pt[i];
    hp.push_back(std::move(v));
  }
  ConeGens dual = dual_cone(n + 1, hp);

  for (const auto& g : dual.rays) {
    IVec h(g.begin() + 1, g.end());
    if (std::all_of(h.begin(), h.end(), [](const Int& x) { return x == 0; }))
      continue;  // the trivial 1 >= 0 row of a pointed homogenization
    p.facets_.push_back({std::move(h), -g[0]});
  }
  for (const auto& l : dual.lineality) {
    IVec h(l.begin() + 1, l.end());
    p.equalities_.push_back({std::move(h), -l[0]});
  }

  // Vertices: extreme rays of the homogenization cone.
  ConeGens back = solve_cone(n + 1, dual.rays, dual.lineality);
  if (!back.lineality.empty()) throw error("hull: unbounded input");
  for (const auto& r : back.rays) {
    if (r[0] <= 0) throw error("hull: unbounded input");
    IVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (r[i + 1] % r[0] != 0) throw error("hull: non-lattice vertex");
      v[i] = r[i + 1] / r[0];
    }
    p.vertices_.push_back(std::move(v));
  }
  std::sort(p.vertices_.begin(), p.vertices_.end());
  return p;
}

bool Polytope::origin_interior() const {
  if (!is_full_dim()) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const Facet& f) { return f.offset < 0; });
}

bool Polytope::contains(const IVec& p) const { return contains_dilated(p, 1); }

bool Polytope::contains_dilated(const IVec& p, const Int& m) const {
  if (p.size() != dim_) throw error("contains: dimension mismatch");
  if (m < 0) throw error("contains_dilated: negative dilation");
  for (const auto& f : facets_)
    if (dot(f.normal, p) < m * f.offset) return false;
  for (const auto& e : equalities_)
    if (dot(e.normal, p) != m * e.offset) return false;
  return true;
}

std::pair<IVec, IVec> Polytope::bounding_box() const {
  IVec lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  return {lo, hi};
}

std::vector<IVec> Polytope::lattice_points() const {
  auto [lo, hi] = bounding_box();
  std::vector<IVec> out;
  IVec cur = lo;
  for (;;) {
    if (contains(cur)) out.push_back(cur);
    std::size_t i = 0;
    while (i < dim_) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      ++i;
    }
    if (i == dim_) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope newton_polytope(const Laurent& f) {
  if (f.is_zero()) throw error("Newton polytope of the zero polynomial");
  std::vector<IVec> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(to_int_vec(e));
  return Polytope::hull(pts);
}

}  // namespace lift
