#include "lift/fan.hpp"

#include <algorithm>
#include <map>

namespace lift {

Fan::Fan(std::size_t ambient, std::vector<IVec> rays,
         std::vector<std::vector<std::size_t>> max_cones)
    : ambient_(ambient), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  for (auto& r : rays_) {
    if (r.size() != ambient_) throw error("fan ray length mismatch");
    r = primitive(std::move(r));
  }
  for (auto& c : cones_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (auto i : c)
      if (i >= rays_.size()) throw error("fan cone references a missing ray");
  }
}

Fan Fan::from_cones(std::size_t ambient, const std::vector<std::vector<IVec>>& cones) {
  // Reduce each cone to extreme rays, drop dominated cones, share rays.
  std::vector<Cone> cs;
  for (const auto& gens : cones) {
    Cone c(ambient, gens);
    if (c.rays().empty()) continue;
    cs.emplace_back(ambient, c.canonical_rays());
  }
  std::vector<bool> keep(cs.size(), true);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (cs[j].contains_cone(cs[i])) {
        // drop i if strictly contained, or if equal keep the smaller index
        if (!cs[i].contains_cone(cs[j]) || j < i) keep[i] = false;
      }
    }

  std::vector<IVec> rays;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (keep[i])
      for (const auto& r : cs[i].rays()) rays.push_back(r);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  std::vector<std::vector<std::size_t>> idx_cones;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!keep[i]) continue;
    std::vector<std::size_t> idx;
    for (const auto& r : cs[i].rays())
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    std::sort(idx.begin(), idx.end());
    idx_cones.push_back(std::move(idx));
  }
  std::sort(idx_cones.begin(), idx_cones.end());
  idx_cones.erase(std::unique(idx_cones.begin(), idx_cones.end()), idx_cones.end());
  return Fan(ambient, std::move(rays), std::move(idx_cones));
}

Cone Fan::cone(std::size_t index) const { return Cone(ambient_, cone_rays(index)); }

std::vector<IVec> Fan::cone_rays(std::size_t index) const {
  std::vector<IVec> out;
  for (auto i : cones_.at(index)) out.push_back(rays_[i]);
  return out;
}

bool Fan::is_simplicial() const {
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    auto gens = cone_rays(k);
    IntMat m(gens.size(), ambient_);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m.at(i, j) = gens[i][j];
    if (rank(m) != gens.size()) return false;
  }
  return true;
}

bool Fan::is_complete() const {
  if (cones_.empty()) return ambient_ == 0;
  // Count maximal cones through every codimension-1 face.
  std::map<std::vector<IVec>, int> walls;
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    Cone c = cone(k);
    if (c.dim() != ambient_) return false;
    auto ext = c.canonical_rays();
    for (const auto& h : c.dual().rays) {
      std::vector<IVec> face;
      for (const auto& r : ext)
        if (dot(h, r) == 0) face.push_back(r);
      std::sort(face.begin(), face.end());
      ++walls[face];
    }
  }
  for (const auto& [face, count] : walls)
    if (count != 2) return false;
  return true;
}

Fan Fan::canonical() const {
  std::vector<IVec> sorted = rays_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    std::vector<std::size_t> idx;
    for (const auto& r : cone_rays(k))
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin()));
    std::sort(idx.begin(), idx.end());
    cones.push_back(std::move(idx));
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return Fan(ambient_, std::move(sorted), std::move(cones));
}

bool fans_equal(const Fan& a, const Fan& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  Fan ca = a.canonical(), cb = b.canonical();
  return ca.rays() == cb.rays() && ca.max_cones() == cb.max_cones();
}

namespace {

bool is_face_of(const Cone& face, const Cone& c) {
  if (!c.contains_cone(face)) return false;
  // Constraints of c tight on all of face cut out exactly face.
  std::vector<IVec> tight;
  for (const auto& h : c.dual().rays) {
    bool all_zero = true;
    for (const auto& r : face.rays())
      if (dot(h, r) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) tight.push_back(h);
  }
  std::vector<IVec> eqs = c.dual().lineality;
  eqs.insert(eqs.end(), tight.begin(), tight.end());
  ConeGens cut = solve_cone(c.ambient_dim(), c.dual().rays, eqs);
  if (!cut.lineality.empty()) return false;
  Cone g(c.ambient_dim(), cut.rays);
  return cones_equal(g, face);
}

}  // namespace

bool fan_is_valid(const Fan& f) {
  std::vector<Cone> cs;
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) cs.push_back(f.cone(k));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Cone meet = intersect(cs[i], cs[j]);
      if (!is_face_of(meet, cs[i]) || !is_face_of(meet, cs[j])) return false;
    }
  return true;
}

Fan spanning_fan(const Polytope& p) {
  if (!p.origin_interior())
    throw error("spanning fan: origin is not strictly interior to the polytope");
  std::vector<IVec> rays;
  for (const auto& v : p.vertices()) rays.push_back(primitive(v));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  std::vector<std::vector<std::size_t>> cones;
  for (const auto& fct : p.facets()) {
    std::vector<std::size_t> idx;
    for (const auto& v : p.vertices()) {
      if (dot(fct.normal, v) != fct.offset) continue;
      IVec r = primitive(v);
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    }
    std::sort(idx.begin(), idx.end());
    cones.push_back(std::move(idx));
  }
  std::sort(cones.begin(), cones.end());
  return Fan(p.ambient_dim(), std::move(rays), std::move(cones));
}

Fan restrict_fan(const Fan& fan, const std::vector<IVec>& equations,
                 const std::optional<IntMat>& basis) {
  const std::size_t d = fan.ambient_dim();
  if (equations.empty() && !basis) return fan;

  IntMat b;
  if (basis) {
    b = *basis;
    if (b.rows() != d) throw error("restrict_fan: basis rows do not match ambient dim");
  } else {
    IntMat e(equations.size(), d);
    for (std::size_t i = 0; i < equations.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) e.at(i, j) = equations[i][j];
    b = integer_kernel(e);
  }
  const std::size_t m = b.cols();

  std::vector<std::vector<IVec>> sliced;
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
    Cone c = fan.cone(k);
    std::vector<IVec> eqs = c.dual().lineality;
    eqs.insert(eqs.end(), equations.begin(), equations.end());
    ConeGens g = solve_cone(d, c.dual().rays, eqs);
    if (!g.lineality.empty()) throw error("restrict_fan: sliced cone contains a line");
    if (g.rays.empty()) continue;
    std::vector<IVec> in_basis;
    for (const auto& r : g.rays) {
      auto coords = solve_integer(b, r);
      if (!coords) throw error("restrict_fan: ray is not in the sublattice");
      in_basis.push_back(primitive(std::move(*coords)));
    }
    sliced.push_back(std::move(in_basis));
  }
  return Fan::from_cones(m, sliced);
}

}  // namespace lift
