#include "lift/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lift {

namespace {

std::size_t rank_of_rows(const std::vector<IVec>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  IntMat m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  return rank(m);
}

void sort_unique(std::vector<IVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConeGens solve_cone(std::size_t dim, const std::vector<IVec>& ineqs,
                    const std::vector<IVec>& eqs) {
  // Start from the whole space and insert one constraint at a time.
  std::vector<IVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IVec e(dim, Int(0));
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<IVec> rays;
  std::vector<IVec> processed;

  std::vector<IVec> constraints;
  for (const auto& e : eqs) {
    IVec neg(e);
    for (auto& x : neg) x = -x;
    constraints.push_back(e);
    constraints.push_back(neg);
  }
  for (const auto& a : ineqs) constraints.push_back(a);

  auto is_zero_vec = [](const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
  };

  for (const auto& a : constraints) {
    if (a.size() != dim) throw error("solve_cone: constraint length mismatch");
    if (is_zero_vec(a)) continue;

    // Lineality elimination step.
    std::size_t hit = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        hit = i;
        break;
      }
    if (hit < lin.size()) {
      IVec l0 = lin[hit];
      Int d0 = dot(a, l0);
      if (d0 < 0) {
        for (auto& x : l0) x = -x;
        d0 = -d0;
      }
      std::vector<IVec> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == hit) continue;
        Int di = dot(a, lin[i]);
        IVec v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = d0 * lin[i][j] - di * l0[j];
        new_lin.push_back(primitive(std::move(v)));
      }
      for (auto& r : rays) {
        Int dr = dot(a, r);
        IVec v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = d0 * r[j] - dr * l0[j];
        r = primitive(std::move(v));
      }
      lin = std::move(new_lin);
      rays.push_back(std::move(l0));
      sort_unique(rays);
      processed.push_back(a);
      continue;
    }

    // Ray splitting step.
    std::vector<IVec> pos, zero, neg;
    std::vector<Int> dpos, dneg;
    for (auto& r : rays) {
      Int d = dot(a, r);
      if (d > 0) {
        pos.push_back(r);
        dpos.push_back(d);
      } else if (d < 0) {
        neg.push_back(r);
        dneg.push_back(d);
      } else {
        zero.push_back(r);
      }
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;  // constraint already satisfied
    }

    const std::size_t target =
        (dim - lin.size() >= 2) ? dim - lin.size() - 2 : 0;
    std::vector<IVec> next = zero;
    next.insert(next.end(), pos.begin(), pos.end());
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t k = 0; k < neg.size(); ++k) {
        // Adjacency: constraints tight at both rays must cut a 2-face.
        std::vector<IVec> tight;
        for (const auto& c : processed)
          if (dot(c, pos[i]) == 0 && dot(c, neg[k]) == 0) tight.push_back(c);
        if (rank_of_rows(tight, dim) != target) continue;
        IVec v(dim);
        for (std::size_t j = 0; j < dim; ++j)
          v[j] = -dneg[k] * pos[i][j] + dpos[i] * neg[k][j];
        v = primitive(std::move(v));
        if (!is_zero_vec(v)) next.push_back(std::move(v));
      }
    sort_unique(next);
    rays = std::move(next);
    processed.push_back(a);
  }

  ConeGens out;
  out.dim = dim;
  out.rays = std::move(rays);
  out.lineality = std::move(lin);
  sort_unique(out.rays);
  return out;
}

ConeGens dual_cone(std::size_t dim, const std::vector<IVec>& generators) {
  return solve_cone(dim, generators);
}

Cone::Cone(std::size_t dim, std::vector<IVec> rays) : dim_(dim) {
  for (auto& r : rays) {
    if (r.size() != dim_) throw error("ray length does not match ambient dimension");
    r = primitive(std::move(r));
    if (std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; })) continue;
    rays_.push_back(std::move(r));
  }
  sort_unique(rays_);
}

std::size_t Cone::dim() const { return rank_of_rows(rays_, dim_); }

const ConeGens& Cone::dual() const {
  if (!dual_) dual_ = std::make_shared<const ConeGens>(dual_cone(dim_, rays_));
  return *dual_;
}

bool Cone::contains(const IVec& v) const {
  const ConeGens& d = dual();
  for (const auto& g : d.rays)
    if (dot(g, v) < 0) return false;
  for (const auto& l : d.lineality)
    if (dot(l, v) != 0) return false;
  return true;
}

bool Cone::contains(const RVec& v) const {
  const ConeGens& d = dual();
  for (const auto& g : d.rays)
    if (dot(g, v) < 0) return false;
  for (const auto& l : d.lineality)
    if (dot(l, v) != 0) return false;
  return true;
}

bool Cone::contains_relint(const IVec& v) const {
  const ConeGens& d = dual();
  for (const auto& g : d.rays)
    if (dot(g, v) <= 0) return false;
  for (const auto& l : d.lineality)
    if (dot(l, v) != 0) return false;
  return true;
}

bool Cone::contains_relint(const RVec& v) const {
  const ConeGens& d = dual();
  for (const auto& g : d.rays)
    if (dot(g, v) <= 0) return false;
  for (const auto& l : d.lineality)
    if (dot(l, v) != 0) return false;
  return true;
}

bool Cone::is_strictly_convex() const {
  const ConeGens& d = dual();
  std::vector<IVec> all = d.rays;
  all.insert(all.end(), d.lineality.begin(), d.lineality.end());
  return rank_of_rows(all, dim_) == dim_;
}

std::vector<IVec> Cone::extreme_rays() const {
  const ConeGens& d = dual();
  ConeGens back = solve_cone(dim_, d.rays, d.lineality);
  if (!back.lineality.empty())
    throw error("extreme_rays: cone is not strictly convex");
  return back.rays;
}

std::vector<IVec> Cone::canonical_rays() const {
  auto r = extreme_rays();
  std::sort(r.begin(), r.end());
  return r;
}

IVec Cone::relint_point() const {
  IVec p(dim_, Int(0));
  for (const auto& r : extreme_rays())
    for (std::size_t i = 0; i < dim_; ++i) p[i] += r[i];
  return p;
}

bool Cone::contains_cone(const Cone& other) const {
  return std::all_of(other.rays().begin(), other.rays().end(),
                     [&](const IVec& r) { return contains(r); });
}

bool cones_equal(const Cone& a, const Cone& b) {
  return a.ambient_dim() == b.ambient_dim() && a.canonical_rays() == b.canonical_rays();
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw error("intersect: dimension mismatch");
  const ConeGens& da = a.dual();
  const ConeGens& db = b.dual();
  std::vector<IVec> ineqs = da.rays;
  ineqs.insert(ineqs.end(), db.rays.begin(), db.rays.end());
  std::vector<IVec> eqs = da.lineality;
  eqs.insert(eqs.end(), db.lineality.begin(), db.lineality.end());
  ConeGens g = solve_cone(a.ambient_dim(), ineqs, eqs);
  if (!g.lineality.empty()) throw error("intersect: result is not strictly convex");
  return Cone(a.ambient_dim(), g.rays);
}

bool in_cone_hull(const std::vector<IVec>& generators, const IVec& v) {
  return Cone(v.size(), generators).contains(v);
}

namespace {

std::vector<IVec> distinct_primitive(const std::vector<IVec>& characters) {
  std::vector<IVec> d;
  for (auto c : characters) {
    c = primitive(std::move(c));
    if (std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; }))
      throw error("zero character");
    d.push_back(std::move(c));
  }
  sort_unique(d);
  return d;
}

// All size-k index subsets of [0, n).
void subsets_rec(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k <= n) subsets_rec(n, k, 0, cur, out);
  return out;
}

// Full-rank simplicial cones spanned by r-subsets of the distinct characters.
std::vector<Cone> simplicial_subcones(const std::vector<IVec>& distinct, std::size_t r) {
  std::vector<Cone> cones;
  for (const auto& idx : subsets(distinct.size(), r)) {
    std::vector<IVec> gens;
    for (auto i : idx) gens.push_back(distinct[i]);
    if (rank_of_rows(gens, r) != r) continue;
    cones.emplace_back(r, gens);
  }
  return cones;
}

// GKZ chamber containing the sample: intersection of all full-rank
// simplicial subset cones that contain it.
template <typename Vec>
std::optional<Cone> gkz_chamber(const std::vector<Cone>& simp, std::size_t r, const Vec& sample) {
  std::vector<IVec> ineqs;
  bool any = false;
  for (const auto& c : simp)
    if (c.contains(sample)) {
      any = true;
      const ConeGens& d = c.dual();
      ineqs.insert(ineqs.end(), d.rays.begin(), d.rays.end());
      ineqs.insert(ineqs.end(), d.lineality.begin(), d.lineality.end());
      for (const auto& l : d.lineality) {
        IVec neg(l);
        for (auto& x : neg) x = -x;
        ineqs.push_back(std::move(neg));
      }
    }
  if (!any) return std::nullopt;
  ConeGens g = solve_cone(r, ineqs);
  if (!g.lineality.empty()) throw error("secondary fan: chamber is not strictly convex");
  return Cone(r, g.rays);
}

}  // namespace

std::vector<Cone> secondary_fan_chambers(const std::vector<IVec>& characters) {
  if (characters.empty()) throw error("secondary fan of an empty character list");
  const std::size_t r = characters[0].size();
  std::vector<IVec> distinct = distinct_primitive(characters);
  if (rank_of_rows(distinct, r) != r)
    throw error("degenerate characters: they do not span a full-dimensional cone");
  Cone total(r, distinct);
  if (!total.is_strictly_convex())
    throw error("characters do not span a strictly convex cone");

  // Wall hyperplane normals from (r-1)-subsets spanning a hyperplane.
  std::vector<IVec> normals;
  if (r >= 1) {
    for (const auto& idx : subsets(distinct.size(), r - 1)) {
      std::vector<IVec> rows;
      for (auto i : idx) rows.push_back(distinct[i]);
      if (rank_of_rows(rows, r) + 1 != r) continue;
      IntMat m(rows.size(), r);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) m.at(i, j) = rows[i][j];
      auto n = kernel_line(m);
      if (!n) continue;
      IVec h = *n;
      for (auto& x : h)
        if (x != 0) {
          if (x < 0)
            for (auto& y : h) y = -y;
          break;
        }
      normals.push_back(std::move(h));
    }
  }
  sort_unique(normals);

  // Overcut cone(D) by every wall hyperplane; cells are inequality lists.
  std::vector<std::vector<IVec>> cells;
  {
    const ConeGens& d = total.dual();
    std::vector<IVec> base = d.rays;
    cells.push_back(std::move(base));
  }
  for (const auto& h : normals) {
    IVec hneg(h);
    for (auto& x : hneg) x = -x;
    std::vector<std::vector<IVec>> next;
    for (const auto& cell : cells) {
      for (const IVec& side : {h, hneg}) {
        auto ineqs = cell;
        ineqs.push_back(side);
        ConeGens g = solve_cone(r, ineqs);
        if (rank_of_rows(g.rays, r) == r) next.push_back(std::move(ineqs));
      }
    }
    cells = std::move(next);
  }

  std::vector<Cone> simp = simplicial_subcones(distinct, r);

  std::vector<Cone> chambers;
  std::vector<std::vector<IVec>> seen;
  for (const auto& cell : cells) {
    ConeGens g = solve_cone(r, cell);
    IVec sample(r, Int(0));
    for (const auto& ray : g.rays)
      for (std::size_t i = 0; i < r; ++i) sample[i] += ray[i];
    auto ch = gkz_chamber(simp, r, sample);
    if (!ch) continue;
    auto key = ch->canonical_rays();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    chambers.push_back(Cone(r, key));
  }
  std::sort(chambers.begin(), chambers.end(), [](const Cone& a, const Cone& b) {
    return a.rays() < b.rays();
  });
  return chambers;
}

std::optional<Cone> chamber_containing(const std::vector<IVec>& characters, const RVec& omega) {
  if (characters.empty()) return std::nullopt;
  const std::size_t r = characters[0].size();
  std::vector<IVec> distinct = distinct_primitive(characters);
  if (rank_of_rows(distinct, r) != r)
    throw error("degenerate characters: they do not span a full-dimensional cone");
  std::vector<Cone> simp = simplicial_subcones(distinct, r);
  auto ch = gkz_chamber(simp, r, omega);
  if (!ch) return std::nullopt;
  if (ch->dim() != r) return std::nullopt;
  if (!ch->contains_relint(omega)) return std::nullopt;
  return ch;
}

}  // namespace lift
