#include "lift/git.hpp"

#include <algorithm>
#include <map>

namespace lift {

Fan StackyFan::fan() const {
  std::vector<IVec> rays;
  for (const auto& r : rho) rays.push_back(primitive(r));
  return Fan(n, std::move(rays), max_cones);
}

bool covers(const std::vector<IVec>& characters, const RVec& omega,
            const std::vector<std::size_t>& subset) {
  if (subset.empty()) return false;
  std::vector<IVec> gens;
  for (auto i : subset) gens.push_back(characters.at(i));
  // Strictly positive combinations fill exactly the relative interior.
  return Cone(omega.size(), gens).contains_relint(omega);
}

std::vector<std::vector<std::size_t>> cover_sets(const std::vector<IVec>& characters,
                                                 const RVec& omega) {
  const std::size_t R = characters.size();
  if (R > 20) throw error("cover_sets: too many characters for subset enumeration");
  // The verdict depends only on the set of distinct character vectors.
  std::map<std::vector<IVec>, bool> memo;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << R); ++mask) {
    std::vector<std::size_t> subset;
    std::vector<IVec> key;
    for (std::size_t i = 0; i < R; ++i)
      if (mask & (std::size_t(1) << i)) {
        subset.push_back(i);
        key.push_back(characters[i]);
      }
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, covers(characters, omega, subset)).first;
    if (it->second) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_git_data(const GitData& g) {
  if (g.r == 0 || g.omega.size() != g.r) throw error("GIT data: bad rank/omega");
  for (const auto& d : g.characters)
    if (d.size() != g.r) throw error("GIT data: character length mismatch");
  Cone span(g.r, g.characters);
  if (span.dim() != g.r)
    throw error("GIT data: characters do not span a full-dimensional cone");
  if (!span.is_strictly_convex())
    throw error("GIT data: characters do not span a strictly convex cone");
  if (!span.contains(g.omega))
    throw error("GIT data: omega lies outside the cone of the characters");
}

IntMat character_matrix(const GitData& g) {
  IntMat d(g.r, g.R());
  for (std::size_t j = 0; j < g.R(); ++j)
    for (std::size_t i = 0; i < g.r; ++i) d.at(i, j) = g.characters[j][i];
  return d;
}

}  // namespace

StackyFan stacky_from_rho(const GitData& g, std::vector<IVec> rho) {
  check_git_data(g);
  const std::size_t R = g.R();
  const std::size_t n = R - g.r;

  if (!chamber_containing(g.characters, g.omega))
    throw error("omega lies on a wall of the secondary fan: the quotient is not Deligne-Mumford");

  // Maximal cones: complements of size-r covering subsets.
  std::vector<std::vector<std::size_t>> cones;
  std::vector<std::size_t> idx(R);
  for (std::size_t i = 0; i < R; ++i) idx[i] = i;
  std::vector<std::size_t> comb;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (comb.size() == g.r) {
      if (covers(g.characters, g.omega, comb)) {
        std::vector<std::size_t> cone;
        std::size_t k = 0;
        for (std::size_t i = 0; i < R; ++i) {
          if (k < comb.size() && comb[k] == i)
            ++k;
          else
            cone.push_back(i);
        }
        cones.push_back(std::move(cone));
      }
      return;
    }
    for (std::size_t i = from; i + (g.r - comb.size()) <= R; ++i) {
      comb.push_back(i);
      self(self, i + 1);
      comb.pop_back();
    }
  };
  rec(rec, 0);
  if (cones.empty()) throw error("no maximal cone: omega is not covered by any r characters");

  // Every character must define a ray of the fan.
  std::vector<bool> used(R, false);
  for (const auto& c : cones)
    for (auto i : c) used[i] = true;
  for (std::size_t i = 0; i < R; ++i)
    if (!used[i])
      throw error("character " + std::to_string(i + 1) + " defines no ray (unstable coordinate)");

  // Simpliciality of each maximal cone.
  for (const auto& c : cones) {
    IntMat m(c.size(), n);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t j = 0; j < n; ++j) m.at(a, j) = rho[c[a]][j];
    if (rank(m) != c.size())
      throw error("maximal cone is not simplicial (degenerate GIT data)");
  }

  std::sort(cones.begin(), cones.end());
  StackyFan s;
  s.n = n;
  s.rho = std::move(rho);
  s.max_cones = std::move(cones);
  return s;
}

StackyFan git_to_fan(const GitData& g) {
  check_git_data(g);
  const std::size_t R = g.R();
  if (R < g.r) throw error("git_to_fan: fewer characters than the torus rank");

  IntMat d = character_matrix(g);
  SmithResult snf = smith_decompose(d);
  for (std::size_t i = 0; i < g.r; ++i) {
    if (snf.s.at(i, i) == 0)
      throw error("characters do not span L* over Z");
    if (snf.s.at(i, i) != 1)
      throw error("cokernel of the character matrix has torsion: generic isotropy is non-trivial");
  }

  IntMat k = integer_kernel(d);  // R x n, saturated
  std::vector<IVec> rho;
  for (std::size_t i = 0; i < R; ++i) rho.push_back(k.row(i));
  return stacky_from_rho(g, std::move(rho));
}

GitData fan_to_git(const StackyFan& s, const std::optional<RVec>& omega_hint) {
  const std::size_t R = s.rho.size();
  if (R == 0) throw error("fan_to_git: empty fan");
  const std::size_t n = s.n;

  IntMat p(n, R);
  for (std::size_t j = 0; j < R; ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) = s.rho[j][i];

  SmithResult snf = smith_decompose(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.s.at(i, i) == 0) throw error("rays do not span N over Q");
    if (snf.s.at(i, i) != 1)
      throw error("cokernel of rho^T has torsion: the quotient presentation is not an orbifold");
  }

  IntMat k = integer_kernel(p);  // R x r
  const std::size_t r = k.cols();
  std::vector<IVec> characters;
  for (std::size_t i = 0; i < R; ++i) characters.push_back(k.row(i));

  // omega must lie interior to C = intersection over maximal cones of the
  // cones spanned by the off-cone characters.
  std::vector<IVec> ineqs, eqs;
  for (const auto& cone_idx : s.max_cones) {
    std::vector<IVec> gens;
    std::size_t t = 0;
    for (std::size_t i = 0; i < R; ++i) {
      if (t < cone_idx.size() && cone_idx[t] == i) {
        ++t;
        continue;
      }
      gens.push_back(characters[i]);
    }
    Cone span(r, gens);
    const ConeGens& dual = span.dual();
    ineqs.insert(ineqs.end(), dual.rays.begin(), dual.rays.end());
    eqs.insert(eqs.end(), dual.lineality.begin(), dual.lineality.end());
  }
  ConeGens cg = solve_cone(r, ineqs, eqs);
  if (!cg.lineality.empty()) throw error("fan_to_git: nef chamber contains a line");
  Cone c(r, cg.rays);
  if (c.dim() != r)
    throw error("fan_to_git: nef chamber has empty interior (coarse space not projective)");

  GitData g;
  g.r = r;
  g.characters = std::move(characters);
  if (omega_hint) {
    if (omega_hint->size() != r) throw error("fan_to_git: omega hint has wrong length");
    if (!c.contains_relint(*omega_hint))
      throw error("fan_to_git: omega hint is not interior to the nef chamber");
    g.omega = *omega_hint;
  } else {
    IVec pt = c.relint_point();
    g.omega.assign(pt.size(), Rat(0));
    for (std::size_t i = 0; i < pt.size(); ++i) g.omega[i] = Rat(pt[i]);
  }
  return g;
}

Ambient::Ambient(GitData g, StackyFan s) : git_(std::move(g)), stacky_(std::move(s)) {
  if (git_.R() != stacky_.rho.size()) throw error("Ambient: character/ray count mismatch");
}

const std::vector<IVec>& Ambient::wall_relations() const {
  if (walls_) return *walls_;
  const std::size_t R = git_.R();
  const std::size_t n = stacky_.n;
  std::vector<IVec> walls;
  const auto& cones = stacky_.max_cones;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(cones[i].begin(), cones[i].end(), cones[j].begin(),
                            cones[j].end(), std::back_inserter(shared));
      if (shared.size() != n - 1) continue;
      std::size_t a = 0, b = 0;
      for (auto x : cones[i])
        if (!std::binary_search(shared.begin(), shared.end(), x)) a = x;
      for (auto x : cones[j])
        if (!std::binary_search(shared.begin(), shared.end(), x)) b = x;

      std::vector<std::size_t> support = shared;
      support.push_back(a);
      support.push_back(b);
      IntMat m(n, support.size());
      for (std::size_t c = 0; c < support.size(); ++c)
        for (std::size_t row = 0; row < n; ++row) m.at(row, c) = stacky_.rho[support[c]][row];
      auto rel = kernel_line(m);
      if (!rel) throw error("wall has no unique relation (non-simplicial cone)");
      IVec full(R, Int(0));
      for (std::size_t c = 0; c < support.size(); ++c) full[support[c]] += (*rel)[c];
      if (full[a] == 0 || full[b] == 0)
        throw error("degenerate wall relation (non-simplicial cone)");
      if (full[a] < 0)
        for (auto& x : full) x = -x;
      if (full[b] <= 0)
        throw error("wall relation is not positive on both off-wall rays (invalid fan)");
      walls.push_back(std::move(full));
    }
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  walls_ = std::move(walls);
  return *walls_;
}

IVec Ambient::lift_class(const IVec& cls) const {
  const std::size_t R = git_.R();
  if (cls.size() != git_.r) throw error("lift_class: class length mismatch");
  IntMat d = character_matrix(git_);
  auto any = solve_integer(d, cls);
  if (!any) throw error("lift_class: class is not in the character lattice");

  // Bounds for the non-negative lift polytope {a >= 0, D a = cls} via its
  // vertices; empty polytope means no non-negative lift exists.
  std::vector<IVec> ineqs;
  for (std::size_t i = 0; i <= R; ++i) {
    IVec e(R + 1, Int(0));
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  std::vector<IVec> eqs;
  for (std::size_t row = 0; row < git_.r; ++row) {
    IVec e(R + 1, Int(0));
    e[0] = -cls[row];
    for (std::size_t j = 0; j < R; ++j) e[j + 1] = d.at(row, j);
    eqs.push_back(std::move(e));
  }
  ConeGens g = solve_cone(R + 1, ineqs, eqs);
  std::vector<Int> ub(R, Int(0));
  bool feasible = false;
  for (const auto& ray : g.rays) {
    if (ray[0] <= 0) continue;  // recession directions cannot occur here
    feasible = true;
    for (std::size_t i = 0; i < R; ++i) {
      Int ceil_div = (ray[i + 1] + ray[0] - 1) / ray[0];
      ub[i] = std::max(ub[i], ceil_div);
    }
  }
  if (!feasible) return *any;

  // Suffix cones for pruning the lexicographic search.
  std::vector<Cone> suffix;
  for (std::size_t i = 0; i <= R; ++i) {
    std::vector<IVec> gens(git_.characters.begin() + i, git_.characters.end());
    suffix.emplace_back(git_.r, gens);
  }

  IVec current(R, Int(0));
  IVec residual = cls;
  std::optional<IVec> best;
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (best) return true;
    bool zero = std::all_of(residual.begin(), residual.end(),
                            [](const Int& x) { return x == 0; });
    if (i == R) {
      if (zero) {
        best = current;
        return true;
      }
      return false;
    }
    if (!suffix[i].contains(residual)) return false;
    for (Int v = 0; v <= ub[i]; ++v) {
      current[i] = v;
      if (self(self, i + 1)) return true;
      for (std::size_t row = 0; row < git_.r; ++row) residual[row] -= git_.characters[i][row];
    }
    for (std::size_t row = 0; row < git_.r; ++row)
      residual[row] += (ub[i] + 1) * git_.characters[i][row];
    current[i] = 0;
    return false;
  };
  dfs(dfs, 0);
  return best ? *best : *any;
}

std::vector<Int> Ambient::wall_degrees(const IVec& lift) const {
  std::vector<Int> out;
  for (const auto& b : wall_relations()) out.push_back(dot(b, lift));
  return out;
}

bool Ambient::nef(const IVec& cls) const {
  for (const auto& deg : wall_degrees(lift_class(cls)))
    if (deg < 0) return false;
  return true;
}

bool Ambient::ample(const IVec& cls) const {
  for (const auto& deg : wall_degrees(lift_class(cls)))
    if (deg <= 0) return false;
  return true;
}

bool Ambient::convex(const IVec& cls) const {
  if (!nef(cls)) return false;
  IVec lift = lift_class(cls);
  const std::size_t n = stacky_.n;
  for (const auto& cone_idx : stacky_.max_cones) {
    // Local representative m_sigma with <m, rho_i> = -a_i on the cone.
    IntMat m(cone_idx.size(), n);
    std::vector<Int> rhs;
    for (std::size_t a = 0; a < cone_idx.size(); ++a) {
      for (std::size_t j = 0; j < n; ++j) m.at(a, j) = stacky_.rho[cone_idx[a]][j];
      rhs.push_back(-lift[cone_idx[a]]);
    }
    auto sol = solve_rational(m, rhs);
    if (!sol) throw error("convex: maximal cone is not simplicial");
    for (const auto& q : *sol)
      if (boost::multiprecision::denominator(q) != 1) return false;
  }
  return true;
}

PositivityTier Ambient::tier(const IVec& cls) const {
  if (ample(cls)) return PositivityTier::ample;
  if (nef(cls)) return PositivityTier::nef_not_ample;
  return PositivityTier::not_nef;
}

bool Ambient::orbifold() const {
  const std::size_t R = git_.R();
  IntMat p(stacky_.n, R);
  for (std::size_t j = 0; j < R; ++j)
    for (std::size_t i = 0; i < stacky_.n; ++i) p.at(i, j) = stacky_.rho[j][i];
  SmithResult snf = smith_decompose(p);
  for (std::size_t i = 0; i < stacky_.n; ++i)
    if (snf.s.at(i, i) != 1) return false;
  return true;
}

std::vector<Int> Ambient::max_cone_dets() const {
  std::vector<Int> dets;
  for (const auto& cone_idx : stacky_.max_cones) {
    if (cone_idx.size() != stacky_.n) {
      dets.push_back(0);
      continue;
    }
    IntMat m(stacky_.n, stacky_.n);
    for (std::size_t a = 0; a < cone_idx.size(); ++a)
      for (std::size_t j = 0; j < stacky_.n; ++j) m.at(a, j) = stacky_.rho[cone_idx[a]][j];
    dets.push_back(abs(det(m)));
  }
  return dets;
}

bool Ambient::smooth_fixed_point() const {
  for (const auto& d : max_cone_dets())
    if (d == 1) return true;
  return false;
}

IVec Ambient::anticanonical() const {
  IVec k(git_.r, Int(0));
  for (const auto& d : git_.characters)
    for (std::size_t i = 0; i < git_.r; ++i) k[i] += d[i];
  return k;
}

const char* tier_name(PositivityTier t) {
  switch (t) {
    case PositivityTier::ample:
      return "ample";
    case PositivityTier::nef_not_ample:
      return "nef_not_ample";
    default:
      return "not_nef";
  }
}

}  // namespace lift
