#include "lift/scaffold.hpp"

#include <algorithm>
#include <map>

namespace lift {

void BasisPartition::validate() const {
  std::vector<bool> seen(dim, false);
  auto mark = [&](std::size_t i) {
    if (i >= dim) throw error("partition index out of range");
    if (seen[i]) throw error("partition indices are not disjoint");
    seen[i] = true;
  };
  for (const auto& part : parts) {
    if (part.empty()) throw error("empty part in partition");
    for (auto i : part) mark(i);
  }
  for (auto i : free_indices) mark(i);
  for (std::size_t i = 0; i < dim; ++i)
    if (!seen[i]) throw error("partition does not cover every coordinate");
  if (basis) {
    if (basis->rows() != dim || basis->cols() != dim)
      throw error("partition basis has wrong shape");
    if (!is_unimodular(*basis)) throw error("partition basis is not unimodular");
  }
}

Laurent strut_to_polynomial(const Strut& s, const BasisPartition& p) {
  if (s.dilations.size() != p.k()) throw error("strut dilation count != part count");
  if (s.translation.size() != p.dim) throw error("strut translation length mismatch");
  for (const auto& l : s.dilations)
    if (l < 0) throw error("negative strut dilation");
  Laurent f = Laurent::monomial(s.translation);
  for (std::size_t i = 0; i < p.k(); ++i) {
    Laurent simplex = Laurent::constant(p.dim, 1);
    for (auto j : p.parts[i]) {
      ExpVec e(p.dim, 0);
      e[j] = 1;
      simplex.add_term(e, 1);
    }
    f = f * simplex.pow(static_cast<unsigned>(s.dilations[i]));
  }
  return f;
}

Laurent scaffolding_sum(const Scaffolding& sc) {
  Laurent sum(sc.partition.dim);
  for (const auto& s : sc.struts) sum = sum + strut_to_polynomial(s, sc.partition);
  for (auto u : sc.points) {
    ExpVec e(sc.partition.dim, 0);
    e.at(u) = 1;
    sum.add_term(e, 1);
  }
  return sum;
}

Laurent to_partition_coords(const Laurent& f, const BasisPartition& p) {
  if (!p.basis) return f;
  return monomial_change(f, inverse_unimodular(*p.basis), ExpVec(p.dim, 0));
}

std::pair<bool, Int> validate_scaffolding(const Laurent& f, const Scaffolding& sc) {
  sc.partition.validate();
  if (f.dimension() != sc.partition.dim) throw error("dimension mismatch");
  Laurent diff = scaffolding_sum(sc) - to_partition_coords(f, sc.partition);
  Int c = diff.constant_term();
  if (diff.drop_constant().is_zero()) return {true, c};
  return {false, 0};
}

std::vector<Scaffolding> enumerate_scaffoldings(const Laurent& f, const BasisPartition& p,
                                                bool allow_shift) {
  p.validate();
  if (f.dimension() != p.dim) throw error("dimension mismatch");
  const std::size_t n = p.dim;
  const std::size_t k = p.k();

  Laurent g = to_partition_coords(f, p);

  std::vector<Scaffolding> results;
  if (g.is_zero()) {
    if (p.free_indices.empty()) results.push_back(Scaffolding{p, {}, {}, 0});
    return results;
  }

  Polytope newt = newton_polytope(g);
  auto [lo, hi] = newt.bounding_box();

  // The uneliminated points are all of U'; each must lie inside Newt(f).
  std::vector<std::size_t> points = p.free_indices;
  std::sort(points.begin(), points.end());
  Laurent point_sum(n);
  for (auto u : points) {
    ExpVec e(n, 0);
    e[u] = 1;
    point_sum.add_term(e, 1);
    if (!newt.contains(to_int_vec(e))) return results;
  }

  std::size_t part_of_coord_size = n;
  std::vector<std::size_t> part_of(part_of_coord_size, k);  // k = "free"
  for (std::size_t i = 0; i < k; ++i)
    for (auto j : p.parts[i]) part_of[j] = i;

  // Candidate struts: dilations bounded by the box width along each
  // part's coordinates, translations by box(P) minus the strut box, all
  // filtered by exact containment in Newt(f). Bare constants are skipped
  // (they only shuffle the shift and make enumeration non-terminating).
  struct Candidate {
    Strut strut;
    Laurent poly;
  };
  std::vector<Candidate> cands;

  std::vector<Int> caps(k, Int(0));
  for (std::size_t i = 0; i < k; ++i) {
    Int cap = -1;
    for (auto j : p.parts[i]) {
      Int w = hi[j] - lo[j];
      cap = (cap < 0 || w < cap) ? w : cap;
    }
    caps[i] = cap;
  }

  std::vector<Int> dil(k, Int(0));
  auto gen_translations = [&](const std::vector<Int>& l) {
    ExpVec width(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (part_of[j] < k) width[j] = static_cast<std::int64_t>(l[part_of[j]]);
    ExpVec tlo(n), thi(n);
    for (std::size_t j = 0; j < n; ++j) {
      tlo[j] = static_cast<std::int64_t>(lo[j]);
      thi[j] = static_cast<std::int64_t>(hi[j]) - width[j];
      if (thi[j] < tlo[j]) return;
    }
    ExpVec t = tlo;
    for (;;) {
      bool trivial = std::all_of(t.begin(), t.end(), [](auto x) { return x == 0; }) &&
                     std::all_of(l.begin(), l.end(), [](const Int& x) { return x == 0; });
      if (!trivial) {
        Strut s{l, t};
        Laurent poly = strut_to_polynomial(s, p);
        bool inside = true;
        for (const auto& [e, c] : poly.terms())
          if (!newt.contains(to_int_vec(e))) {
            inside = false;
            break;
          }
        if (inside) cands.push_back({std::move(s), std::move(poly)});
      }
      std::size_t j = 0;
      while (j < n) {
        if (t[j] < thi[j]) {
          ++t[j];
          break;
        }
        t[j] = tlo[j];
        ++j;
      }
      if (j == n) break;
    }
  };
  for (;;) {
    gen_translations(dil);
    std::size_t i = 0;
    while (i < k) {
      if (dil[i] < caps[i]) {
        ++dil[i];
        break;
      }
      dil[i] = 0;
      ++i;
    }
    if (i == k) break;
  }

  // Largest struts first. Ties: colex-descending on the translation (so a
  // strut dividing by an earlier variable precedes one dividing by a
  // later one), then lex-descending dilations.
  auto colex_less = [](const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.poly.term_count() != b.poly.term_count())
      return a.poly.term_count() > b.poly.term_count();
    if (a.strut.translation != b.strut.translation)
      return colex_less(b.strut.translation, a.strut.translation);
    return a.strut.dilations > b.strut.dilations;
  });

  // DFS over non-increasing candidate multisets, pruning on any negative
  // non-constant coefficient in the residual.
  std::vector<std::size_t> chosen;
  Laurent target = g + (-point_sum);

  auto try_close = [&](const Laurent& residual) {
    // residual must be constant now
    if (!residual.drop_constant().is_zero()) return;
    Int shift = -residual.constant_term();
    if (!allow_shift && shift != 0) return;
    Scaffolding sc;
    sc.partition = p;
    for (auto idx : chosen) sc.struts.push_back(cands[idx].strut);
    sc.points = points;
    sc.shift = shift;
    results.push_back(std::move(sc));
  };

  auto fits = [](const Laurent& residual, const Laurent& cand) {
    for (const auto& [e, c] : cand.terms()) {
      bool zero = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
      if (zero) continue;
      if (residual.coefficient(e) < c) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, const Laurent& residual, std::size_t start) -> void {
    try_close(residual);
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      if (!fits(residual, cands[idx].poly)) continue;
      chosen.push_back(idx);
      self(self, residual - cands[idx].poly, idx);
      chosen.pop_back();
    }
  };
  dfs(dfs, target, 0);

  std::sort(results.begin(), results.end(), [](const Scaffolding& a, const Scaffolding& b) {
    if (a.struts != b.struts) return a.struts < b.struts;
    if (a.points != b.points) return a.points < b.points;
    return a.shift < b.shift;
  });
  return results;
}

std::size_t WeightMatrix::n_vars() const {
  std::size_t n = 0;
  for (const auto& v : col_var)
    if (v) ++n;
  return n;
}

std::vector<IVec> WeightMatrix::characters() const {
  std::vector<IVec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

IVec WeightMatrix::bundle_class(std::size_t part) const {
  IVec cls(r, Int(0));
  for (auto j : part_cols.at(part))
    for (std::size_t i = 0; i < r; ++i) cls[i] += m.at(i, j);
  return cls;
}

std::vector<Int> WeightMatrix::dilation_of_row(std::size_t row) const {
  std::vector<Int> l(k, Int(0));
  for (std::size_t i = 0; i < k; ++i)
    for (auto j : part_cols[i]) l[i] += m.at(row, j);
  return l;
}

std::vector<IVec> WeightMatrix::distinguished_rho() const {
  const std::size_t nn = R() - r;
  std::vector<IVec> rho(R(), IVec(nn, Int(0)));
  for (std::size_t j = r; j < R(); ++j) rho[j][j - r] = 1;
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t j = r; j < R(); ++j) rho[b][j - r] = -m.at(b, j);
  return rho;
}

IVec WeightMatrix::anticanonical() const {
  IVec kclass(r, Int(0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < r; ++i) kclass[i] += m.at(i, j);
  return kclass;
}

WeightMatrix scaffolding_to_weight_matrix(const Scaffolding& sc,
                                          const std::vector<std::size_t>& s_positions) {
  sc.partition.validate();
  const std::size_t r = sc.struts.size();
  if (r == 0) throw error("weight matrix needs at least one strut");
  const std::size_t k = sc.partition.k();
  if (!s_positions.empty() && s_positions.size() != k)
    throw error("s_positions must have one entry per part");

  WeightMatrix wm;
  wm.r = r;
  wm.k = k;

  std::size_t R = r;
  for (const auto& part : sc.partition.parts) R += part.size() + 1;
  R += sc.points.size();
  wm.m = IntMat(r, R);
  wm.col_var.assign(R, std::nullopt);

  for (std::size_t b = 0; b < r; ++b) wm.m.at(b, b) = 1;

  std::size_t col = r;
  for (std::size_t i = 0; i < k; ++i) {
    auto vars = sc.partition.parts[i];
    std::sort(vars.begin(), vars.end());
    const std::size_t block = vars.size() + 1;
    const std::size_t spos = s_positions.empty() ? 0 : s_positions[i];
    if (spos >= block) throw error("s position outside part block");
    std::vector<std::size_t> cols(block);
    for (std::size_t q = 0; q < block; ++q) cols[q] = col + q;
    wm.s_cols.push_back(col + spos);
    std::size_t vi = 0;
    for (std::size_t q = 0; q < block; ++q) {
      if (q == spos) continue;
      wm.col_var[col + q] = vars[vi++];
    }
    wm.part_cols.push_back(cols);
    col += block;
  }
  std::vector<std::size_t> pts = sc.points;
  std::sort(pts.begin(), pts.end());
  for (auto u : pts) {
    wm.u_cols.push_back(col);
    wm.col_var[col] = u;
    ++col;
  }

  for (std::size_t a = 0; a < r; ++a) {
    const Strut& s = sc.struts[a];
    if (s.dilations.size() != k) throw error("strut arity mismatch");
    for (std::size_t i = 0; i < k; ++i) {
      Int ssum = s.dilations[i];
      for (auto j : sc.partition.parts[i]) ssum += Int(s.translation.at(j));
      for (auto c : wm.part_cols[i]) {
        if (c == wm.s_cols[i])
          wm.m.at(a, c) = ssum;
        else
          wm.m.at(a, c) = -Int(s.translation.at(*wm.col_var[c]));
      }
    }
    for (auto c : wm.u_cols) wm.m.at(a, c) = -Int(s.translation.at(*wm.col_var[c]));
  }
  return wm;
}

std::vector<Strut> struts_from_weight_matrix(const WeightMatrix& wm) {
  std::vector<Strut> struts;
  const std::size_t n = wm.n_vars();
  for (std::size_t a = 0; a < wm.r; ++a) {
    Strut s;
    s.dilations = wm.dilation_of_row(a);
    for (const auto& l : s.dilations)
      if (l < 0)
        throw error("negative row sum l_{b,i}: elimination does not yield a Laurent polynomial");
    s.translation.assign(n, 0);
    for (std::size_t c = 0; c < wm.R(); ++c)
      if (wm.col_var[c]) {
        Int t = -wm.m.at(a, c);
        s.translation.at(*wm.col_var[c]) = static_cast<std::int64_t>(t);
      }
    struts.push_back(std::move(s));
  }
  return struts;
}

Laurent forward_from_weight_matrix(const WeightMatrix& wm) {
  const std::size_t n = wm.n_vars();
  auto struts = struts_from_weight_matrix(wm);
  // Variables attached to each part; a size-one part S_i = {s_i} carries
  // none and its eliminated constraint contributes a bare 1^l factor.
  std::vector<std::vector<std::size_t>> part_vars(wm.k);
  for (std::size_t i = 0; i < wm.k; ++i)
    for (auto c : wm.part_cols[i])
      if (wm.col_var[c]) part_vars[i].push_back(*wm.col_var[c]);

  Laurent f(n);
  for (const auto& s : struts) {
    Laurent term = Laurent::monomial(s.translation);
    for (std::size_t i = 0; i < wm.k; ++i) {
      Laurent simplex = Laurent::constant(n, 1);
      for (auto v : part_vars[i]) {
        ExpVec e(n, 0);
        e[v] = 1;
        simplex.add_term(e, 1);
      }
      term = term * simplex.pow(static_cast<unsigned>(s.dilations[i]));
    }
    f = f + term;
  }
  for (auto c : wm.u_cols) {
    ExpVec e(n, 0);
    e[*wm.col_var[c]] = 1;
    f.add_term(e, 1);
  }
  f.add_term(ExpVec(n, 0), -Int(wm.k));
  return f;
}

WeightMatrix weight_matrix_from_git(const GitData& g, const ConvexPartition& cp) {
  const std::size_t R = g.R();
  const std::size_t r = cp.basis.size();
  if (r != g.r) throw error("basis size must equal the torus rank");
  std::vector<bool> seen(R, false);
  auto mark = [&](std::size_t i) {
    if (i >= R || seen[i]) throw error("convex partition is not a partition of [R]");
    seen[i] = true;
  };
  for (auto i : cp.basis) mark(i);
  for (const auto& part : cp.parts) {
    if (part.empty()) throw error("empty part S_i");
    for (auto i : part) mark(i);
  }
  for (auto i : cp.free_indices) mark(i);
  for (std::size_t i = 0; i < R; ++i)
    if (!seen[i]) throw error("convex partition is not a partition of [R]");
  if (cp.s_choices.size() != cp.parts.size())
    throw error("need one s choice per part");
  for (std::size_t i = 0; i < cp.parts.size(); ++i)
    if (std::find(cp.parts[i].begin(), cp.parts[i].end(), cp.s_choices[i]) ==
        cp.parts[i].end())
      throw error("s_i is not an element of S_i");

  // Clause (i): the chosen characters form a basis of L*.
  IntMat db(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) db.at(i, j) = g.characters[cp.basis[j]][i];
  if (!is_unimodular(db))
    throw error("clause (i) fails: chosen characters are not a basis of L*");
  IntMat dbinv = inverse_unimodular(db);

  // Clause (ii): omega is a non-negative combination of the basis.
  {
    Int denom = 1;
    for (const auto& q : g.omega)
      denom = denom / int_gcd(denom, boost::multiprecision::denominator(q)) *
              boost::multiprecision::denominator(q);
    std::vector<Int> scaled(r);
    for (std::size_t i = 0; i < r; ++i)
      scaled[i] = boost::multiprecision::numerator(g.omega[i]) *
                  (denom / boost::multiprecision::denominator(g.omega[i]));
    auto coeffs = dbinv.apply(scaled);
    for (const auto& c : coeffs)
      if (c < 0)
        throw error("clause (ii) fails: omega is not a non-negative combination of the basis");
  }

  // Column layout: B, then each part with s_i first, then U.
  WeightMatrix wm;
  wm.r = r;
  wm.k = cp.parts.size();
  wm.m = IntMat(r, R);
  wm.col_var.assign(R, std::nullopt);

  std::vector<std::size_t> order = cp.basis;
  std::size_t var = 0;
  std::size_t col = r;
  for (std::size_t i = 0; i < cp.parts.size(); ++i) {
    std::vector<std::size_t> cols;
    auto members = cp.parts[i];
    std::sort(members.begin(), members.end());
    order.push_back(cp.s_choices[i]);
    wm.s_cols.push_back(col);
    cols.push_back(col);
    ++col;
    for (auto j : members) {
      if (j == cp.s_choices[i]) continue;
      order.push_back(j);
      wm.col_var[col] = var++;
      cols.push_back(col);
      ++col;
    }
    wm.part_cols.push_back(std::move(cols));
  }
  auto free_sorted = cp.free_indices;
  std::sort(free_sorted.begin(), free_sorted.end());
  for (auto j : free_sorted) {
    order.push_back(j);
    wm.u_cols.push_back(col);
    wm.col_var[col] = var++;
    ++col;
  }

  for (std::size_t c = 0; c < R; ++c) {
    auto img = dbinv.apply(g.characters[order[c]]);
    for (std::size_t i = 0; i < r; ++i) wm.m.at(i, c) = img[i];
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (wm.m.at(i, j) != Int(i == j ? 1 : 0))
        throw error("internal: leading block is not the identity");
  return wm;
}

Laurent forward_mirror(const GitData& g, const ConvexPartition& cp) {
  WeightMatrix wm = weight_matrix_from_git(g, cp);
  return forward_from_weight_matrix(wm);  // clause (v) checked inside
}

InversionReport invert(const Laurent& f, const Scaffolding& sc,
                       const std::vector<std::size_t>& s_positions) {
  auto [ok, shift] = validate_scaffolding(f, sc);
  if (!ok) throw error("invert: scaffolding does not sum to f up to a constant");

  InversionReport rep;
  rep.wm = scaffolding_to_weight_matrix(sc, s_positions);
  rep.shift = shift;

  auto chars = rep.wm.characters();
  const std::size_t r = rep.wm.r;
  Cone span(r, chars);
  if (span.dim() != r || !span.is_strictly_convex()) {
    rep.strictly_convex = false;
    rep.failure =
        "characters do not span a strictly convex full-dimensional cone; "
        "no GIT quotient exists for this scaffolding";
    return rep;
  }
  rep.strictly_convex = true;

  auto rho = rep.wm.distinguished_rho();
  for (const auto& chamber : secondary_fan_chambers(chars)) {
    ChamberReport cr;
    cr.chamber_rays = chamber.canonical_rays();
    IVec pt = chamber.relint_point();
    cr.omega.assign(pt.size(), Rat(0));
    for (std::size_t i = 0; i < pt.size(); ++i) cr.omega[i] = Rat(pt[i]);

    GitData git{r, chars, cr.omega};
    try {
      StackyFan stacky = stacky_from_rho(git, rho);
      Ambient amb(git, stacky);
      cr.ok = true;
      cr.deligne_mumford = true;  // omega is an interior chamber point
      cr.orbifold = amb.orbifold();
      cr.smooth_fixed_point = amb.smooth_fixed_point();
      cr.omega_nonneg_on_basis =
          std::all_of(cr.omega.begin(), cr.omega.end(), [](const Rat& q) { return q >= 0; });
      cr.dilations_nonneg = true;
      for (std::size_t a = 0; a < r; ++a)
        for (const auto& l : rep.wm.dilation_of_row(a))
          if (l < 0) cr.dilations_nonneg = false;

      cr.all_bundles_convex = true;
      for (std::size_t i = 0; i < rep.wm.k; ++i) {
        BundleReport br;
        br.cls = rep.wm.bundle_class(i);
        br.lift = amb.lift_class(br.cls);
        br.nef = amb.nef(br.cls);
        br.ample = amb.ample(br.cls);
        br.convex = amb.convex(br.cls);
        cr.all_bundles_convex = cr.all_bundles_convex && br.convex;
        cr.bundles.push_back(std::move(br));
      }

      cr.anticanonical = amb.anticanonical();
      cr.anticanonical_tier = amb.tier(cr.anticanonical);
      cr.fano_class = cr.anticanonical;
      for (std::size_t i = 0; i < rep.wm.k; ++i) {
        auto cls = rep.wm.bundle_class(i);
        for (std::size_t j = 0; j < r; ++j) cr.fano_class[j] -= cls[j];
      }
      cr.fano_tier = amb.tier(cr.fano_class);
      cr.max_cone_dets = amb.max_cone_dets();
      cr.stacky = std::move(stacky);
    } catch (const error& e) {
      cr.ok = false;
      cr.failure = e.what();
    }
    rep.chambers.push_back(std::move(cr));
  }
  return rep;
}

std::vector<IntMat> enumerate_bases(const Polytope& p, std::int64_t entry_bound,
                                    std::int64_t box_bound) {
  const std::size_t n = p.ambient_dim();
  // Candidate rows: functionals bounded on every vertex by the box.
  std::vector<IVec> rows;
  IVec cur(n, Int(-entry_bound));
  for (;;) {
    Int worst = 0;
    for (const auto& v : p.vertices()) worst = std::max(worst, Int(abs(dot(cur, v))));
    bool nonzero = std::any_of(cur.begin(), cur.end(), [](const Int& x) { return x != 0; });
    if (nonzero && worst <= box_bound) rows.push_back(cur);
    std::size_t i = 0;
    while (i < n) {
      if (cur[i] < entry_bound) {
        ++cur[i];
        break;
      }
      cur[i] = -entry_bound;
      ++i;
    }
    if (i == n) break;
  }

  std::vector<IntMat> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self) -> void {
    if (pick.size() == n) {
      IntMat m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[pick[i]][j];
      // m maps P into the box; the basis to scaffold against is its inverse
      if (is_unimodular(m)) out.push_back(inverse_unimodular(m));
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      pick.push_back(i);
      // partial rank prune
      IntMat m(pick.size(), n);
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t j = 0; j < n; ++j) m.at(a, j) = rows[pick[a]][j];
      if (rank(m) == pick.size()) self(self);
      pick.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace lift
