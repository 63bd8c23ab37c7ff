#include "lift/degeneration.hpp"

#include <algorithm>

namespace lift {

std::vector<IVec> nef_partition_forms(const WeightMatrix& wm) {
  const std::size_t nn = wm.R() - wm.r;
  std::vector<IVec> forms;
  for (std::size_t i = 0; i < wm.k; ++i) {
    IVec u(nn, Int(0));
    for (auto c : wm.part_cols[i]) u[c - wm.r] = 1;
    forms.push_back(std::move(u));
  }
  return forms;
}

IntMat distinguished_basis(const WeightMatrix& wm) {
  const std::size_t nn = wm.R() - wm.r;
  const std::size_t n = wm.n_vars();

  // column carrying each variable
  std::vector<std::size_t> col_of(n);
  for (std::size_t c = 0; c < wm.R(); ++c)
    if (wm.col_var[c]) col_of.at(*wm.col_var[c]) = c;

  // which part a column belongs to (k = none)
  std::vector<std::size_t> part_of(wm.R(), wm.k);
  for (std::size_t i = 0; i < wm.k; ++i)
    for (auto c : wm.part_cols[i]) part_of[c] = i;

  IntMat b(nn, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = col_of[v];
    b.at(c - wm.r, v) = 1;
    if (part_of[c] < wm.k) b.at(wm.s_cols[part_of[c]] - wm.r, v) -= 1;
  }
  return b;
}

Fan degeneration_fan(const StackyFan& sigma, const WeightMatrix& wm) {
  return restrict_fan(sigma.fan(), nef_partition_forms(wm), distinguished_basis(wm));
}

bool is_spanning_fan(const Fan& sigma_prime, const Polytope& newt) {
  return fans_equal(sigma_prime, spanning_fan(newt));
}

bool refines_spanning_fan(const Fan& sigma_prime, const Polytope& newt) {
  Fan sp = spanning_fan(newt);
  std::vector<Cone> span_cones;
  for (std::size_t i = 0; i < sp.max_cones().size(); ++i) span_cones.push_back(sp.cone(i));
  for (std::size_t i = 0; i < sigma_prime.max_cones().size(); ++i) {
    Cone c = sigma_prime.cone(i);
    bool inside = std::any_of(span_cones.begin(), span_cones.end(),
                              [&](const Cone& s) { return s.contains_cone(c); });
    if (!inside) return false;
  }
  return true;
}

std::vector<std::pair<IVec, IVec>> binomial_sections(const WeightMatrix& wm) {
  std::vector<std::pair<IVec, IVec>> out;
  for (std::size_t i = 0; i < wm.k; ++i) {
    IVec lhs(wm.R(), Int(0)), rhs(wm.R(), Int(0));
    for (std::size_t a = 0; a < wm.r; ++a) {
      auto l = wm.dilation_of_row(a);
      if (l[i] < 0) throw error("binomial_sections: negative l_{a,i}");
      lhs[a] = l[i];
    }
    for (auto c : wm.part_cols[i]) rhs[c] = 1;
    out.emplace_back(std::move(lhs), std::move(rhs));
  }
  return out;
}

DegenerationReport degeneration_report(const WeightMatrix& wm, const StackyFan& sigma,
                                       const Polytope& newt) {
  DegenerationReport rep;
  rep.forms = nef_partition_forms(wm);
  rep.basis = distinguished_basis(wm);
  rep.restricted = restrict_fan(sigma.fan(), rep.forms, rep.basis);
  rep.spanning = is_spanning_fan(rep.restricted, newt);
  rep.refines = rep.spanning || refines_spanning_fan(rep.restricted, newt);
  rep.sections = binomial_sections(wm);
  return rep;
}

}  // namespace lift
