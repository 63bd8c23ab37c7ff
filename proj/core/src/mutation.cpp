#include "lift/mutation.hpp"

#include <algorithm>
#include <map>

#include "lift/degeneration.hpp"

namespace lift {

void Mutation::validate(std::size_t dim) const {
  if (weight.size() != dim) throw error("mutation weight length mismatch");
  if (std::all_of(weight.begin(), weight.end(), [](const Int& x) { return x == 0; }))
    throw error("mutation weight must be non-zero");
  if (factor.dimension() != dim) throw error("mutation factor dimension mismatch");
  if (factor.is_zero()) throw error("mutation factor must be non-zero");
  for (const auto& [e, c] : factor.terms())
    if (dot(weight, to_int_vec(e)) != 0)
      throw error("mutation factor is not supported on the weight's orthogonal hyperplane");
}

Laurent exact_divide(const Laurent& f, const Laurent& g) {
  if (f.dimension() != g.dimension()) throw error("exact_divide: dimension mismatch");
  if (g.is_zero()) throw error("exact_divide: division by zero");
  if (f.is_zero()) return Laurent(f.dimension());
  const std::size_t n = f.dimension();

  // Component-wise exponent bounds for the quotient: box(q) = box(f) - box(g).
  ExpVec fmin(n), fmax(n), gmin(n), gmax(n);
  auto box = [&](const Laurent& p, ExpVec& mn, ExpVec& mx) {
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (first || e[i] < mn[i]) mn[i] = e[i];
        if (first || e[i] > mx[i]) mx[i] = e[i];
      }
      first = false;
    }
  };
  box(f, fmin, fmax);
  box(g, gmin, gmax);

  const auto& glead = *g.terms().rbegin();
  Laurent q(n);
  Laurent rem = f;
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    if (rlead.second % glead.second != 0)
      throw not_laurent_error("quotient is not integral");
    ExpVec t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = rlead.first[i] - glead.first[i];
      if (t[i] < fmin[i] - gmin[i] || t[i] > fmax[i] - gmax[i])
        throw not_laurent_error("not divisible");
    }
    Int c = rlead.second / glead.second;
    q.add_term(t, c);
    rem = rem - (g * Laurent::monomial(t, c));
  }
  return q;
}

Laurent mutate(const Laurent& f, const Mutation& m) {
  m.validate(f.dimension());
  // Group terms of f by height under the weight.
  std::map<Int, Laurent> slices;
  for (const auto& [e, c] : f.terms()) {
    Int h = dot(m.weight, to_int_vec(e));
    auto it = slices.find(h);
    if (it == slices.end()) it = slices.emplace(h, Laurent(f.dimension())).first;
    it->second.add_term(e, c);
  }
  Laurent out(f.dimension());
  for (auto& [h, slice] : slices) {
    if (h == 0) {
      out = out + slice;
    } else if (h > 0) {
      out = out + slice * m.factor.pow(static_cast<unsigned>(h));
    } else {
      Laurent denom = m.factor.pow(static_cast<unsigned>(-h));
      try {
        out = out + exact_divide(slice, denom);
      } catch (const not_laurent_error&) {
        throw not_laurent_error("mutation is not Laurent: the height " + h.str() +
                                " slice is not divisible by F^" + Int(-h).str());
      }
    }
  }
  return out;
}

bool amenable_check(const std::vector<IVec>& weights, const std::vector<IVec>& rho,
                    const std::vector<std::vector<std::size_t>>& parts) {
  if (weights.size() != parts.size()) return false;
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t l = 0; l < parts.size(); ++l)
      for (auto j : parts[l]) {
        Int v = dot(weights[i], rho.at(j));
        if (l == i && v != -1) return false;
        if (l < i && v != 0) return false;
        if (l > i && v < 0) return false;
      }
  return true;
}

ChartResult compose_charts(const WeightMatrix& wm) {
  std::vector<IVec> weights;
  for (auto& u : nef_partition_forms(wm)) {
    IVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
    weights.push_back(std::move(w));
  }
  return compose_charts(wm, weights);
}

ChartResult compose_charts(const WeightMatrix& wm, const std::vector<IVec>& weights) {
  const std::size_t nn = wm.R() - wm.r;
  auto rho = wm.distinguished_rho();

  std::vector<std::vector<std::size_t>> parts = wm.part_cols;
  if (!amenable_check(weights, rho, parts))
    throw error("weights are not an amenable collection for this nef partition");

  auto mono_exp = [&](const IVec& v) {
    ExpVec e(nn);
    for (std::size_t i = 0; i < nn; ++i) e[i] = static_cast<std::int64_t>(v[i]);
    return e;
  };

  ChartResult res;
  for (std::size_t i = 0; i < wm.k; ++i) {
    Laurent gi(nn);
    for (auto j : wm.part_cols[i]) gi.add_term(mono_exp(rho[j]), 1);
    for (std::size_t l = 0; l < i; ++l)
      gi = mutate(gi, Mutation{weights[l], res.factors[l]});
    // divide by the monomial x^{rho_{s_i}}
    ExpVec s = mono_exp(rho[wm.s_cols[i]]);
    Laurent fi(nn);
    for (const auto& [e, c] : gi.terms()) {
      ExpVec shifted(nn);
      for (std::size_t t = 0; t < nn; ++t) shifted[t] = e[t] - s[t];
      fi.add_term(shifted, c);
    }
    for (const auto& [e, c] : fi.terms())
      if (dot(weights[i], to_int_vec(e)) != 0)
        throw error("factor F_" + std::to_string(i + 1) +
                    " is not supported on the weight's orthogonal hyperplane");
    res.factors.push_back(std::move(fi));
  }

  Laurent w(nn);
  for (std::size_t j = 0; j < wm.R(); ++j) w.add_term(mono_exp(rho[j]), 1);
  for (std::size_t l = 0; l < wm.k; ++l)
    w = mutate(w, Mutation{weights[l], res.factors[l]});

  // Restrict to the chart: set the eliminated coordinates to 1 and order
  // the survivors by the variable they carry.
  const std::size_t n = wm.n_vars();
  std::vector<std::optional<std::size_t>> coord_to_var(nn);
  for (std::size_t c = wm.r; c < wm.R(); ++c)
    if (wm.col_var[c]) coord_to_var[c - wm.r] = *wm.col_var[c];
  Laurent chart(n);
  for (const auto& [e, c] : w.terms()) {
    ExpVec proj(n, 0);
    for (std::size_t t = 0; t < nn; ++t)
      if (coord_to_var[t]) proj[*coord_to_var[t]] = e[t];
    chart.add_term(proj, c);
  }
  res.chart = std::move(chart);
  return res;
}

}  // namespace lift
