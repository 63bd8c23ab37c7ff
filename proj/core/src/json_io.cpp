#include "lift/json_io.hpp"

namespace lift {

namespace {

Json ivec_to_json(const IVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

IVec ivec_from_json(const Json& j) {
  IVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json expvec_to_json(const ExpVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

ExpVec expvec_from_json(const Json& j) {
  ExpVec v;
  for (const auto& x : j) v.push_back(x.get<std::int64_t>());
  return v;
}

Json rvec_to_json(const RVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat_to_string(q));
  return a;
}

RVec rvec_from_json(const Json& j) {
  RVec v;
  for (const auto& x : j) {
    if (x.is_string())
      v.push_back(rat_from_string(x.get<std::string>()));
    else
      v.push_back(Rat(int_from_json(x)));
  }
  return v;
}

Json index_sets_to_json(const std::vector<std::vector<std::size_t>>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) {
    Json row = Json::array();
    for (auto i : s) row.push_back(i + 1);
    a.push_back(std::move(row));
  }
  return a;
}

std::vector<std::vector<std::size_t>> index_sets_from_json(const Json& j) {
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& row : j) {
    std::vector<std::size_t> s;
    for (const auto& i : row) {
      std::size_t v = i.get<std::size_t>();
      if (v == 0) throw error("indices are 1-based");
      s.push_back(v - 1);
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace

Json int_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw error("expected an integer (number or decimal string)");
}

Json to_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(ivec_to_json(m.row(i)));
  return rows;
}

IntMat intmat_from_json(const Json& j) {
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) rows.push_back(ivec_from_json(r));
  return IntMat::from_rows(rows);
}

Json to_json(const Fan& f) {
  Json j;
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(ivec_to_json(r));
  j["rays"] = std::move(rays);
  j["max_cones"] = index_sets_to_json(f.max_cones());
  return j;
}

Fan fan_from_json(const Json& j) {
  std::vector<IVec> rays;
  for (const auto& r : j.at("rays")) rays.push_back(ivec_from_json(r));
  std::size_t dim = rays.empty() ? 0 : rays[0].size();
  return Fan(dim, std::move(rays), index_sets_from_json(j.at("max_cones")));
}

Json to_json(const StackyFan& s) {
  Json j;
  j["n"] = s.n;
  Json rays = Json::array();
  for (const auto& r : s.rho) rays.push_back(ivec_to_json(r));
  j["rays"] = std::move(rays);
  j["max_cones"] = index_sets_to_json(s.max_cones);
  return j;
}

Json to_json(const GitData& g) {
  Json j;
  j["r"] = g.r;
  Json chars = Json::array();
  for (const auto& d : g.characters) chars.push_back(ivec_to_json(d));
  j["characters"] = std::move(chars);
  j["omega"] = rvec_to_json(g.omega);
  return j;
}

GitData git_from_json(const Json& j) {
  GitData g;
  g.r = j.at("r").get<std::size_t>();
  for (const auto& d : j.at("characters")) g.characters.push_back(ivec_from_json(d));
  g.omega = rvec_from_json(j.at("omega"));
  return g;
}

Json to_json(const Polytope& p) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(ivec_to_json(v));
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json fj;
    fj["normal"] = ivec_to_json(f.normal);
    fj["offset"] = int_to_json(f.offset);
    facets.push_back(std::move(fj));
  }
  j["facets"] = std::move(facets);
  Json eqs = Json::array();
  for (const auto& e : p.equalities()) {
    Json ej;
    ej["normal"] = ivec_to_json(e.normal);
    ej["offset"] = int_to_json(e.offset);
    eqs.push_back(std::move(ej));
  }
  j["equalities"] = std::move(eqs);
  return j;
}

Json to_json(const Scaffolding& sc) {
  Json j;
  Json parts = index_sets_to_json(sc.partition.parts);
  Json free_idx = Json::array();
  for (auto u : sc.partition.free_indices) free_idx.push_back(u + 1);
  j["partition"] = Json{{"parts", std::move(parts)}, {"free", std::move(free_idx)}};
  if (sc.partition.basis) j["partition"]["basis"] = to_json(*sc.partition.basis);
  Json struts = Json::array();
  for (const auto& s : sc.struts) {
    Json sj;
    sj["dilations"] = ivec_to_json(s.dilations);
    sj["translation"] = expvec_to_json(s.translation);
    struts.push_back(std::move(sj));
  }
  j["struts"] = std::move(struts);
  Json points = Json::array();
  for (auto u : sc.points) {
    ExpVec e(sc.partition.dim, 0);
    e.at(u) = 1;
    points.push_back(expvec_to_json(e));
  }
  j["points"] = std::move(points);
  j["shift"] = int_to_json(sc.shift);
  return j;
}

Scaffolding scaffolding_from_json(const Json& j) {
  Scaffolding sc;
  const Json& pj = j.at("partition");
  sc.partition.parts = index_sets_from_json(pj.at("parts"));
  for (const auto& i : pj.at("free")) {
    std::size_t v = i.get<std::size_t>();
    if (v == 0) throw error("indices are 1-based");
    sc.partition.free_indices.push_back(v - 1);
  }
  if (pj.contains("basis")) sc.partition.basis = intmat_from_json(pj.at("basis"));
  std::size_t dim = 0;
  for (const auto& p : sc.partition.parts)
    for (auto i : p) dim = std::max(dim, i + 1);
  for (auto i : sc.partition.free_indices) dim = std::max(dim, i + 1);
  for (const auto& sj : j.at("struts")) {
    Strut s;
    s.dilations = ivec_from_json(sj.at("dilations"));
    s.translation = expvec_from_json(sj.at("translation"));
    dim = std::max(dim, s.translation.size());
    sc.struts.push_back(std::move(s));
  }
  sc.partition.dim = dim;
  for (const auto& p : j.at("points")) {
    ExpVec e = expvec_from_json(p);
    std::size_t u = 0;
    bool found = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1 && !found) {
        u = i;
        found = true;
      } else if (e[i] != 0) {
        throw error("uneliminated points must be standard basis vectors");
      }
    }
    if (!found) throw error("uneliminated points must be standard basis vectors");
    sc.points.push_back(u);
  }
  std::sort(sc.points.begin(), sc.points.end());
  if (j.contains("shift")) sc.shift = int_from_json(j.at("shift"));
  sc.partition.validate();
  return sc;
}

Json to_json(const Mutation& m) {
  Json j;
  j["weight"] = ivec_to_json(m.weight);
  j["factor"] = format(m.factor);
  return j;
}

Mutation mutation_from_json(const Json& j) {
  Mutation m;
  m.weight = ivec_from_json(j.at("weight"));
  m.factor = parse(j.at("factor").get<std::string>());
  return m;
}

Json to_json(const PeriodSeq& p) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(int_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const WeightMatrix& wm) {
  Json j;
  j["matrix"] = to_json(wm.m);
  j["r"] = wm.r;
  j["k"] = wm.k;
  Json parts = index_sets_to_json(wm.part_cols);
  j["part_columns"] = std::move(parts);
  Json scols = Json::array();
  for (auto c : wm.s_cols) scols.push_back(c + 1);
  j["s_columns"] = std::move(scols);
  Json ucols = Json::array();
  for (auto c : wm.u_cols) ucols.push_back(c + 1);
  j["u_columns"] = std::move(ucols);
  Json vars = Json::array();
  for (const auto& v : wm.col_var)
    vars.push_back(v ? Json(*v + 1) : Json(nullptr));
  j["column_variables"] = std::move(vars);
  return j;
}

namespace {

Json bundle_to_json(const BundleReport& b) {
  Json j;
  j["class"] = ivec_to_json(b.cls);
  j["lift"] = ivec_to_json(b.lift);
  j["nef"] = b.nef;
  j["ample"] = b.ample;
  j["convex"] = b.convex;
  return j;
}

}  // namespace

Json to_json(const InversionReport& rep) {
  Json j;
  j["weight_matrix"] = to_json(rep.wm);
  Json chars = Json::array();
  for (const auto& d : rep.wm.characters()) chars.push_back(ivec_to_json(d));
  j["characters"] = std::move(chars);
  j["shift"] = int_to_json(rep.shift);
  j["strictly_convex"] = rep.strictly_convex;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  Json chambers = Json::array();
  for (const auto& cr : rep.chambers) {
    Json cj;
    Json rays = Json::array();
    for (const auto& r : cr.chamber_rays) rays.push_back(ivec_to_json(r));
    cj["chamber_rays"] = std::move(rays);
    cj["omega"] = rvec_to_json(cr.omega);
    cj["ok"] = cr.ok;
    if (!cr.ok) {
      cj["failure"] = cr.failure;
      chambers.push_back(std::move(cj));
      continue;
    }
    cj["deligne_mumford"] = cr.deligne_mumford;
    cj["orbifold"] = cr.orbifold;
    cj["smooth_fixed_point"] = cr.smooth_fixed_point;
    cj["omega_nonneg_on_basis"] = cr.omega_nonneg_on_basis;
    cj["dilations_nonneg"] = cr.dilations_nonneg;
    cj["all_bundles_convex"] = cr.all_bundles_convex;
    Json bundles = Json::array();
    for (const auto& b : cr.bundles) bundles.push_back(bundle_to_json(b));
    cj["bundles"] = std::move(bundles);
    cj["anticanonical"] = Json{{"class", ivec_to_json(cr.anticanonical)},
                               {"tier", tier_name(cr.anticanonical_tier)}};
    cj["fano_certificate"] = Json{{"class", ivec_to_json(cr.fano_class)},
                                  {"tier", tier_name(cr.fano_tier)}};
    Json dets = Json::array();
    for (const auto& d : cr.max_cone_dets) dets.push_back(int_to_json(d));
    cj["max_cone_dets"] = std::move(dets);
    if (cr.stacky) cj["fan"] = to_json(*cr.stacky);
    chambers.push_back(std::move(cj));
  }
  j["chambers"] = std::move(chambers);
  return j;
}

Json to_json(const DegenerationReport& rep) {
  Json j;
  Json forms = Json::array();
  for (const auto& u : rep.forms) forms.push_back(ivec_to_json(u));
  j["forms"] = std::move(forms);
  j["basis"] = to_json(rep.basis);
  j["fan"] = to_json(rep.restricted);
  j["spanning_fan"] = rep.spanning;
  j["refines_spanning_fan"] = rep.refines;
  Json sections = Json::array();
  for (const auto& [lhs, rhs] : rep.sections) {
    Json sj;
    sj["basis_monomial"] = ivec_to_json(lhs);
    sj["part_monomial"] = ivec_to_json(rhs);
    sections.push_back(std::move(sj));
  }
  j["binomial_sections"] = std::move(sections);
  return j;
}

}  // namespace lift
