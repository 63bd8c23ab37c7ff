#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lift/degeneration.hpp"
#include "lift/mutation.hpp"
#include "lift/period.hpp"

using namespace lift;

namespace {

IVec iv(std::vector<int> v) { return IVec(v.begin(), v.end()); }

// Divide a height slice by F^m inside the hyperplane w-perp, passing
// through explicit quotient coordinates chosen by a splitting of the
// lattice. Used as an independent oracle for the full-ring division that
// mutate performs.
Laurent mutate_via_splitting(const Laurent& f, const Mutation& m, const IntMat& split_basis) {
  const std::size_t n = f.dimension();
  // split_basis columns: a basis of w-perp followed by one vector v with
  // <w, v> = content(w)
  Int g = content(m.weight);
  std::map<Int, Laurent> slices;
  for (const auto& [e, c] : f.terms()) {
    Int h = dot(m.weight, to_int_vec(e)) / g;
    auto it = slices.find(h);
    if (it == slices.end()) it = slices.emplace(h, Laurent(n)).first;
    it->second.add_term(e, c);
  }
  auto project = [&](const Laurent& p, const Int& h) {
    Laurent out(n - 1);
    for (const auto& [e, c] : p.terms()) {
      std::vector<Int> shifted(n);
      for (std::size_t i = 0; i < n; ++i)
        shifted[i] = Int(e[i]) - h * split_basis.at(i, n - 1);
      auto coords = solve_integer(split_basis, shifted);
      REQUIRE(coords.has_value());
      REQUIRE((*coords)[n - 1] == 0);
      ExpVec q(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) q[i] = static_cast<std::int64_t>((*coords)[i]);
      out.add_term(q, c);
    }
    return out;
  };
  auto lift_back = [&](const Laurent& p, const Int& h) {
    Laurent out(n);
    for (const auto& [e, c] : p.terms()) {
      std::vector<Int> full(n, Int(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t jj = 0; jj + 1 < n; ++jj)
          full[i] += Int(e[jj]) * split_basis.at(i, jj);
        full[i] += h * split_basis.at(i, n - 1);
      }
      ExpVec q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = static_cast<std::int64_t>(full[i]);
      out.add_term(q, c);
    }
    return out;
  };
  Laurent factor_q = project(m.factor, 0);
  Laurent out(n);
  for (const auto& [h, slice] : slices) {
    Laurent sq = project(slice, h);
    Laurent rq(n - 1);
    if (h >= 0)
      rq = sq * factor_q.pow(static_cast<unsigned>(h * g));
    else
      rq = exact_divide(sq, factor_q.pow(static_cast<unsigned>(-h * g)));
    out = out + lift_back(rq, h);
  }
  return out;
}

IntMat splitting_for(const IVec& w, bool flip) {
  const std::size_t n = w.size();
  IntMat wm(1, n);
  for (std::size_t i = 0; i < n; ++i) wm.at(0, i) = w[i];
  IntMat perp = integer_kernel(wm);  // n x (n-1)
  Int g = content(w);
  std::vector<Int> target{g};
  auto v = solve_integer(wm, target);
  REQUIRE(v.has_value());
  IntMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      Int entry = perp.at(i, j);
      if (flip && j == 0) entry = -entry;
      basis.at(i, j) = entry;
    }
    Int last = (*v)[i];
    if (flip && n >= 2) last += perp.at(i, 0);  // a different complement choice
    basis.at(i, n - 1) = last;
  }
  return basis;
}

}  // namespace

TEST_CASE("mutation basics") {
  auto f = parse("vars: x,y; y + (1+x)/y");
  Mutation m{iv({0, 1}), parse("vars: x,y; 1+x")};
  SUBCASE("worked example") {
    CHECK(mutate(f, m) == parse("vars: x,y; y*(1+x) + 1/y"));
  }
  SUBCASE("factor one is the identity") {
    Mutation unit{iv({0, 1}), Laurent::constant(2, 1)};
    CHECK(mutate(f, unit) == f);
  }
  SUBCASE("an indivisible slice is rejected") {
    auto g = parse("vars: x,y; y + 1/y");
    CHECK_THROWS_AS(static_cast<void>(mutate(g, m)), not_laurent_error);
  }
  SUBCASE("factors must sit on the weight hyperplane") {
    Mutation bad{iv({0, 1}), parse("vars: x,y; 1+y")};
    CHECK_THROWS_AS(static_cast<void>(mutate(f, bad)), error);
  }
  SUBCASE("height-zero polynomials are fixed") {
    auto h = parse("vars: x,y; x + 1/x + 3");
    CHECK(mutate(h, m) == h);
  }
}

TEST_CASE("inverse mutation undoes a mutation") {
  auto f = parse("vars: x,y; y + (1+x)/y");
  Mutation m{iv({0, 1}), parse("vars: x,y; 1+x")};
  Mutation minv{iv({0, -1}), parse("vars: x,y; 1+x")};
  CHECK(mutate(mutate(f, m), minv) == f);

  auto dp6 = parse("x + y + 1/x + 1/y + x/y + y/x");
  Mutation m2{iv({0, 1}), parse("vars: x,y; 1+x")};
  Laurent g = mutate(dp6, m2);
  CHECK(mutate(g, Mutation{iv({0, -1}), parse("vars: x,y; 1+x")}) == dp6);
}

TEST_CASE("mutation preserves the classical period") {
  auto dp6 = parse("x + y + 1/x + 1/y + x/y + y/x");
  Mutation m{iv({0, 1}), parse("vars: x,y; 1+x")};
  auto a = classical_period(dp6, 6);
  auto b = classical_period(mutate(dp6, m), 6);
  CHECK(a.coeffs == b.coeffs);

  auto f34 = parse(
      "x + y^2/z + 2*y + 3*y/z + z + 3/z + z/y + 2/y + 1/(y*z) + y^2/(x*z) + 2*y/x + "
      "2*y/(x*z) + z/x + 2/x + 1/(x*z)");
  Mutation m34{iv({0, -1, -1}), parse("vars: x,y,z; 1 + y/z")};
  // heights of f34 under w range over [-1, 2]; divisibility holds
  Laurent g34 = mutate(f34, m34);
  CHECK(classical_period(f34, 6).coeffs == classical_period(g34, 6).coeffs);
}

TEST_CASE("slice division agrees across splittings and the full ring") {
  auto f = parse("vars: x,y; y^2 + y*(1+x) + (1+x)^2/y + (1+x)^4/y^2");
  Mutation m{iv({0, 1}), parse("vars: x,y; 1+x")};
  Laurent full = mutate(f, m);
  Laurent a = mutate_via_splitting(f, m, splitting_for(m.weight, false));
  Laurent b = mutate_via_splitting(f, m, splitting_for(m.weight, true));
  CHECK(full == a);
  CHECK(full == b);

  // a non-primitive weight exercises the content handling: raw heights
  // are +-2, so the descending slice must shed two factors
  Mutation m2{iv({0, 2}), parse("vars: x,y; 1+x")};
  Laurent f2 = parse("vars: x,y; y + (1+x)^2/y");
  CHECK(mutate(f2, m2) == parse("vars: x,y; y*(1+x)^2 + 1/y"));
  CHECK(mutate(f2, m2) == mutate_via_splitting(f2, m2, splitting_for(m2.weight, false)));
  CHECK_THROWS_AS(static_cast<void>(mutate(parse("vars: x,y; y + (1+x)/y"), m2)),
                  not_laurent_error);
}

TEST_CASE("exact division") {
  auto f = parse("(1+x+y)^3/(x*y)");
  auto g = parse("(1+x+y)");
  CHECK(exact_divide(f, g) == parse("(1+x+y)^2/(x*y)"));
  CHECK_THROWS_AS(static_cast<void>(exact_divide(parse("vars: x,y; 1+x"), parse("vars: x,y; 1+y"))),
                  not_laurent_error);
  CHECK_THROWS_AS(static_cast<void>(exact_divide(parse("vars: x; 1"), parse("2+2*x"))),
                  not_laurent_error);
}

TEST_CASE("amenable collections") {
  Scaffolding sc{{4, {{0}}, {1, 2, 3}, std::nullopt},
                 {Strut{{Int(2)}, {-1, -1, 0, -1}}, Strut{{Int(0)}, {1, 0, -1, 0}}},
                 {1, 2, 3},
                 0};
  auto wm = scaffolding_to_weight_matrix(sc);
  auto rho = wm.distinguished_rho();
  auto forms = nef_partition_forms(wm);
  std::vector<IVec> weights;
  for (const auto& u : forms) {
    IVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
    weights.push_back(w);
  }
  CHECK(amenable_check(weights, rho, wm.part_cols));
  SUBCASE("perturbing a weight breaks clause (i)") {
    auto bad = weights;
    bad[0][0] += 1;
    CHECK_FALSE(amenable_check(bad, rho, wm.part_cols));
  }
  SUBCASE("no parts is vacuously amenable") {
    CHECK(amenable_check({}, rho, {}));
  }
}

TEST_CASE("canonical weights are amenable for every generated scaffolding") {
  testing::Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    auto rs = testing::random_scaffolding(rng);
    auto wm = scaffolding_to_weight_matrix(rs.sc);
    auto rho = wm.distinguished_rho();
    std::vector<IVec> weights;
    for (const auto& u : nef_partition_forms(wm)) {
      IVec w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
      weights.push_back(w);
    }
    CHECK(amenable_check(weights, rho, wm.part_cols));
  }
}

TEST_CASE("composed charts match the forward mirror period by period") {
  struct Case {
    const char* name;
    Scaffolding sc;
  };
  std::vector<Case> cases;
  cases.push_back({"dP3",
                   Scaffolding{{2, {{0, 1}}, {}, std::nullopt},
                               {Strut{{Int(3)}, {-1, -1}}},
                               {},
                               0}});
  cases.push_back({"dP6 squares",
                   Scaffolding{{2, {{0}, {1}}, {}, std::nullopt},
                               {Strut{{Int(1), Int(1)}, {-1, 0}},
                                Strut{{Int(1), Int(1)}, {0, -1}}},
                               {},
                               2}});
  cases.push_back({"new 4d",
                   Scaffolding{{4, {{0}}, {1, 2, 3}, std::nullopt},
                               {Strut{{Int(2)}, {-1, -1, 0, -1}},
                                Strut{{Int(0)}, {1, 0, -1, 0}}},
                               {1, 2, 3},
                               0}});
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto wm = scaffolding_to_weight_matrix(c.sc);
    auto chart = compose_charts(wm);
    Laurent fwd = forward_from_weight_matrix(wm);
    auto pa = classical_period(chart.chart.drop_constant(), 6);
    auto pb = classical_period(fwd.drop_constant(), 6);
    CHECK(pa.coeffs == pb.coeffs);
    // every factor sits on its weight hyperplane with positive coefficients
    auto forms = nef_partition_forms(wm);
    for (std::size_t i = 0; i < chart.factors.size(); ++i)
      for (const auto& [e, coeff] : chart.factors[i].terms()) {
        CHECK(dot(forms[i], to_int_vec(e)) == 0);
        CHECK(coeff > 0);
      }
  }
}

TEST_CASE("charts with no parts return the superpotential itself") {
  Scaffolding sc{{2, {}, {0, 1}, std::nullopt}, {Strut{{}, {-1, -1}}}, {0, 1}, 0};
  auto wm = scaffolding_to_weight_matrix(sc);
  auto chart = compose_charts(wm);
  CHECK(chart.factors.empty());
  CHECK(chart.chart == parse("x + y + 1/(x*y)"));
}
