#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lift/degeneration.hpp"

using namespace lift;

namespace {

IVec iv(std::vector<int> v) { return IVec(v.begin(), v.end()); }

struct Example {
  std::string name;
  Laurent f;
  Scaffolding sc;
  RVec omega;
  bool expect_spanning;
};

std::vector<Example> worked_examples() {
  std::vector<Example> out;
  {
    Example e;
    e.name = "dP3";
    e.f = parse("(1+x+y)^3/(x*y)");
    e.sc = Scaffolding{{2, {{0, 1}}, {}, std::nullopt}, {Strut{{Int(3)}, {-1, -1}}}, {}, 0};
    e.omega = {Rat(1)};
    e.expect_spanning = true;
    out.push_back(std::move(e));
  }
  {
    Example e;
    e.name = "dP6 triangles";
    e.f = parse("x + y + 1/x + 1/y + x/y + y/x");
    e.sc = Scaffolding{
        {2, {{0, 1}}, {}, std::nullopt},
        {Strut{{Int(1)}, {0, 0}}, Strut{{Int(1)}, {-1, 0}}, Strut{{Int(1)}, {0, -1}}},
        {},
        3};
    e.omega = {Rat(1), Rat(1), Rat(1)};
    e.expect_spanning = true;
    out.push_back(std::move(e));
  }
  {
    Example e;
    e.name = "dP6 squares";
    e.f = parse("x + y + 1/x + 1/y + x/y + y/x");
    e.sc = Scaffolding{
        {2, {{0}, {1}}, {}, std::nullopt},
        {Strut{{Int(1), Int(1)}, {-1, 0}}, Strut{{Int(1), Int(1)}, {0, -1}}},
        {},
        2};
    e.omega = {Rat(1), Rat(1)};
    e.expect_spanning = true;
    out.push_back(std::move(e));
  }
  {
    Example e;
    e.name = "weak Fano 3-fold";
    e.f = parse(
        "x + y^2/z + 2*y + 3*y/z + z + 3/z + z/y + 2/y + 1/(y*z) + y^2/(x*z) + 2*y/x + "
        "2*y/(x*z) + z/x + 2/x + 1/(x*z)");
    e.sc = Scaffolding{{3, {{1, 2}}, {0}, std::nullopt},
                       {Strut{{Int(2)}, {-1, 0, -1}}, Strut{{Int(2)}, {0, 0, -1}},
                        Strut{{Int(2)}, {0, -1, -1}}},
                       {0},
                       4};
    e.omega = {Rat(3), Rat(2), Rat(1)};
    // The sliced fan acquires a ray through the strut vertex y/z, a
    // non-vertex lattice point of Newt(f): a proper refinement.
    e.expect_spanning = false;
    out.push_back(std::move(e));
  }
  {
    Example e;
    e.name = "new 4d Fano";
    e.f = parse("vars: x,y,z,w; (1+x)^2/(x*y*w) + x/z + y + z + w");
    e.sc = Scaffolding{{4, {{0}}, {1, 2, 3}, std::nullopt},
                       {Strut{{Int(2)}, {-1, -1, 0, -1}}, Strut{{Int(0)}, {1, 0, -1, 0}}},
                       {1, 2, 3},
                       0};
    e.omega = {Rat(5), Rat(2)};
    e.expect_spanning = true;
    out.push_back(std::move(e));
  }
  return out;
}

StackyFan ambient_fan(const WeightMatrix& wm, const RVec& omega) {
  GitData g{wm.r, wm.characters(), omega};
  return stacky_from_rho(g, wm.distinguished_rho());
}

}  // namespace

TEST_CASE("nef partition forms") {
  SUBCASE("dP3: u_1 evaluates to -3 on the folded ray") {
    Scaffolding sc{{2, {{0, 1}}, {}, std::nullopt}, {Strut{{Int(3)}, {-1, -1}}}, {}, 0};
    auto wm = scaffolding_to_weight_matrix(sc);
    auto forms = nef_partition_forms(wm);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0] == iv({1, 1, 1}));
    auto rho = wm.distinguished_rho();
    CHECK(dot(forms[0], rho[0]) == -3);
  }
  SUBCASE("no parts, no forms") {
    Scaffolding sc{{1, {}, {0}, std::nullopt}, {Strut{{}, {1}}}, {0}, 0};
    auto wm = scaffolding_to_weight_matrix(sc);
    CHECK(nef_partition_forms(wm).empty());
  }
  SUBCASE("the 4d example: indicator of the part block") {
    Scaffolding sc{{4, {{0}}, {1, 2, 3}, std::nullopt},
                   {Strut{{Int(2)}, {-1, -1, 0, -1}}, Strut{{Int(0)}, {1, 0, -1, 0}}},
                   {1, 2, 3},
                   0};
    auto wm = scaffolding_to_weight_matrix(sc);
    auto forms = nef_partition_forms(wm);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0] == iv({1, 1, 0, 0, 0}));
    auto rho = wm.distinguished_rho();
    CHECK(dot(forms[0], rho[0]) == -2);
    CHECK(dot(forms[0], rho[1]) == 0);
  }
}

TEST_CASE("u_j(rho_b) always equals minus the row dilation") {
  testing::Rng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    auto rs = testing::random_scaffolding(rng);
    auto wm = scaffolding_to_weight_matrix(rs.sc);
    auto forms = nef_partition_forms(wm);
    auto rho = wm.distinguished_rho();
    for (std::size_t b = 0; b < wm.r; ++b) {
      auto l = wm.dilation_of_row(b);
      for (std::size_t j = 0; j < wm.k; ++j) CHECK(dot(forms[j], rho[b]) == -l[j]);
    }
    // and the indicator conditions on the remaining rays
    for (std::size_t j = 0; j < wm.k; ++j)
      for (std::size_t c = wm.r; c < wm.R(); ++c) {
        bool in_part = std::find(wm.part_cols[j].begin(), wm.part_cols[j].end(), c) !=
                       wm.part_cols[j].end();
        CHECK(dot(forms[j], rho[c]) == Int(in_part ? 1 : 0));
      }
  }
}

TEST_CASE("distinguished basis") {
  SUBCASE("dP3 with the eliminated slot placed last") {
    Scaffolding sc{{2, {{0, 1}}, {}, std::nullopt}, {Strut{{Int(3)}, {-1, -1}}}, {}, 0};
    auto wm = scaffolding_to_weight_matrix(sc, {2});  // s at the final column
    IntMat b = distinguished_basis(wm);
    CHECK(b == IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
  }
  SUBCASE("pure toric: the identity on the free block") {
    Scaffolding sc{{2, {}, {0, 1}, std::nullopt}, {Strut{{}, {-1, -1}}}, {0, 1}, 0};
    auto wm = scaffolding_to_weight_matrix(sc);
    CHECK(distinguished_basis(wm) == IntMat::identity(2));
  }
  SUBCASE("the 4d example") {
    Scaffolding sc{{4, {{0}}, {1, 2, 3}, std::nullopt},
                   {Strut{{Int(2)}, {-1, -1, 0, -1}}, Strut{{Int(0)}, {1, 0, -1, 0}}},
                   {1, 2, 3},
                   0};
    auto wm = scaffolding_to_weight_matrix(sc);
    IntMat b = distinguished_basis(wm);
    // columns: rho_4 - rho_3 (for x), rho_5, rho_6, rho_7
    CHECK(b == IntMat::from_rows({{-1, 0, 0, 0},
                                  {1, 0, 0, 0},
                                  {0, 1, 0, 0},
                                  {0, 0, 1, 0},
                                  {0, 0, 0, 1}}));
  }
}

TEST_CASE("the distinguished basis is a genuine basis of the sublattice") {
  testing::Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    auto rs = testing::random_scaffolding(rng);
    auto wm = scaffolding_to_weight_matrix(rs.sc);
    IntMat b = distinguished_basis(wm);
    auto forms = nef_partition_forms(wm);
    // columns lie in every hyperplane and form a saturated basis
    for (const auto& u : forms) {
      for (std::size_t c = 0; c < b.cols(); ++c) CHECK(dot(u, b.col(c)) == 0);
    }
    auto snf = smith_decompose(b);
    for (std::size_t i = 0; i < b.cols(); ++i) CHECK(snf.s.at(i, i) == 1);
    IntMat e(forms.size(), wm.R() - wm.r);
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = 0; j < forms[i].size(); ++j) e.at(i, j) = forms[i][j];
    CHECK(b.cols() == integer_kernel(e).cols());
  }
}

TEST_CASE("degeneration fan across the worked examples") {
  for (const auto& ex : worked_examples()) {
    CAPTURE(ex.name);
    auto [ok, shift] = validate_scaffolding(ex.f, ex.sc);
    REQUIRE(ok);
    auto wm = scaffolding_to_weight_matrix(ex.sc);
    StackyFan sigma = ambient_fan(wm, ex.omega);
    Polytope newt = newton_polytope(ex.f);
    DegenerationReport rep = degeneration_report(wm, sigma, newt);
    CHECK(rep.spanning == ex.expect_spanning);
    CHECK(rep.refines);  // refinement holds throughout, equality may not
    CHECK(rep.restricted.is_complete());
    CHECK(fan_is_valid(rep.restricted));

    // every ray of the restricted fan passes through a strut vertex or an
    // uneliminated point
    std::vector<IVec> targets;
    for (const auto& s : ex.sc.struts) {
      Polytope sp = newton_polytope(strut_to_polynomial(s, ex.sc.partition));
      for (const auto& v : sp.vertices()) targets.push_back(v);
    }
    for (auto u : ex.sc.points) {
      IVec e(ex.sc.partition.dim, Int(0));
      e[u] = 1;
      targets.push_back(e);
    }
    for (const auto& ray : rep.restricted.rays()) {
      bool hit = false;
      for (const auto& t : targets) {
        bool zero = std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; });
        if (!zero && primitive(t) == ray) hit = true;
      }
      CHECK(hit);
    }

    // both monomials of every binomial section map to the bundle class
    auto sections = binomial_sections(wm);
    REQUIRE(sections.size() == wm.k);
    for (std::size_t i = 0; i < wm.k; ++i) {
      IVec lhs(wm.r, Int(0)), rhs(wm.r, Int(0));
      for (std::size_t j = 0; j < wm.R(); ++j)
        for (std::size_t t = 0; t < wm.r; ++t) {
          lhs[t] += sections[i].first[j] * wm.m.at(t, j);
          rhs[t] += sections[i].second[j] * wm.m.at(t, j);
        }
      CHECK(lhs == rhs);
      CHECK(lhs == wm.bundle_class(i));
      for (const auto& x : sections[i].first) CHECK(x >= 0);
      for (const auto& x : sections[i].second) CHECK(x >= 0);
    }
  }
}

TEST_CASE("binomial sections of the worked examples") {
  SUBCASE("dP3: x1^3 against x2 x3 x4") {
    Scaffolding sc{{2, {{0, 1}}, {}, std::nullopt}, {Strut{{Int(3)}, {-1, -1}}}, {}, 0};
    auto wm = scaffolding_to_weight_matrix(sc);
    auto sections = binomial_sections(wm);
    REQUIRE(sections.size() == 1);
    CHECK(sections[0].first == iv({3, 0, 0, 0}));
    CHECK(sections[0].second == iv({0, 1, 1, 1}));
  }
  SUBCASE("dP6 squares: two bilinear sections") {
    Scaffolding sc{{2, {{0}, {1}}, {}, std::nullopt},
                   {Strut{{Int(1), Int(1)}, {-1, 0}}, Strut{{Int(1), Int(1)}, {0, -1}}},
                   {},
                   2};
    auto sections = binomial_sections(scaffolding_to_weight_matrix(sc));
    REQUIRE(sections.size() == 2);
    CHECK(sections[0].first == iv({1, 1, 0, 0, 0, 0}));
    CHECK(sections[0].second == iv({0, 0, 1, 1, 0, 0}));
    CHECK(sections[1].first == iv({1, 1, 0, 0, 0, 0}));
    CHECK(sections[1].second == iv({0, 0, 0, 0, 1, 1}));
  }
  SUBCASE("the 4d example: x1^2 against x3 x4") {
    Scaffolding sc{{4, {{0}}, {1, 2, 3}, std::nullopt},
                   {Strut{{Int(2)}, {-1, -1, 0, -1}}, Strut{{Int(0)}, {1, 0, -1, 0}}},
                   {1, 2, 3},
                   0};
    auto sections = binomial_sections(scaffolding_to_weight_matrix(sc));
    REQUIRE(sections.size() == 1);
    CHECK(sections[0].first == iv({2, 0, 0, 0, 0, 0, 0}));
    CHECK(sections[0].second == iv({0, 0, 1, 1, 0, 0, 0}));
  }
}

TEST_CASE("k = 0 restricts to the fan itself in the free basis") {
  Scaffolding sc{{2, {}, {0, 1}, std::nullopt}, {Strut{{}, {-1, -1}}}, {0, 1}, 0};
  auto wm = scaffolding_to_weight_matrix(sc);
  StackyFan sigma = ambient_fan(wm, {Rat(1)});
  Fan deg = degeneration_fan(sigma, wm);
  CHECK(fans_equal(deg, sigma.fan()));
  // this is the P^2 mirror x + y + 1/(x*y)
  Polytope newt = newton_polytope(parse("x + y + 1/(x*y)"));
  CHECK(is_spanning_fan(deg, newt));
}
