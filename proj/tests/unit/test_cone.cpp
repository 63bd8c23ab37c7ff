#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lift/cone.hpp"

using namespace lift;

namespace {

IVec iv(std::vector<int> v) { return IVec(v.begin(), v.end()); }

}  // namespace

TEST_CASE("cone membership and convexity") {
  Cone quadrant(2, {iv({1, 0}), iv({0, 1})});
  CHECK(quadrant.contains(iv({1, 1})));
  CHECK(quadrant.contains(iv({0, 0})));
  CHECK_FALSE(quadrant.contains(iv({-1, 2})));
  CHECK(quadrant.contains_relint(iv({1, 1})));
  CHECK_FALSE(quadrant.contains_relint(iv({1, 0})));
  CHECK(quadrant.is_strictly_convex());

  Cone line(2, {iv({1, 0}), iv({-1, 0})});
  CHECK_FALSE(line.is_strictly_convex());
  CHECK(line.contains(iv({5, 0})));
  CHECK(line.contains_relint(iv({5, 0})));
  CHECK_FALSE(line.contains(iv({0, 1})));

  Cone wide(2, {iv({1, 0}), iv({1, 1}), iv({1, -1})});
  CHECK(wide.is_strictly_convex());
  CHECK(wide.extreme_rays().size() == 2);  // (1,0) is interior

  Cone origin(2, {});
  CHECK(origin.contains(iv({0, 0})));
  CHECK(origin.contains_relint(iv({0, 0})));
  CHECK_FALSE(origin.contains(iv({1, 0})));
}

TEST_CASE("double description solves H-representations") {
  // x >= 0, y >= 0, x+y <= nothing: the quadrant back from its dual
  ConeGens g = solve_cone(2, {iv({1, 0}), iv({0, 1})});
  CHECK(g.lineality.empty());
  REQUIRE(g.rays.size() == 2);
  CHECK(std::find(g.rays.begin(), g.rays.end(), iv({1, 0})) != g.rays.end());
  CHECK(std::find(g.rays.begin(), g.rays.end(), iv({0, 1})) != g.rays.end());

  // equality cuts produce lower-dimensional cones
  ConeGens slice = solve_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})},
                              {iv({1, 1, 1})});
  CHECK(slice.rays.empty());  // positive octant meets the plane only at 0
  ConeGens half = solve_cone(2, {}, {iv({0, 1})});
  CHECK(half.rays.empty());
  REQUIRE(half.lineality.size() == 1);
  CHECK(half.lineality[0] == iv({1, 0}));
}

TEST_CASE("dual of the dual returns the cone") {
  testing::Rng rng(53);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> cnt(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = 2 + trial % 2;
    std::vector<IVec> gens;
    std::size_t m = cnt(rng);
    for (std::size_t i = 0; i < m; ++i) {
      IVec v(dim);
      for (auto& x : v) x = entry(rng);
      gens.push_back(v);
    }
    Cone c(dim, gens);
    if (!c.is_strictly_convex()) continue;
    Cone back(dim, c.extreme_rays());
    for (const auto& v : gens) CHECK(back.contains(v));
    CHECK(cones_equal(c, back));
  }
}

TEST_CASE("secondary fan chambers: repeated orthogonal characters") {
  std::vector<IVec> d = {iv({1, 0}), iv({1, 0}), iv({0, 1}), iv({0, 1})};
  auto chambers = secondary_fan_chambers(d);
  REQUIRE(chambers.size() == 1);
  CHECK(chambers[0].canonical_rays() == std::vector<IVec>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("secondary fan of the new 4d example") {
  std::vector<IVec> d = {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1}),
                         iv({1, 0}), iv({0, 1}), iv({1, 0})};
  auto chambers = secondary_fan_chambers(d);
  CHECK(chambers.size() == 3);
  RVec omega{Rat(5), Rat(2)};
  int hits = 0;
  for (const auto& c : chambers)
    if (c.contains_relint(omega)) ++hits;
  CHECK(hits == 1);
  auto ch = chamber_containing(d, omega);
  REQUIRE(ch.has_value());
  CHECK(ch->canonical_rays() == std::vector<IVec>{iv({1, 0}), iv({1, 1})});
  // on a wall: no chamber
  CHECK_FALSE(chamber_containing(d, RVec{Rat(1), Rat(1)}).has_value());
  // outside the character cone entirely
  CHECK_FALSE(chamber_containing(d, RVec{Rat(-1), Rat(0)}).has_value());
}

TEST_CASE("secondary fan of the weak Fano 3-fold example matches the sliced picture") {
  // characters e1 x2, e2, e3 x2, (1,1,0), (1,1,1): four chambers
  std::vector<IVec> d = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 1, 0}),
                         iv({0, 0, 1}), iv({1, 1, 1}), iv({1, 0, 0})};
  auto chambers = secondary_fan_chambers(d);
  CHECK(chambers.size() == 4);
  auto ch = chamber_containing(d, RVec{Rat(3), Rat(2), Rat(1)});
  REQUIRE(ch.has_value());
  CHECK(ch->canonical_rays() ==
        std::vector<IVec>{iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 1, 1})});
}

TEST_CASE("chamber properties: disjoint interiors, union, order independence") {
  testing::Rng rng(59);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t r = 2 + trial % 2;
    std::vector<IVec> d;
    for (std::size_t i = 0; i < 5; ++i) {
      IVec v(r, Int(0));
      for (auto& x : v) x = entry(rng);
      bool zero = std::all_of(v.begin(), v.end(), [](const Int& q) { return q == 0; });
      if (!zero) d.push_back(v);
    }
    std::vector<Cone> chambers;
    try {
      chambers = secondary_fan_chambers(d);
    } catch (const error&) {
      continue;  // degenerate draw
    }
    Cone total(r, d);
    for (std::size_t i = 0; i < chambers.size(); ++i) {
      IVec p = chambers[i].relint_point();
      CHECK(total.contains(p));
      for (std::size_t j = 0; j < chambers.size(); ++j)
        if (i != j) CHECK_FALSE(chambers[j].contains_relint(p));
      // every chamber point is recovered by chamber_containing
      RVec q(p.size());
      for (std::size_t t = 0; t < p.size(); ++t) q[t] = Rat(p[t]);
      auto found = chamber_containing(d, q);
      REQUIRE(found.has_value());
      CHECK(cones_equal(*found, chambers[i]));
    }
    // permuted input gives the same chamber list
    auto d2 = d;
    std::shuffle(d2.begin(), d2.end(), rng);
    auto chambers2 = secondary_fan_chambers(d2);
    REQUIRE(chambers2.size() == chambers.size());
    for (std::size_t i = 0; i < chambers.size(); ++i)
      CHECK(cones_equal(chambers[i], chambers2[i]));
  }
}

TEST_CASE("degenerate character lists are rejected") {
  CHECK_THROWS_AS(secondary_fan_chambers({iv({1, 0}), iv({2, 0})}), error);
  CHECK_THROWS_AS(secondary_fan_chambers({iv({1, 0}), iv({-1, 0}), iv({0, 1})}), error);
}
