#pragma once

#include <random>

#include "lift/laurent.hpp"
#include "lift/matrix.hpp"
#include "lift/scaffold.hpp"

namespace lift::testing {

using Rng = std::mt19937_64;

inline Laurent random_laurent(Rng& rng, std::size_t dim, std::size_t max_terms = 6) {
  std::uniform_int_distribution<int> expd(-4, 4), coefd(-9, 9);
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  Laurent f(dim);
  std::size_t n = terms(rng);
  for (std::size_t t = 0; t < n; ++t) {
    ExpVec e(dim);
    for (auto& x : e) x = expd(rng);
    int c = coefd(rng);
    if (c != 0) f.add_term(e, c);
  }
  return f;
}

inline IntMat random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2), op(0, 2);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0: {
        if (i == j) break;
        Int c = coef(rng);
        for (std::size_t col = 0; col < n; ++col) u.at(i, col) += c * u.at(j, col);
        break;
      }
      case 1:
        if (i != j) u.swap_rows(i, j);
        break;
      default:
        for (std::size_t col = 0; col < n; ++col) u.at(i, col) = -u.at(i, col);
    }
  }
  return u;
}

// A random well-formed scaffolding together with the polynomial it sums
// to (shift 0). Bounds follow the roundtrip property: n <= 4, at most 3
// struts, dilations <= 3.
struct RandomScaffold {
  Scaffolding sc;
  Laurent f;
};

inline RandomScaffold random_scaffolding(Rng& rng) {
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  std::size_t n = dims(rng);
  std::uniform_int_distribution<std::size_t> kd(0, std::min<std::size_t>(2, n));
  std::size_t k = kd(rng);

  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i;
  std::shuffle(coords.begin(), coords.end(), rng);

  BasisPartition p;
  p.dim = n;
  std::size_t used = 0;
  for (std::size_t i = 0; i < k && used < n; ++i) {
    std::uniform_int_distribution<std::size_t> szd(1, n - used - (k - i - 1) > 0
                                                          ? n - used - (k - i - 1)
                                                          : 1);
    std::size_t sz = std::min(szd(rng), n - used);
    std::vector<std::size_t> part(coords.begin() + used, coords.begin() + used + sz);
    std::sort(part.begin(), part.end());
    p.parts.push_back(std::move(part));
    used += sz;
  }
  p.free_indices.assign(coords.begin() + used, coords.end());
  std::sort(p.free_indices.begin(), p.free_indices.end());

  std::uniform_int_distribution<std::size_t> rd(1, 3);
  std::uniform_int_distribution<int> dil(0, 3), tr(-3, 3);
  Scaffolding sc;
  sc.partition = p;
  std::size_t r = rd(rng);
  for (std::size_t a = 0; a < r; ++a) {
    Strut s;
    for (std::size_t i = 0; i < p.parts.size(); ++i) s.dilations.push_back(dil(rng));
    s.translation.assign(n, 0);
    for (auto& t : s.translation) t = tr(rng);
    bool constant = std::all_of(s.dilations.begin(), s.dilations.end(),
                                [](const Int& l) { return l == 0; }) &&
                    std::all_of(s.translation.begin(), s.translation.end(),
                                [](auto t) { return t == 0; });
    if (constant) s.translation[0] = 1;
    sc.struts.push_back(std::move(s));
  }
  sc.points = p.free_indices;
  sc.shift = 0;

  RandomScaffold out;
  out.f = scaffolding_sum(sc);
  out.sc = std::move(sc);
  return out;
}

}  // namespace lift::testing
