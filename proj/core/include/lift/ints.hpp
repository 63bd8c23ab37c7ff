#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lift {

// Exact coefficient/rational types. Everything in this library is exact:
// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exponent vectors stay machine-sized; coefficients do not.
using ExpVec = std::vector<std::int64_t>;

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a mutation (or a slice division inside one) leaves the
// Laurent ring.
class not_laurent_error : public error {
public:
  explicit not_laurent_error(const std::string& what) : error(what) {}
};

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// gcd of all entries; 0 for the zero vector.
template <typename Vec>
Int content(const Vec& v) {
  Int g = 0;
  for (const auto& x : v) g = int_gcd(g, Int(x));
  return g;
}

// Divide an integer vector by the gcd of its entries, keeping direction.
inline std::vector<Int> primitive(std::vector<Int> v) {
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Rat dot(const std::vector<Int>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<Int> to_int_vec(const ExpVec& e) {
  return std::vector<Int>(e.begin(), e.end());
}

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace lift
