#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lift/ints.hpp"
#include "lift/matrix.hpp"

namespace lift {

/// Sparse Laurent polynomial with integer coefficients: a map from
/// exponent vectors (fixed length = dimension, entries may be negative)
/// to arbitrary-precision integers. No zero coefficient is ever stored.
///
/// Values are immutable in spirit: all arithmetic returns new objects and
/// mutation is confined to construction helpers. Term order is the map's
/// lexicographic order, so iteration and formatting are deterministic.
class Laurent {
public:
  using TermMap = std::map<ExpVec, Int>;

  Laurent() = default;
  explicit Laurent(std::size_t dim) : dim_(dim) {}

  static Laurent constant(std::size_t dim, const Int& c);
  static Laurent monomial(const ExpVec& e, const Int& c = Int(1));

  std::size_t dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of x^e (0 if absent).
  Int coefficient(const ExpVec& e) const;
  /// Coefficient of the all-zeros exponent.
  Int constant_term() const;

  /// Add c * x^e, collecting like terms and dropping zero sums.
  void add_term(const ExpVec& e, const Int& c);

  Laurent operator+(const Laurent& g) const;
  Laurent operator-(const Laurent& g) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& g) const;
  Laurent operator*(const Int& c) const;
  bool operator==(const Laurent& g) const = default;

  Laurent pow(unsigned n) const;

  /// f minus its constant term.
  Laurent drop_constant() const;

  std::vector<ExpVec> support() const;

private:
  std::size_t dim_ = 0;
  TermMap terms_;
};

Laurent mul(const Laurent& f, const Laurent& g);
Int constant_term(const Laurent& f);

/// Apply e -> u*e + shift to every exponent. u must be unimodular.
Laurent monomial_change(const Laurent& f, const IntMat& u, const ExpVec& shift);

class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

struct ParsedPoly {
  Laurent poly;
  std::vector<std::string> vars;  // coordinate order
};

/// Parse the polynomial text grammar (see docs/formats.md). Variables are
/// ordered by first appearance unless a `vars: x,y;` header fixes them.
ParsedPoly parse_poly(const std::string& text);

/// Convenience wrapper discarding the variable names.
Laurent parse(const std::string& text);

/// Render in the input grammar, prefixed with a `vars:` header so that
/// parse(format(f)) == f including coordinate order.
std::string format(const Laurent& f, std::vector<std::string> vars = {});

/// Default variable names x, y, z, w, x5, x6, ...
std::vector<std::string> default_var_names(std::size_t dim);

/// Canonical serialized form: one term per line, `c e1 e2 ... en`.
std::string to_exponent_records(const Laurent& f);
Laurent from_exponent_records(const std::string& text);

}  // namespace lift
