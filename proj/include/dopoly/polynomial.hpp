#pragma once

// Sparse polynomial arithmetic over a Field: univariate, bivariate, and a
// parametric form with an unbound coefficient parameter `a`. Exponents are
// exact; reduce_mod_field maps nonzero exponents into [1, q-1] and leaves 0
// alone, so the induced function on F_q is preserved (X^{q-1} is not the
// constant 1 as a function: it vanishes at 0).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dopoly/finite_field.hpp"

namespace dopoly {

class SparsePoly {
 public:
  explicit SparsePoly(const Field& field) : field_(&field) {}

  const Field& field() const { return *field_; }
  const std::map<long long, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Max exponent; nullopt marks the zero polynomial.
  std::optional<long long> degree() const;
  FieldElement coeff(long long exponent) const;
  void add_term(long long exponent, const FieldElement& c);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  const Field* field_;
  std::map<long long, FieldElement> terms_;  // no zero coefficients stored
};

class BivariatePoly {
 public:
  explicit BivariatePoly(const Field& field) : field_(&field) {}

  const Field& field() const { return *field_; }
  const std::map<std::pair<long long, long long>, FieldElement>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  long long total_degree() const;  // -1 for the zero polynomial
  FieldElement coeff(long long xexp, long long yexp) const;
  void add_term(long long xexp, long long yexp, const FieldElement& c);

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);

 private:
  const Field* field_;
  std::map<std::pair<long long, long long>, FieldElement> terms_;
};

// A polynomial whose coefficients are c * a^j with the parameter a unbound.
class ParametricPoly {
 public:
  explicit ParametricPoly(const Field& field) : field_(&field) {}

  const Field& field() const { return *field_; }
  const std::map<std::pair<long long, int>, FieldElement>& terms() const {
    return terms_;
  }
  bool has_parameter() const;
  void add_term(long long exponent, int a_power, const FieldElement& c);
  SparsePoly bind(const FieldElement& a) const;
  SparsePoly bind_constant() const;  // UnboundParameterError if `a` occurs

 private:
  const Field* field_;
  std::map<std::pair<long long, int>, FieldElement> terms_;  // (exp, a power)
};

FieldElement eval(const SparsePoly& f, const FieldElement& x);
FieldElement eval(const BivariatePoly& h, const FieldElement& x,
                  const FieldElement& y);

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly sub(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
SparsePoly scale(const SparsePoly& f, const FieldElement& c);
// f(X) -> f(X^d), d >= 1.
SparsePoly compose_monomial(const SparsePoly& f, long long d);
// The unique representative of degree < q inducing the same function.
SparsePoly reduce_mod_field(const SparsePoly& f);
// f(X+Y) - f(X) - f(Y), expanded exactly in the field.
BivariatePoly delta_bivariate(const SparsePoly& f);

// Grammar: terms joined by +/-; term := [coeff *] [a [^int] *] [x [^int]];
// coeff is a decimal integer or a parenthesized coordinate tuple; the '*'
// separators are optional and whitespace is ignored. Case-insensitive.
ParametricPoly parse_parametric(const std::string& s, const Field& field);
SparsePoly parse_poly(const std::string& s, const Field& field,
                      std::optional<FieldElement> a = std::nullopt);
BivariatePoly parse_bivariate(const std::string& s, const Field& field,
                              std::optional<FieldElement> a = std::nullopt);

std::string format_poly(const SparsePoly& f);
std::string format_poly(const BivariatePoly& h);

}  // namespace dopoly
