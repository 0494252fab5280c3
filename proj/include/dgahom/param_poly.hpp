#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgahom/rational.hpp"

namespace dgahom {

// Laurent polynomial over Q in indexed scalar unknowns. Used as the
// coefficient ring for morphisms with undetermined coefficients and for
// parametrized solution families.
class ParamPoly {
 public:
  // Sorted by variable index, nonzero exponents only.
  using Mono = std::vector<std::pair<std::uint32_t, std::int32_t>>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: implicit promotion is intended
  ParamPoly(long c) : ParamPoly(Rational(c)) {}

  static ParamPoly variable(std::uint32_t index, std::int32_t exp = 1);
  static ParamPoly monomial(const Mono& m, const Rational& c);

  const std::map<Mono, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // Largest total exponent over terms; 0 for constants and zero.
  int total_degree() const;
  bool has_negative_exponent() const;
  std::vector<std::uint32_t> variables() const;
  // For a polynomial of total degree <= 1: the coefficient of one variable.
  Rational linear_coefficient(std::uint32_t var) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  bool operator==(const ParamPoly& other) const { return terms_ == other.terms_; }

  ParamPoly pow(unsigned exp) const;

  // Throws PreconditionViolated on a zero value under a negative exponent.
  Rational evaluate(std::span<const Rational> values) const;
  // Negative exponents require the substituted value to be a single term.
  ParamPoly substitute(std::span<const ParamPoly> values) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Mono& m, const Rational& c);
  std::map<Mono, Rational> terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

}  // namespace dgahom
