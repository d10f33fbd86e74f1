#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

/// Exact rational coefficient. Always kept in canonical form.
using Rational = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// Parses "7", "-3", "3/4". Throws InvalidParameter on zero denominator.
Rational rational_from_string(const std::string& text);

/// Immutable ordered list of variable names. Polynomials share one via pointer;
/// two polynomials are compatible when their sets compare equal by content.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  bool operator==(const VarSet&) const = default;

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

/// Exponent vector, one entry per variable, entries >= 0.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

enum class MonomialOrder { GrevLex, Lex };

/// Strict "a < b" in the given order. Both vectors must have equal length.
bool monomial_less(const Exponents& a, const Exponents& b, MonomialOrder order);

/// Multivariate polynomial with exact rational coefficients, stored as a
/// canonical monomial -> coefficient map (no zero coefficients).
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(VarSetPtr vars);

  static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars)); }
  static Polynomial constant(VarSetPtr vars, const Rational& c);
  static Polynomial variable(VarSetPtr vars, std::size_t index);
  static Polynomial monomial(VarSetPtr vars, Exponents exps, const Rational& c);

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Degree of the zero polynomial is reported as -1.
  int degree() const;
  int degree_in(std::size_t var) const;

  /// Largest term under the order. Throws InvalidState on the zero polynomial.
  std::pair<Exponents, Rational> leading_term(MonomialOrder order) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  Polynomial operator-() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Deterministic human-readable form, terms in descending grevlex order.
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  VarSetPtr vars_;
  TermMap terms_;

  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, Polynomial p);
Polynomial operator*(Polynomial p, const Rational& c);
Polynomial pow(const Polynomial& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace zigzag
