#pragma once

#include <optional>
#include <vector>

#include "zigzag/polynomial.hpp"

namespace zigzag {

/// Result of multivariate division: f = sum(cofactors[i] * basis[i]) + normal_form,
/// and no term of normal_form is divisible by any basis leading term.
struct Reduction {
  Polynomial normal_form;
  std::vector<Polynomial> cofactors;
};

Reduction reduce_with_cofactors(const Polynomial& f,
                                const std::vector<Polynomial>& basis,
                                MonomialOrder order);

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  MonomialOrder order);

/// Buchberger's algorithm, no pair-pruning criteria. Pairs are processed in
/// increasing (lcm total degree, lcm, insertion indices) order. The output is
/// the reduced Groebner basis: monic, minimal, interreduced, sorted ascending
/// by leading term, so equal ideals with equal orders give identical output.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   MonomialOrder order);

/// Generator list plus a lazily computed, cached Groebner basis.
/// The cache makes the object non-thread-safe per instance.
class Ideal {
 public:
  Ideal(VarSetPtr vars, std::vector<Polynomial> generators,
        MonomialOrder order = MonomialOrder::GrevLex);

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& groebner_basis() const;

 private:
  VarSetPtr vars_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  mutable std::optional<std::vector<Polynomial>> basis_;
};

bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool contains_one(const Ideal& ideal);

/// Monic gcd of two polynomials in at most one shared variable.
/// gcd(0, 0) = 0. Throws InvalidParameter if more than one variable occurs.
Polynomial poly_gcd_univariate(const Polynomial& a, const Polynomial& b);

}  // namespace zigzag
