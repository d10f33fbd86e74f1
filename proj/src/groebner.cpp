#include "zigzag/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace zigzag {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  // does monomial a divide monomial b
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  auto [ef, cf] = f.leading_term(order);
  auto [eg, cg] = g.leading_term(order);
  Exponents l = exp_lcm(ef, eg);
  Polynomial mf = Polynomial::monomial(f.vars(), exp_sub(l, ef), Rational(1) / cf);
  Polynomial mg = Polynomial::monomial(g.vars(), exp_sub(l, eg), Rational(1) / cg);
  return mf * f - mg * g;
}

}  // namespace

Reduction reduce_with_cofactors(const Polynomial& f,
                                const std::vector<Polynomial>& basis,
                                MonomialOrder order) {
  Polynomial nf = Polynomial::zero(f.vars());
  std::vector<Polynomial> cofactors(basis.size(), Polynomial::zero(f.vars()));
  Polynomial work = f;
  while (!work.is_zero()) {
    auto [e, c] = work.leading_term(order);
    bool stepped = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      auto [be, bc] = basis[i].leading_term(order);
      if (!divides(be, e)) continue;
      Polynomial q = Polynomial::monomial(f.vars(), exp_sub(e, be), c / bc);
      work -= q * basis[i];
      cofactors[i] += q;
      stepped = true;
      break;
    }
    if (!stepped) {
      Polynomial t = Polynomial::monomial(f.vars(), e, c);
      nf += t;
      work -= t;
    }
  }
  return {std::move(nf), std::move(cofactors)};
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  MonomialOrder order) {
  return reduce_with_cofactors(f, basis, order).normal_form;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   MonomialOrder order) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) return {};

  using PairKey = std::tuple<int, Exponents, std::size_t, std::size_t>;
  std::set<PairKey> pairs;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Exponents l = exp_lcm(basis[i].leading_term(order).first,
                          basis[j].leading_term(order).first);
    pairs.emplace(total_degree(l), std::move(l), i, j);
  };
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
  }

  while (!pairs.empty()) {
    auto [deg, l, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial r = reduce(spoly(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
  }

  // reduce to the unique reduced basis
  for (auto& g : basis) {
    g *= Rational(1) / g.leading_term(order).second;
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_less(a.leading_term(order).first, b.leading_term(order).first,
                         order);
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (divides(kept.leading_term(order).first, g.leading_term(order).first)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (k != i) others.push_back(minimal[k]);
      }
      Polynomial r = reduce(minimal[i], others, order);
      if (r != minimal[i]) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  return minimal;
}

Ideal::Ideal(VarSetPtr vars, std::vector<Polynomial> generators, MonomialOrder order)
    : vars_(std::move(vars)), generators_(std::move(generators)), order_(order) {
  if (!vars_) throw InvalidParameter("ideal needs a variable set");
  for (const auto& g : generators_) {
    if (!(g.vars() == vars_ || *g.vars() == *vars_)) {
      throw VariableMismatch("ideal generator over a different variable set");
    }
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  if (!basis_) basis_ = buchberger(generators_, order_);
  return *basis_;
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  return reduce(f, ideal.groebner_basis(), ideal.order()).is_zero();
}

bool contains_one(const Ideal& ideal) {
  return ideal_member(Polynomial::constant(ideal.vars(), 1), ideal);
}

Polynomial poly_gcd_univariate(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars() == b.vars() || *a.vars() == *b.vars())) {
    throw VariableMismatch("gcd of polynomials over different variable sets");
  }
  std::size_t used = 0;
  for (std::size_t i = 0; i < a.vars()->size(); ++i) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) ++used;
  }
  if (used > 1) throw InvalidParameter("gcd needs polynomials in one variable");

  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = reduce(x, {y}, MonomialOrder::Lex);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading_term(MonomialOrder::Lex).second);
}

}  // namespace zigzag
