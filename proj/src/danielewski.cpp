#include "zigzag/danielewski.hpp"

#include <algorithm>

namespace zigzag {

namespace {

constexpr std::size_t kX = 0, kY = 1, kZ = 2;

VarSetPtr surface_vars() {
  static VarSetPtr vars = make_varset({"x", "y", "z"});
  return vars;
}

Polynomial rewrite_in_z(const Polynomial& p) {
  std::optional<std::size_t> used;
  for (std::size_t i = 0; i < p.vars()->size(); ++i) {
    if (p.degree_in(i) > 0) {
      if (used) throw InvalidParameter("the defining polynomial must be univariate");
      used = i;
    }
  }
  VarSetPtr vars = surface_vars();
  Polynomial out = Polynomial::zero(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(vars->size(), 0);
    if (used) f[kZ] = e[*used];
    out += Polynomial::monomial(vars, f, c);
  }
  return out;
}

}  // namespace

DanielewskiSurface build_danielewski(const Polynomial& p_in) {
  Polynomial p = rewrite_in_z(p_in);
  int q = p.degree_in(kZ);
  if (q < 1) {
    throw InvalidParameter("the defining polynomial must have degree at least 1");
  }
  VarSetPtr vars = surface_vars();
  Polynomial x = Polynomial::variable(vars, kX);
  Polynomial y = Polynomial::variable(vars, kY);
  Polynomial zero = Polynomial::zero(vars);
  Polynomial dp = p.derivative(kZ);

  Ideal relations(vars, {x * y - p});
  PresentedRing ring{vars, relations};
  Derivation dx = make_derivation("d_x", ring, {zero, dp, x});
  Derivation dy = make_derivation("d_y", ring, {dp, zero, y});
  return DanielewskiSurface{p, q, ring, std::move(dx), std::move(dy),
                            std::nullopt};
}

DanielewskiSurface build_danielewski_from_roots(
    const std::vector<Rational>& roots) {
  if (roots.empty()) throw InvalidParameter("need at least one root");
  VarSetPtr vars = surface_vars();
  Polynomial z = Polynomial::variable(vars, kZ);
  Polynomial p = Polynomial::constant(vars, 1);
  for (const auto& r : roots) p *= z - Polynomial::constant(vars, r);
  DanielewskiSurface s = build_danielewski(p);
  s.roots = roots;
  return s;
}

bool is_smooth(const DanielewskiSurface& s) {
  Polynomial g = poly_gcd_univariate(s.p, s.p.derivative(kZ));
  return g.degree() == 0;
}

bool is_smooth_groebner(const DanielewskiSurface& s) {
  VarSetPtr vars = s.ring.vars;
  Polynomial x = Polynomial::variable(vars, kX);
  Polynomial y = Polynomial::variable(vars, kY);
  // relation and all three partial derivatives of x*y - p(z)
  Ideal jac(vars, {x * y - s.p, y, x, s.p.derivative(kZ)});
  return contains_one(jac);
}

BlowupProgram zigzag_of(const DanielewskiSurface& s) {
  if (!is_smooth(s)) {
    throw InvalidState("the boundary zigzag is defined for smooth surfaces");
  }
  BlowupProgram p;
  p.base_n = 0;
  p.attachments.assign(static_cast<std::size_t>(s.q), "F1");
  return p;
}

EmbeddingWitness embedding_witness(const DanielewskiSurface& s) {
  if (!is_smooth(s)) {
    throw InvalidState("embedding data is certified for smooth surfaces");
  }
  VarSetPtr vars = s.ring.vars;
  EmbeddingWitness w{Polynomial::variable(vars, kX),
                     Polynomial::variable(vars, kY),
                     Polynomial::variable(vars, kZ),
                     Polynomial::zero(vars),
                     false,
                     s.roots,
                     false};
  Polynomial identity = w.rho * w.v - s.p.substitute(kZ, w.u);
  w.relation = reduce(identity, s.ring.relations.groebner_basis(),
                      s.ring.relations.order());
  w.relation_holds = w.relation.is_zero();
  if (s.roots) {
    w.roots_distinct = true;
    for (std::size_t i = 0; i < s.roots->size(); ++i) {
      for (std::size_t j = i + 1; j < s.roots->size(); ++j) {
        if ((*s.roots)[i] == (*s.roots)[j]) w.roots_distinct = false;
      }
    }
  }
  return w;
}

}  // namespace zigzag
