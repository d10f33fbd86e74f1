#include "zigzag/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zigzag {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw InvalidParameter("bad rational literal: " + text);
  }
  if (r.get_den() == 0) throw InvalidParameter("rational with zero denominator");
  r.canonicalize();
  return r;
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidParameter("empty variable name");
    if (!seen.insert(n).second) {
      throw InvalidParameter("duplicate variable name: " + n);
    }
  }
}

std::optional<std::size_t> VarSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool monomial_less(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (a.size() != b.size()) {
    throw VariableMismatch("exponent vectors of different length");
  }
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
      }
      return false;
    case MonomialOrder::GrevLex: {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db;
      // same degree: a > b iff the last nonzero entry of a-b is negative
      for (std::size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;  // last nonzero positive => a smaller
      }
      return false;
    }
  }
  return false;
}

static void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.vars() == b.vars()) return;
  if (a.vars() && b.vars() && *a.vars() == *b.vars()) return;
  throw VariableMismatch("polynomials over different variable sets");
}

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw InvalidParameter("polynomial needs a variable set");
}

Polynomial Polynomial::constant(VarSetPtr vars, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
  Polynomial p(std::move(vars));
  if (index >= p.vars_->size()) throw InvalidParameter("variable index out of range");
  Exponents e(p.vars_->size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, Exponents exps, const Rational& c) {
  Polynomial p(std::move(vars));
  if (exps.size() != p.vars_->size()) {
    throw VariableMismatch("exponent vector length does not match variable set");
  }
  for (int e : exps) {
    if (e < 0) throw InvalidParameter("negative exponent");
  }
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

std::pair<Exponents, Rational> Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw InvalidState("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (monomial_less(best->first, it->first, order)) best = it;
  }
  return {best->first, best->second};
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= vars_->size()) throw InvalidParameter("variable index out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  if (var >= vars_->size()) throw InvalidParameter("variable index out of range");
  require_same_vars(*this, value);
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    int k = f[var];
    f[var] = 0;
    out += Polynomial::monomial(vars_, f, c) * pow(value, k);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_->size()) {
    throw InvalidParameter("evaluation point has the wrong dimension");
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  require_same_vars(*this, o);
  return terms_ == o.terms_;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a, b);
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, Polynomial p) {
  p *= c;
  return p;
}

Polynomial operator*(Polynomial p, const Rational& c) {
  p *= c;
  return p;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw InvalidParameter("negative polynomial exponent");
  Polynomial out = Polynomial::constant(base.vars(), 1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // terms in descending grevlex order
  std::vector<const std::pair<const Exponents, Rational>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return monomial_less(b->first, a->first, MonomialOrder::GrevLex);
  });

  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const auto& [e, c] = *t;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

}  // namespace zigzag
