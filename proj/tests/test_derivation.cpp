#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "zigzag/derivation.hpp"
#include "zigzag/errors.hpp"

using namespace zigzag;

TEST_CASE("construction rejects mismatched images") {
  auto vars = make_varset({"x", "y"});
  PresentedRing ring{vars, Ideal(vars, {})};
  CHECK_THROWS_AS(make_derivation("d", ring, {Polynomial::zero(vars)}),
                  InvalidParameter);
  auto other = make_varset({"a", "b"});
  CHECK_THROWS_AS(
      make_derivation("d", ring,
                      {Polynomial::zero(other), Polynomial::zero(other)}),
      VariableMismatch);
}

TEST_CASE("both four-space derivations preserve the relations") {
  auto fs = fixtures::four_space();
  CHECK(preserves_ideal(fs.d1));
  CHECK(preserves_ideal(fs.d2));
  CHECK_FALSE(preservation_witness(fs.d1).has_value());
}

TEST_CASE("four-space nilpotency indices") {
  auto fs = fixtures::four_space();
  // d1 kills x; the chain is x, z, y, u with indices 1, 2, 4, 9
  CHECK(nilpotency_index(fs.d1, Polynomial::variable(fs.vars, 0)) == 1);
  CHECK(nilpotency_index(fs.d1, Polynomial::variable(fs.vars, 1)) == 4);
  CHECK(nilpotency_index(fs.d1, Polynomial::variable(fs.vars, 2)) == 2);
  CHECK(nilpotency_index(fs.d1, Polynomial::variable(fs.vars, 3)) == 9);
  // d2 is the mirror image under x <-> u, y <-> z
  CHECK(nilpotency_index(fs.d2, Polynomial::variable(fs.vars, 0)) == 9);
  CHECK(nilpotency_index(fs.d2, Polynomial::variable(fs.vars, 1)) == 2);
  CHECK(nilpotency_index(fs.d2, Polynomial::variable(fs.vars, 2)) == 4);
  CHECK(nilpotency_index(fs.d2, Polynomial::variable(fs.vars, 3)) == 1);
}

TEST_CASE("index of a product stays under the additive bound") {
  auto fs = fixtures::four_space();
  auto zy = Polynomial::variable(fs.vars, 2) * Polynomial::variable(fs.vars, 1);
  // index(z) + index(y) - 1 = 5, and it is attained
  CHECK(nilpotency_index(fs.d1, zy) == 5);
}

TEST_CASE("certificates for the four-space derivations") {
  auto fs = fixtures::four_space();
  auto cert = is_lnd(fs.d1, 16);
  CHECK(cert.verdict == LndVerdict::CertifiedYes);
  CHECK(verdict_name(cert.verdict) == "certified-yes");
  CHECK_FALSE(cert.witness.has_value());
  REQUIRE(cert.generator_indices.size() == 4);
  CHECK(cert.generator_indices[0].variable == "x");
  CHECK(cert.generator_indices[0].index == 1);
  CHECK(cert.generator_indices[3].index == 9);
}

TEST_CASE("a derivation that does not preserve the ideal is refused") {
  auto vars = make_varset({"x", "y"});
  auto x = Polynomial::variable(vars, 0), y = Polynomial::variable(vars, 1);
  auto one = Polynomial::constant(vars, 1);
  PresentedRing ring{vars, Ideal(vars, {x * y - one})};
  auto d = make_derivation("bad", ring, {y, Polynomial::zero(vars)});
  auto w = preservation_witness(d);
  REQUIRE(w.has_value());
  CHECK(w->relation_index == 0);
  CHECK(w->image_normal_form == y * y);
  auto cert = is_lnd(d, 8);
  CHECK(cert.verdict == LndVerdict::No);
  CHECK(verdict_name(cert.verdict) == "no");
}

TEST_CASE("a non-nilpotent derivation stays inconclusive") {
  auto vars = make_varset({"x"});
  auto x = Polynomial::variable(vars, 0);
  PresentedRing ring{vars, Ideal(vars, {})};
  auto d = make_derivation("euler", ring, {x});
  CHECK_FALSE(nilpotency_index(d, x, 8).has_value());
  auto cert = is_lnd(d, 8);
  CHECK(cert.verdict == LndVerdict::Inconclusive);
  CHECK(cert.cap == 8);
  REQUIRE(cert.generator_indices.size() == 1);
  CHECK_FALSE(cert.generator_indices[0].index.has_value());
}

TEST_CASE("fixed points are where all images vanish") {
  auto fs = fixtures::four_space();
  // every image of d1 vanishes on the curve x = 0, z = 1; not free
  CHECK_FALSE(is_fixed_point_free(fs.d1));
  CHECK_FALSE(is_fixed_point_free(fs.d2));
  // a translation has no fixed points at all
  auto vars = make_varset({"x", "y"});
  PresentedRing plane{vars, Ideal(vars, {})};
  auto slide = make_derivation(
      "slide", plane,
      {Polynomial::constant(vars, 1), Polynomial::variable(vars, 0)});
  CHECK(is_fixed_point_free(slide));
}

TEST_CASE("the Leibniz rule holds modulo the relations") {
  auto fs = fixtures::four_space();
  std::minstd_rand rng(7);
  std::uniform_int_distribution<int> exp(0, 2), coeff(-3, 3);
  auto random_poly = [&]() {
    auto p = Polynomial::zero(fs.vars);
    for (int t = 0; t < 3; ++t) {
      Exponents e(fs.vars->size());
      for (auto& v : e) v = exp(rng);
      p += Polynomial::monomial(fs.vars, e, make_rational(coeff(rng)));
    }
    return p;
  };
  for (int round = 0; round < 10; ++round) {
    auto f = random_poly(), g = random_poly();
    auto lhs = apply(fs.d1, f * g);
    auto rhs = f * apply(fs.d1, g) + g * apply(fs.d1, f);
    CHECK(ideal_member(lhs - rhs, fs.ring.relations));
  }
}
