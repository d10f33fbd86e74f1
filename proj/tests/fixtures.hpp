#pragma once

// Shared hand-built inputs for the test suite. The four-space surface below
// is built with explicit arithmetic, independently of the text parsers, so
// parser bugs cannot leak into the algebra tests.

#include <string>
#include <vector>

#include "zigzag/derivation.hpp"
#include "zigzag/polynomial.hpp"

namespace fixtures {

using zigzag::Derivation;
using zigzag::Ideal;
using zigzag::Polynomial;
using zigzag::PresentedRing;
using zigzag::VarSetPtr;

struct FourSpace {
  VarSetPtr vars;  // x, y, z, u
  PresentedRing ring;
  Derivation d1;
  Derivation d2;
};

// Smooth affine surface in 4-space cut out by
//   x*y = (z^2 - 1)*z,  z*u = (y^2 - 1)*y,  x*u = (y^2 - 1)*(z^2 - 1)
// with the two triangular derivations d1 (kills x) and d2 (kills u).
inline FourSpace four_space() {
  auto vars = zigzag::make_varset({"x", "y", "z", "u"});
  const auto c = [&](long n) { return Polynomial::constant(vars, n); };
  const auto X = Polynomial::variable(vars, 0);
  const auto Y = Polynomial::variable(vars, 1);
  const auto Z = Polynomial::variable(vars, 2);
  const auto U = Polynomial::variable(vars, 3);

  const auto py = Y * Y - c(1);  // y^2 - 1
  const auto pz = Z * Z - c(1);  // z^2 - 1
  std::vector<Polynomial> rels = {X * Y - pz * Z, Z * U - py * Y,
                                  X * U - py * pz};
  PresentedRing ring{vars, Ideal(vars, rels)};

  const auto dz = c(3) * Z * Z - c(1);  // (z^3 - z)'
  const auto dy = c(3) * Y * Y - c(1);
  Derivation d1 = zigzag::make_derivation(
      "d1", ring,
      {Polynomial::zero(vars), dz * X, X * X,
       c(2) * Z * py * X + c(2) * Y * pz * dz});
  Derivation d2 = zigzag::make_derivation(
      "d2", ring,
      {c(2) * Y * pz * U + c(2) * Z * py * dy, U * U, dy * U,
       Polynomial::zero(vars)});
  return FourSpace{vars, ring, d1, d2};
}

// The same ring in the text grammar, for parser and CLI round trips.
inline const char* four_space_text() {
  return R"(# surface in 4-space with two additive group actions
ring vars x, y, z, u
ideal {
  x*y - (z^2 - 1)*z;
  z*u - (y^2 - 1)*y;
  x*u - (y^2 - 1)*(z^2 - 1);
}
derivation d1 {
  x -> 0;
  y -> (3*z^2 - 1)*x;
  z -> x^2;
  u -> 2*z*(y^2 - 1)*x + 2*y*(z^2 - 1)*(3*z^2 - 1);
}
derivation d2 {
  u -> 0;
  y -> u^2;
  z -> (3*y^2 - 1)*u;
  x -> 2*y*(z^2 - 1)*u + 2*z*(y^2 - 1)*(3*y^2 - 1);
}
)";
}

}  // namespace fixtures
