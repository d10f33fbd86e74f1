#pragma once

#include <optional>
#include <vector>

#include "zigzag/boundary_graph.hpp"
#include "zigzag/derivation.hpp"

namespace zigzag {

/// The surface x*y = p(z) in affine 3-space, deg p = q >= 1, together with
/// the two standard derivations that witness its symmetry.
struct DanielewskiSurface {
  Polynomial p;  // univariate in z, expressed in the surface variables
  int q = 0;
  PresentedRing ring;  // C[x, y, z] / (x*y - p(z))
  Derivation d_x;      // x -> 0, z -> x, y -> p'(z)
  Derivation d_y;      // y -> 0, z -> y, x -> p'(z)
  std::optional<std::vector<Rational>> roots;  // known when built from roots
};

/// Accepts a nonconstant polynomial in one variable (any name) and rewrites
/// it in the surface coordinate z.
DanielewskiSurface build_danielewski(const Polynomial& p);
DanielewskiSurface build_danielewski_from_roots(const std::vector<Rational>& roots);

/// Smooth exactly when p has no repeated root. Two independent routes:
/// a univariate gcd of (p, p'), and the Jacobian ideal via a Groebner basis.
bool is_smooth(const DanielewskiSurface& s);
bool is_smooth_groebner(const DanielewskiSurface& s);

/// Boundary zigzag of the smooth surface: the base fiber receives one leaf
/// per root of p and nothing else. Throws InvalidState on a singular surface.
BlowupProgram zigzag_of(const DanielewskiSurface& s);

/// Certified data for the closed embedding into 3-space.
struct EmbeddingWitness {
  Polynomial rho, v, u;   // the three coordinate functions
  Polynomial relation;    // rho*v - p(u), reduced in the surface ring
  bool relation_holds = false;
  std::optional<std::vector<Rational>> roots;
  bool roots_distinct = false;  // meaningful only when roots are known
};

EmbeddingWitness embedding_witness(const DanielewskiSurface& s);

}  // namespace zigzag
