#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zigzag/boundary_graph.hpp"

namespace zigzag {

/// Chain components carrying at least one leaf, left to right.
std::vector<std::string> essential_components(const BoundaryGraph& g);

/// The canonical class of the open surface vanishes exactly when one integer
/// m satisfies eps + 1 = m * mult on every essential component. Returns that
/// m, or nullopt. Works on any completion of the surface, normalized or not.
std::optional<int> k_triviality_constant(const BoundaryGraph& g);

enum class SurfaceClass { Hypersurface, Complement, AffinePlane };

std::string surface_class_name(SurfaceClass c);

/// Full classification of the affine surface a program describes. Computed on
/// the normalized program, so presentation choices cannot change the answer.
struct Classification {
  SurfaceClass surface_class = SurfaceClass::Complement;
  int q = 0;                      // number of leaves
  int k = 0;                      // chain blow-ups of the normalized program
  int steps = 0;                  // every blow-up of the normalized program
  bool k_trivial = false;
  std::optional<int> m;           // witness when k_trivial
  bool fixed_point_free_action = false;
  std::optional<int> hypersurface_degree;  // xy = p(z) with deg p = q
  bool affine_plane_warning = false;
  BlowupProgram normalized;
};

Classification classify(const BlowupProgram& p);

}  // namespace zigzag
