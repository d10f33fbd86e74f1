#include "zigzag/classify.hpp"

namespace zigzag {

std::vector<std::string> essential_components(const BoundaryGraph& g) {
  std::vector<std::string> out;
  for (const auto& label : g.chain_e_components()) {
    if (!g.leaves_of(label).empty()) out.push_back(label);
  }
  return out;
}

std::optional<int> k_triviality_constant(const BoundaryGraph& g) {
  if (!g.finalized) {
    throw InvalidState("k-triviality is decided on a finished surface");
  }
  std::optional<int> m;
  for (const auto& label : essential_components(g)) {
    const Component& c = g.comp(label);
    int want = c.eps + 1;
    if (want % c.mult != 0) return std::nullopt;
    int candidate = want / c.mult;
    if (m && *m != candidate) return std::nullopt;
    m = candidate;
  }
  return m;
}

std::string surface_class_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Hypersurface:
      return "H";
    case SurfaceClass::Complement:
      return "A_minus_H";
    case SurfaceClass::AffinePlane:
      return "AffinePlane";
  }
  return "A_minus_H";
}

Classification classify(const BlowupProgram& p) {
  Classification out;
  out.normalized = normalize(p);
  BoundaryGraph g = replay(out.normalized);
  out.q = g.leaf_count();
  out.k = chain_blowups(out.normalized);
  out.steps = steps_taken(out.normalized);
  out.m = k_triviality_constant(g);
  out.k_trivial = out.m.has_value();
  out.affine_plane_warning = g.affine_plane_warning;
  if (out.k == 0) {
    out.surface_class =
        out.q >= 2 ? SurfaceClass::Hypersurface : SurfaceClass::AffinePlane;
  } else {
    out.surface_class = SurfaceClass::Complement;
  }
  // complements of hypersurfaces in the affine 3-space family carry no free
  // translation-like action; the hypersurfaces xy = p(z) and the plane do
  out.fixed_point_free_action = out.surface_class != SurfaceClass::Complement;
  if (out.surface_class != SurfaceClass::Complement) {
    out.hypersurface_degree = out.q;
  }
  return out;
}

}  // namespace zigzag
