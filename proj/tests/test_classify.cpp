#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "zigzag/classify.hpp"
#include "zigzag/errors.hpp"

using namespace zigzag;

namespace {

BlowupProgram prog(int n, std::optional<Step1> s1,
                   std::vector<InteriorStep> interior,
                   std::vector<std::string> hosts) {
  return BlowupProgram{n, s1, std::move(interior), std::move(hosts)};
}

}  // namespace

TEST_CASE("essential components are the hosts") {
  auto g = replay(prog(2, Step1::OnD, {}, {"E1", "E1"}));
  CHECK(essential_components(g) == std::vector<std::string>{"E1"});
  auto h = replay(prog(2, Step1::OnD, {}, {"E0", "E1"}));
  CHECK(essential_components(h) == std::vector<std::string>{"E1", "E0"});
}

TEST_CASE("the triviality constant needs a finished surface") {
  CHECK_THROWS_AS(k_triviality_constant(init_hirzebruch(2)), InvalidState);
}

TEST_CASE("hypersurface: no chain blow-ups, several leaves") {
  auto c = classify(prog(0, std::nullopt, {}, {"F1", "F1", "F1"}));
  CHECK(c.surface_class == SurfaceClass::Hypersurface);
  CHECK(surface_class_name(c.surface_class) == "H");
  CHECK(c.q == 3);
  CHECK(c.k == 0);
  CHECK(c.steps == 3);
  CHECK(c.k_trivial);
  CHECK(c.m == 1);
  CHECK(c.fixed_point_free_action);
  CHECK(c.hypersurface_degree == 3);
  CHECK_FALSE(c.affine_plane_warning);
}

TEST_CASE("complement: leaves on both members of the step-1 pair") {
  auto p = prog(2, Step1::OnD, {}, {"E1", "E0"});
  auto c = classify(p);
  CHECK(c.surface_class == SurfaceClass::Complement);
  CHECK(surface_class_name(c.surface_class) == "A_minus_H");
  CHECK(c.k == 1);
  CHECK(c.q == 2);
  CHECK(c.steps == 3);
  CHECK_FALSE(c.k_trivial);
  CHECK_FALSE(c.m.has_value());
  CHECK_FALSE(c.fixed_point_free_action);
  CHECK_FALSE(c.hypersurface_degree.has_value());
  CHECK(c.normalized == p);  // already normal
  // the witness disagrees between the two hosts: eps+1 is 0 on E1, 1 on E0
  CHECK_FALSE(k_triviality_constant(replay(p)).has_value());
}

TEST_CASE("classification sees through presentation choices") {
  // on the raw completion the only host gives m = 0; rewriting removes the
  // unused half of the pair and the surface is the plane with m = 1
  auto p = prog(1, Step1::OnD, {}, {"E1"});
  CHECK(k_triviality_constant(replay(p)) == 0);
  auto c = classify(p);
  CHECK(c.surface_class == SurfaceClass::AffinePlane);
  CHECK(c.m == 1);
  CHECK(c.k == 0);
  CHECK(c.q == 1);
  CHECK(c.normalized == prog(0, std::nullopt, {}, {"F1"}));
  CHECK(c.fixed_point_free_action);
  CHECK(c.hypersurface_degree == 1);
  CHECK(c.affine_plane_warning);
}

TEST_CASE("classification is invariant under rewriting") {
  for (const auto& p :
       {prog(1, Step1::OnD, {FarRightFreeStep{}}, {"E1"}),
        prog(2, Step1::Free, {}, {"E0", "E0"}),
        prog(0, Step1::OnD, {BetweenStep{"E1", "E0"}}, {"E2", "E2"}),
        prog(3, Step1::OnD, {BetweenStep{"D", "E1"}}, {"E2", "E1", "E0"})}) {
    auto direct = classify(p);
    auto renormalized = classify(normalize(p));
    CHECK(direct.surface_class == renormalized.surface_class);
    CHECK(direct.k == renormalized.k);
    CHECK(direct.q == renormalized.q);
    CHECK(direct.m == renormalized.m);
    CHECK(direct.normalized == renormalized.normalized);
  }
}

TEST_CASE("a genuine chain survives rewriting and blocks freeness") {
  auto p = prog(0, Step1::OnD, {BetweenStep{"E1", "E0"}}, {"E2", "E1"});
  auto c = classify(p);
  CHECK(c.normalized == p);
  CHECK(c.surface_class == SurfaceClass::Complement);
  CHECK(c.k == 2);
  CHECK_FALSE(c.fixed_point_free_action);
}

TEST_CASE("one leaf on the untouched fiber is the plane") {
  auto c = classify(prog(0, std::nullopt, {}, {"F1"}));
  CHECK(c.surface_class == SurfaceClass::AffinePlane);
  CHECK(c.affine_plane_warning);
  CHECK(c.q == 1);
  CHECK(c.hypersurface_degree == 1);
  // two leaves there instead is the smooth quadric surface x*y = p(z)
  auto c2 = classify(prog(0, std::nullopt, {}, {"F1", "F1"}));
  CHECK(c2.surface_class == SurfaceClass::Hypersurface);
  CHECK_FALSE(c2.affine_plane_warning);
}

TEST_CASE("a raw witness above one still signals the trivial class") {
  // on this completion the only host has eps 1 and mult 1, so the raw
  // witness is m = 2; the criterion says any witness at all forces k = 0
  // after rewriting, and indeed the chain collapses to the bare fiber
  auto p = prog(2, Step1::OnD, {FarRightFreeStep{}}, {"E2", "E2"});
  auto g = replay(p);
  CHECK(essential_components(g) == std::vector<std::string>{"E2"});
  CHECK(k_triviality_constant(g) == 2);
  auto c = classify(p);
  CHECK(c.normalized == prog(3, std::nullopt, {}, {"F1", "F1"}));
  CHECK(c.k == 0);
  CHECK(c.k_trivial);
  CHECK(c.m == 1);  // recomputed on the normalized completion
  CHECK(c.surface_class == SurfaceClass::Hypersurface);
}
