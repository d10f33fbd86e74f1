#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "zigzag/boundary_graph.hpp"
#include "zigzag/canonical.hpp"
#include "zigzag/errors.hpp"

using namespace zigzag;

namespace {

BlowupProgram prog(int n, std::optional<Step1> s1,
                   std::vector<InteriorStep> interior,
                   std::vector<std::string> hosts) {
  return BlowupProgram{n, s1, std::move(interior), std::move(hosts)};
}

}  // namespace

TEST_CASE("base surface shape") {
  auto g = init_hirzebruch(1);
  CHECK(g.chain == std::vector<std::string>{"F0", "D", "F1"});
  CHECK(g.comp("F0").self_int == 0);
  CHECK(g.comp("D").self_int == 1);
  CHECK(g.comp("F1").self_int == 0);
  CHECK(g.comp("F1").mult == 1);
  CHECK(g.comp("F0").eps == -1);  // alpha = n - 2
  CHECK(g.comp("D").eps == -2);
  CHECK(g.intersection("F0", "D") == 1);
  CHECK(g.intersection("D", "F1") == 1);
  CHECK(g.intersection("F0", "F1") == 0);
  CHECK(g.intersection("D", "D") == 1);
  CHECK_FALSE(g.finalized);
  CHECK(validate(g).valid);
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
  CHECK(check_chain_bounds(g).pass);  // vacuous before step 1
  CHECK(check_chain_bounds(g).entries.empty());
}

TEST_CASE("base surface bounds") {
  CHECK_THROWS_AS(init_hirzebruch(-1), InvalidParameter);
  // the rewriting machinery may push the section below zero; the direct
  // constructor for that keeps every invariant intact
  auto g = base_graph(-1);
  CHECK(g.comp("D").self_int == -1);
  CHECK(g.comp("F0").eps == -3);
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
  CHECK(validate(g).valid);
}

TEST_CASE("step 1 at the section") {
  auto g = blow_up_step1(init_hirzebruch(3), Step1::OnD);
  CHECK(g.chain == std::vector<std::string>{"F0", "D", "E1", "E0"});
  CHECK(g.comp("D").self_int == 2);
  CHECK(g.comp("E1").self_int == -1);
  CHECK(g.comp("E1").eps == -1);
  CHECK(g.comp("E1").mult == 1);
  CHECK(g.comp("E0").self_int == -1);
  CHECK(g.comp("E0").eps == 0);
  CHECK(g.comp("E0").mult == 1);
  CHECK(g.comp("F0").eps == 1);  // alpha unchanged
  CHECK(g.e1 == "E1");
  CHECK(g.e0 == "E0");
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
  CHECK(validate(g).valid);
}

TEST_CASE("step 1 at a free point") {
  auto g = blow_up_step1(init_hirzebruch(3), Step1::Free);
  CHECK(g.chain == std::vector<std::string>{"F0", "D", "E1", "E0"});
  CHECK(g.comp("D").self_int == 3);  // untouched
  CHECK(g.comp("E1").self_int == -1);
  CHECK(g.comp("E1").eps == -1);
  CHECK(g.comp("E0").self_int == -1);
  CHECK(g.comp("E0").eps == 0);
  CHECK(g.comp("F0").eps == 2);  // alpha grows by one
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
}

TEST_CASE("interior blow-up between two exceptional components") {
  auto g = blow_up(blow_up_step1(init_hirzebruch(2), Step1::OnD),
                   BetweenStep{"E1", "E0"});
  CHECK(g.chain == std::vector<std::string>{"F0", "D", "E1", "E2", "E0"});
  CHECK(g.comp("E2").mult == 2);
  CHECK(g.comp("E2").eps == 0);  // -1 + 0 + 1
  CHECK(g.comp("E2").self_int == -1);
  CHECK(g.comp("E1").self_int == -2);
  CHECK(g.comp("E0").self_int == -2);
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
}

TEST_CASE("interior blow-up at the section corner") {
  auto g = blow_up(blow_up_step1(init_hirzebruch(2), Step1::OnD),
                   BetweenStep{"D", "E1"});
  CHECK(g.chain == std::vector<std::string>{"F0", "D", "E2", "E1", "E0"});
  CHECK(g.comp("E2").eps == -2);  // one below its right neighbor
  CHECK(g.comp("E2").mult == 1);
  CHECK(g.comp("D").self_int == 0);
  CHECK(g.comp("E1").self_int == -2);
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
}

TEST_CASE("interior blow-up at a free far right point") {
  auto g = blow_up(blow_up_step1(init_hirzebruch(2), Step1::OnD),
                   FarRightFreeStep{});
  CHECK(g.chain == std::vector<std::string>{"F0", "D", "E1", "E0", "E2"});
  CHECK(g.comp("E2").eps == 1);  // one above its host
  CHECK(g.comp("E2").mult == 1);
  CHECK(g.comp("E0").self_int == -2);
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
}

TEST_CASE("the final step hangs leaves and locks the graph") {
  auto g = final_step(blow_up_step1(init_hirzebruch(3), Step1::OnD),
                      {"E1", "E1", "E0"});
  CHECK(g.finalized);
  CHECK(g.leaf_count() == 3);
  CHECK(g.comp("E1").self_int == -3);
  CHECK(g.comp("E0").self_int == -2);
  CHECK(g.comp("G1").self_int == -1);
  CHECK(g.comp("G1").eps == 0);  // eps(E1) + 1
  CHECK(g.comp("G1").mult == 1);
  CHECK(g.comp("G3").eps == 1);  // eps(E0) + 1
  CHECK(g.leaves_of("E1") == std::vector<std::string>{"G1", "G2"});
  CHECK(g.attachments_host("G3") == "E0");
  CHECK_FALSE(g.affine_plane_warning);
  CHECK(adjunction_check(g).pass);
  CHECK(fiber_check(g).pass);
  CHECK(validate(g).valid);
}

TEST_CASE("single leaf on the untouched fiber raises the plane warning") {
  auto one = final_step(init_hirzebruch(0), {"F1"});
  CHECK(one.affine_plane_warning);
  auto two = final_step(init_hirzebruch(0), {"F1", "F1"});
  CHECK_FALSE(two.affine_plane_warning);
  auto blown = final_step(blow_up_step1(init_hirzebruch(0), Step1::OnD),
                          {"E1"});
  CHECK_FALSE(blown.affine_plane_warning);  // not the untouched base
}

TEST_CASE("illegal operations are rejected with the right category") {
  auto base = init_hirzebruch(2);
  CHECK_THROWS_AS(blow_up(base, BetweenStep{"D", "F1"}), InvalidState);
  auto g = blow_up_step1(base, Step1::OnD);
  CHECK_THROWS_AS(blow_up_step1(g, Step1::Free), InvalidState);
  CHECK_THROWS_AS(blow_up(g, BetweenStep{"F0", "D"}), InvalidLocation);
  CHECK_THROWS_AS(blow_up(g, BetweenStep{"D", "E0"}), InvalidLocation);
  CHECK_THROWS_AS(blow_up(g, BetweenStep{"E1", "E9"}), InvalidLocation);
  CHECK_THROWS_AS(final_step(g, {}), InvalidParameter);
  CHECK_THROWS_AS(final_step(g, {"F0"}), InvalidLocation);
  CHECK_THROWS_AS(final_step(g, {"Q7"}), InvalidLocation);
  auto done = final_step(g, {"E1"});
  CHECK_THROWS_AS(final_step(done, {"E1"}), InvalidState);
  CHECK_THROWS_AS(blow_up(done, FarRightFreeStep{}), InvalidState);
  CHECK_THROWS_AS(blow_up_step1(done, Step1::OnD), InvalidState);
}

TEST_CASE("contraction undoes each kind of blow-up") {
  auto base = init_hirzebruch(3);
  auto on_d = blow_up_step1(base, Step1::OnD);
  CHECK(contract(on_d, "E1") == base);
  // contracting the fiber transform instead lands one step lower
  CHECK(contract(on_d, "E0") == base_graph(2));

  auto free = blow_up_step1(base, Step1::Free);
  CHECK(contract(free, "E0") == base);
  CHECK(contract(free, "E1") == base_graph(4));

  auto mid = blow_up(on_d, BetweenStep{"E1", "E0"});
  CHECK(contract(mid, "E2") == on_d);
  auto corner = blow_up(on_d, BetweenStep{"D", "E1"});
  CHECK(contract(corner, "E2") == on_d);
  auto far = blow_up(on_d, FarRightFreeStep{});
  CHECK(contract(far, "E2") == on_d);

  auto done = final_step(on_d, {"E1", "E0"});
  CHECK(contract(contract(done, "G2"), "G1") == on_d);
  // partial undo keeps the graph finalized
  CHECK(contract(done, "G2").finalized);
}

TEST_CASE("contraction rejects what never contracts") {
  auto g = blow_up(blow_up_step1(init_hirzebruch(2), Step1::OnD),
                   BetweenStep{"E1", "E0"});
  CHECK_THROWS_AS(contract(g, "D"), InvalidLocation);
  CHECK_THROWS_AS(contract(g, "F0"), InvalidLocation);
  CHECK_THROWS_AS(contract(g, "E1"), InvalidState);  // self is -2
  CHECK_THROWS_AS(contract(g, "X1"), InvalidParameter);
  auto done = final_step(g, {"E2"});
  CHECK_THROWS_AS(contract(done, "E2"), InvalidState);  // self dropped to -2
  // a host that is still at -1 is refused for its leaf, not its shape
  auto single = final_step(init_hirzebruch(0), {"F1"});
  REQUIRE(single.comp("F1").self_int == -1);
  CHECK_THROWS_AS(contract(single, "F1"), LinearityViolation);
  // contraction drops the history: the result is not replayable
  CHECK_FALSE(contract(g, "E2").history.has_value());
}

TEST_CASE("replay matches manual construction and is deterministic") {
  auto p = prog(3, Step1::OnD, {BetweenStep{"E1", "E0"}}, {"E2"});
  auto manual = final_step(
      blow_up(blow_up_step1(init_hirzebruch(3), Step1::OnD),
              BetweenStep{"E1", "E0"}),
      {"E2"});
  CHECK(replay(p) == manual);
  CHECK(replay(p) == replay(p));
  CHECK(replay_stages(p).size() == 4);
  CHECK(replay(p).history == p);
  CHECK(chain_blowups(p) == 2);
  CHECK(steps_taken(p) == 3);
}

TEST_CASE("rewriting deletes a superfluous interior component") {
  // the far right blow-up is never used: drop it
  auto p = prog(1, Step1::OnD, {FarRightFreeStep{}}, {"E1"});
  auto n = normalize(p);
  // the deletion leaves the step-1 pair with an unused fiber transform,
  // which cascades into removing step 1 altogether
  CHECK(n == prog(0, std::nullopt, {}, {"F1"}));
  CHECK(normalize(n) == n);
}

TEST_CASE("rewriting shifts labels across a deleted step") {
  auto p = prog(1, Step1::OnD, {BetweenStep{"E1", "E0"}, FarRightFreeStep{}},
                {"E3"});
  // E2 (the between component) is superfluous; after its deletion the far
  // right component E3 becomes E2, then both step-1 scrubs fire in turn
  CHECK(normalize(p) == prog(2, std::nullopt, {}, {"F1"}));
}

TEST_CASE("rewriting the step-1 pair adjusts the base index") {
  // unused fiber transform of an on-section first step: base drops
  CHECK(normalize(prog(0, Step1::OnD, {}, {"E1"})) ==
        prog(-1, std::nullopt, {}, {"F1"}));
  // unused exceptional of an on-section first step: base stays
  CHECK(normalize(prog(1, Step1::OnD, {}, {"E0"})) ==
        prog(1, std::nullopt, {}, {"F1"}));
  // unused fiber transform of a free first step: base grows
  CHECK(normalize(prog(1, Step1::Free, {}, {"E0"})) ==
        prog(2, std::nullopt, {}, {"F1"}));
  CHECK(normalize(prog(1, Step1::Free, {}, {"E1"})) ==
        prog(1, std::nullopt, {}, {"F1"}));
}

TEST_CASE("programs with no superfluous component are fixed points") {
  for (const auto& p :
       {prog(2, Step1::OnD, {}, {"E1", "E0"}),
        prog(0, std::nullopt, {}, {"F1"}),
        prog(3, Step1::OnD, {BetweenStep{"E1", "E0"}}, {"E2", "E1", "E0"}),
        prog(-1, std::nullopt, {}, {"F1", "F1"})}) {
    CHECK(normalize(p) == p);
    CHECK(validate(replay(p)).good_closure);
  }
}

TEST_CASE("the graph flags superfluous components") {
  auto r = validate(replay(prog(1, Step1::OnD, {}, {"E1"})));
  CHECK(r.valid);
  CHECK(r.minus_one_chain == std::vector<std::string>{"E0"});
  CHECK_FALSE(r.good_closure);
}

TEST_CASE("validation catches corrupted graphs") {
  auto g = replay(prog(2, Step1::OnD, {}, {"E1", "E0"}));
  g.comp("D").eps = -1;
  auto r = validate(g);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.violations.empty());

  auto h = replay(prog(2, Step1::OnD, {}, {"E1"}));
  h.comp("G1").mult = 5;  // no longer matches its host
  CHECK_FALSE(validate(h).valid);
}

TEST_CASE("canonical record agrees with the divisor class replay") {
  auto p = prog(3, Step1::OnD, {BetweenStep{"E1", "E0"}}, {"E2"});
  auto rec = canonical_record(replay(p));  // throws on any disagreement
  CHECK(rec.alpha == 1);
  CHECK(rec.d_coefficient == -2);
  CHECK(rec.eps == std::vector<std::pair<std::string, int>>{
                       {"E1", -1}, {"E2", 0}, {"E0", 0}});
  CHECK(rec.delta == std::vector<std::pair<std::string, int>>{{"G1", 1}});
  CHECK(rec.mult ==
        std::vector<std::pair<std::string, int>>{
            {"E1", 1}, {"E2", 2}, {"E0", 1}, {"G1", 2}});

  auto ledger = pullback_ledger(p);
  CHECK(ledger.alpha == 1);
  CHECK(ledger.coefficient.at("E2") == 0);
  CHECK(ledger.coefficient.at("G1") == 1);
}

TEST_CASE("canonical record needs a replayable history") {
  auto g = contract(blow_up_step1(init_hirzebruch(2), Step1::OnD), "E1");
  CHECK_THROWS_AS(canonical_record(g), UnsupportedInput);
}

TEST_CASE("canonical cross-check spans many programs") {
  for (int n = 0; n <= 2; ++n) {
    for (auto s1 : {Step1::OnD, Step1::Free}) {
      for (const InteriorStep& step :
           {InteriorStep{BetweenStep{"E1", "E0"}},
            InteriorStep{BetweenStep{"D", "E1"}},
            InteriorStep{FarRightFreeStep{}}}) {
        auto p = prog(n, s1, {step}, {"E2", "E1"});
        CHECK_NOTHROW(canonical_record(replay(p)));
      }
    }
  }
}

TEST_CASE("a perturbed coefficient breaks adjunction") {
  auto g = replay(prog(2, Step1::OnD, {}, {"E1", "E0"}));
  REQUIRE(adjunction_check(g).pass);
  g.comp("E1").eps += 1;
  CHECK_FALSE(adjunction_check(g).pass);
}

TEST_CASE("a perturbed multiplicity breaks the fiber class") {
  auto g = replay(prog(2, Step1::OnD, {BetweenStep{"E1", "E0"}}, {"E2"}));
  REQUIRE(fiber_check(g).pass);
  g.comp("E2").mult = 1;
  CHECK_FALSE(fiber_check(g).pass);
}

TEST_CASE("coefficient bounds at an interior component") {
  auto g = blow_up(blow_up_step1(init_hirzebruch(2), Step1::OnD),
                   BetweenStep{"E1", "E0"});
  auto rep = check_chain_bounds(g);
  CHECK(rep.pass);
  REQUIRE(rep.entries.size() == 1);
  const auto& e = rep.entries[0];
  CHECK(e.label == "E2");
  CHECK_FALSE(e.left_of_e1);
  CHECK(e.left_of_e0);
  CHECK(e.e1_bound_holds);
  CHECK(e.e1_bound_tight);  // eps 0 right of E1
  CHECK(e.e0_bound_holds);
  CHECK(e.e0_bound_tight);  // eps = mult - 2
}

TEST_CASE("coefficient bounds left of the exceptional") {
  auto g = blow_up(blow_up_step1(init_hirzebruch(2), Step1::OnD),
                   BetweenStep{"D", "E1"});
  auto rep = check_chain_bounds(g);
  CHECK(rep.pass);
  REQUIRE(rep.entries.size() == 1);
  const auto& e = rep.entries[0];
  CHECK(e.label == "E2");
  CHECK(e.left_of_e1);
  CHECK(e.left_of_e0);
  CHECK(e.eps == -2);
  CHECK(e.e1_bound_tight);  // eps == -2 exactly at the bound
}
