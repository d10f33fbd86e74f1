#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zigzag/boundary_graph.hpp"

namespace zigzag {

/// Coefficients of the canonical class representative supported on the
/// boundary: K = alpha*F0 - 2*D + sum(eps_i E_i) + sum(delta_j G_j), plus the
/// multiplicities of the fiber components in the total transform of the fiber.
struct CanonicalRecord {
  int alpha = 0;
  int d_coefficient = -2;
  std::vector<std::pair<std::string, int>> eps;    // chain order
  std::vector<std::pair<std::string, int>> delta;  // attachment order
  std::vector<std::pair<std::string, int>> mult;   // chain order, then leaves
};

/// Reads the record off the graph and verifies it against the independent
/// divisor-class computation (pullback_ledger) before returning. Requires the
/// graph to carry its construction history; throws UnsupportedInput otherwise
/// and InternalCheckFailure if the two routes ever disagree.
CanonicalRecord canonical_record(const BoundaryGraph& g);

/// Independent route: replays the program on divisor classes in the basis
/// (fiber, section, one class per blow-up), accumulates the canonical class,
/// and solves the resulting exact linear system for the boundary-supported
/// representative. Shares no state with the per-step bookkeeping.
struct PullbackLedger {
  int alpha = 0;
  std::map<std::string, int> coefficient;  // eps for chain comps, delta for leaves
};

PullbackLedger pullback_ledger(const BlowupProgram& p);

/// K.C + C.C = -2 for every boundary component, evaluated with exact integers
/// from the intersection matrix and the stored coefficients.
struct AdjunctionReport {
  bool pass = false;
  std::vector<std::pair<std::string, int>> residuals;  // K.C + C.C + 2, want 0
};

AdjunctionReport adjunction_check(const BoundaryGraph& g);

/// Position-dependent bounds on the canonical coefficients of the interior
/// exceptional components (everything except the step-1 pair): strictly below
/// -1 left of E1, at least 0 right of E1, strictly below mult-1 left of E0,
/// at least mult right of E0. Components on a graph without step 1 are exempt.
struct ChainBoundEntry {
  std::string label;
  int mult = 0;
  int eps = 0;
  bool left_of_e1 = false;  // otherwise right
  bool left_of_e0 = false;
  bool e1_bound_holds = false;
  bool e0_bound_holds = false;
  bool e1_bound_tight = false;  // eps == -2 left, eps == 0 right
  bool e0_bound_tight = false;  // eps == mult-2 left, eps == mult right
};

struct ChainBoundReport {
  bool pass = true;
  std::vector<ChainBoundEntry> entries;
};

ChainBoundReport check_chain_bounds(const BoundaryGraph& g);

}  // namespace zigzag
