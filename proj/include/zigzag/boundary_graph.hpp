#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

// ---------------------------------------------------------------------------
// Blow-up programs
// ---------------------------------------------------------------------------

/// The two legal first blow-ups: the intersection point of the fiber with the
/// horizontal section D, or a free point of the fiber.
enum class Step1 { OnD, Free };

/// Blow up the intersection point of two adjacent chain components.
struct BetweenStep {
  std::string left;
  std::string right;
  bool operator==(const BetweenStep&) const = default;
};

/// Blow up a free point of the rightmost chain component.
struct FarRightFreeStep {
  bool operator==(const FarRightFreeStep&) const = default;
};

using InteriorStep = std::variant<BetweenStep, FarRightFreeStep>;

/// A complete construction recipe: base surface, optional step 1, interior
/// blow-ups, and the closing multi-attachment of (-1)-leaves.
struct BlowupProgram {
  int base_n = 0;  // self-intersection of the section D on the base surface
  std::optional<Step1> step1;
  std::vector<InteriorStep> interior;
  std::vector<std::string> attachments;  // host label per leaf, in order

  bool operator==(const BlowupProgram&) const = default;
};

/// Number of chain blow-ups counted the way the construction numbers its
/// steps: step 1 plus the interior steps, 0 when there is no step 1.
int chain_blowups(const BlowupProgram& p);

/// Every blow-up event, leaves included.
int steps_taken(const BlowupProgram& p);

std::string print_program(const BlowupProgram& p);

// ---------------------------------------------------------------------------
// Boundary graphs
// ---------------------------------------------------------------------------

enum class Role { F0, D, E, G };

std::string_view role_name(Role r);

/// One irreducible boundary curve. The label is the stable identifier:
/// F0 and D for the base rulings, F1 for the untouched fiber, E1/E0 for the
/// step-1 pair, E2, E3, ... in creation order, G1, G2, ... for the leaves.
struct Component {
  std::string label;
  Role role = Role::E;
  int self_int = 0;
  int mult = 0;  // coefficient in the total transform of the fiber; 0 off it
  int eps = 0;   // coefficient in the canonical class (alpha on F0, -2 on D)

  bool operator==(const Component&) const = default;
};

/// Linear chain of components with optional (-1)-leaves attached to chain
/// members. Structural equality ignores the construction history.
struct BoundaryGraph {
  int base_n = 0;
  std::vector<Component> components;  // creation order
  std::vector<std::string> chain;     // left to right, starts F0, D
  std::vector<std::pair<std::string, std::string>> attachments;  // (host, leaf)
  std::optional<std::string> e1, e0;
  bool finalized = false;
  bool affine_plane_warning = false;
  std::optional<BlowupProgram> history;

  const Component& comp(std::string_view label) const;
  Component& comp(std::string_view label);
  const Component* find(std::string_view label) const;
  bool step1_done() const { return e1.has_value(); }

  bool adjacent(std::string_view a, std::string_view b) const;
  /// Pairing of the two curves; the diagonal gives the self-intersection.
  int intersection(std::string_view a, std::string_view b) const;
  /// Full symmetric matrix in component creation order.
  std::vector<std::vector<int>> intersection_matrix() const;

  /// Chain members right of D, left to right (includes the untouched fiber).
  std::vector<std::string> chain_e_components() const;
  std::vector<std::string> leaves_of(std::string_view host) const;
  std::string attachments_host(std::string_view leaf) const;
  int leaf_count() const { return static_cast<int>(attachments.size()); }

  bool operator==(const BoundaryGraph& o) const;
};

/// Base surface with horizontal section of self-intersection n >= 0 plus the
/// two rulings through the marked fiber.
BoundaryGraph init_hirzebruch(int n);

/// Same as init_hirzebruch but accepts any integer n; used by the rewriting
/// machinery, which can lower the base below zero.
BoundaryGraph base_graph(int n);

BoundaryGraph blow_up_step1(const BoundaryGraph& g, Step1 choice);
BoundaryGraph blow_up(const BoundaryGraph& g, const InteriorStep& step);
BoundaryGraph final_step(const BoundaryGraph& g,
                         const std::vector<std::string>& hosts);

/// Inverse of one blow-up: removes a (-1)-component, fixing up neighbors.
/// Contracting one member of the step-1 pair relabels the survivor back to the
/// untouched fiber F1 and refreshes every derived quantity from the new base.
BoundaryGraph contract(const BoundaryGraph& g, std::string_view label);

BoundaryGraph replay(const BlowupProgram& p);
/// Graph after the base, after each blow-up, and after the final step.
std::vector<BoundaryGraph> replay_stages(const BlowupProgram& p);

/// Rewrites the program until its graph has no superfluous (-1)-curve in the
/// chain: an exceptional chain component that was never blown up again and
/// carries no leaf gets its creating step deleted (later labels shift down);
/// if the superfluous curve is one of the step-1 pair, step 1 is removed, the
/// first interior step becomes the new step 1, and the base index moves to
/// the self-intersection the section actually has. Idempotent.
BlowupProgram normalize(const BlowupProgram& p);

struct ValidationReport {
  bool valid = false;                    // structural shape invariants
  std::vector<std::string> violations;   // human-readable, deterministic order
  std::vector<std::string> minus_one_chain;  // chain E-components at -1
  bool good_closure = false;             // minus_one_chain empty
};

ValidationReport validate(const BoundaryGraph& g);

/// Checks that the class of the original fiber survives: the multiplicity-
/// weighted sum F of the fiber components has F.F = 0, F.C = 0 for every
/// fiber component C, and F.D = 1.
struct FiberReport {
  bool pass = false;
  int fiber_self = 0;
  int fiber_dot_d = 0;
  std::vector<std::pair<std::string, int>> fiber_dot;  // per fiber component
};

FiberReport fiber_check(const BoundaryGraph& g);

}  // namespace zigzag
