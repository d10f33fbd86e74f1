#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zigzag/groebner.hpp"

namespace zigzag {

/// Finitely presented commutative ring: polynomial variables modulo relations.
struct PresentedRing {
  VarSetPtr vars;
  Ideal relations;
};

/// A derivation given by its values on the ring generators.
struct Derivation {
  std::string name;
  PresentedRing ring;
  std::vector<Polynomial> images;  // one per variable, same order
};

Derivation make_derivation(std::string name, PresentedRing ring,
                           std::vector<Polynomial> images);

/// d(f) = sum_i df/dx_i * d(x_i), reduced modulo the relations.
Polynomial apply(const Derivation& d, const Polynomial& f);

/// Produced when d does not map the relation ideal into itself.
struct PreservationWitness {
  std::size_t relation_index;
  Polynomial relation;
  Polynomial image_normal_form;  // nonzero residue of d(relation) mod the ideal
};

/// First relation whose image leaves the ideal, or nullopt when d descends
/// to the quotient ring.
std::optional<PreservationWitness> preservation_witness(const Derivation& d);
bool preserves_ideal(const Derivation& d);

/// Least n >= 0 with d^n(f) = 0 in the quotient, or nullopt if none up to cap.
std::optional<int> nilpotency_index(const Derivation& d, const Polynomial& f,
                                    int cap = 64);

enum class LndVerdict { CertifiedYes, Inconclusive, No };

struct GeneratorIndex {
  std::string variable;
  std::optional<int> index;  // nullopt: not nilpotent within cap
};

struct LndCertificate {
  LndVerdict verdict;
  std::optional<PreservationWitness> witness;  // set when verdict == No
  std::vector<GeneratorIndex> generator_indices;
  int cap;
};

/// Certify local nilpotency. A derivation that is nilpotent on every generator
/// of a finitely generated algebra is nilpotent on each element (Leibniz plus
/// induction on products and sums), so checking generators suffices. Exceeding
/// the iteration cap is Inconclusive, which is distinct from a refutation.
LndCertificate is_lnd(const Derivation& d, int cap = 64);

/// True when the relations together with the nonzero generator images generate
/// the unit ideal, i.e. the images never vanish simultaneously on the variety.
bool is_fixed_point_free(const Derivation& d);

std::string verdict_name(LndVerdict v);

}  // namespace zigzag
