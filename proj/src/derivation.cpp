#include "zigzag/derivation.hpp"

namespace zigzag {

Derivation make_derivation(std::string name, PresentedRing ring,
                           std::vector<Polynomial> images) {
  if (images.size() != ring.vars->size()) {
    throw InvalidParameter("derivation " + name + " must map every variable");
  }
  for (const auto& img : images) {
    if (!(img.vars() == ring.vars || *img.vars() == *ring.vars)) {
      throw VariableMismatch("derivation image over a different variable set");
    }
  }
  return Derivation{std::move(name), std::move(ring), std::move(images)};
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
  Polynomial total = Polynomial::zero(d.ring.vars);
  for (std::size_t i = 0; i < d.images.size(); ++i) {
    if (d.images[i].is_zero()) continue;
    total += f.derivative(i) * d.images[i];
  }
  return reduce(total, d.ring.relations.groebner_basis(), d.ring.relations.order());
}

std::optional<PreservationWitness> preservation_witness(const Derivation& d) {
  const auto& gens = d.ring.relations.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial residue = apply(d, gens[i]);
    if (!residue.is_zero()) {
      return PreservationWitness{i, gens[i], std::move(residue)};
    }
  }
  return std::nullopt;
}

bool preserves_ideal(const Derivation& d) {
  return !preservation_witness(d).has_value();
}

std::optional<int> nilpotency_index(const Derivation& d, const Polynomial& f,
                                    int cap) {
  if (cap < 0) throw InvalidParameter("negative iteration cap");
  Polynomial cur =
      reduce(f, d.ring.relations.groebner_basis(), d.ring.relations.order());
  if (cur.is_zero()) return 0;
  for (int n = 1; n <= cap; ++n) {
    cur = apply(d, cur);
    if (cur.is_zero()) return n;
  }
  return std::nullopt;
}

LndCertificate is_lnd(const Derivation& d, int cap) {
  if (auto w = preservation_witness(d)) {
    return LndCertificate{LndVerdict::No, std::move(w), {}, cap};
  }
  LndCertificate cert{LndVerdict::CertifiedYes, std::nullopt, {}, cap};
  for (std::size_t i = 0; i < d.ring.vars->size(); ++i) {
    auto idx = nilpotency_index(d, Polynomial::variable(d.ring.vars, i), cap);
    if (!idx) cert.verdict = LndVerdict::Inconclusive;
    cert.generator_indices.push_back(GeneratorIndex{d.ring.vars->name(i), idx});
  }
  return cert;
}

bool is_fixed_point_free(const Derivation& d) {
  std::vector<Polynomial> gens = d.ring.relations.generators();
  for (const auto& img : d.images) {
    Polynomial r =
        reduce(img, d.ring.relations.groebner_basis(), d.ring.relations.order());
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  Ideal vanishing(d.ring.vars, std::move(gens), d.ring.relations.order());
  return contains_one(vanishing);
}

std::string verdict_name(LndVerdict v) {
  switch (v) {
    case LndVerdict::CertifiedYes:
      return "certified-yes";
    case LndVerdict::Inconclusive:
      return "inconclusive";
    case LndVerdict::No:
      return "no";
  }
  return "no";
}

}  // namespace zigzag
