#include "zigzag/report.hpp"

#include <sstream>

namespace zigzag {

namespace {

Json rational_json(const Rational& r) { return r.get_str(); }

Json optional_int(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json graph_json(const BoundaryGraph& g) {
  Json j;
  j["base_n"] = g.base_n;
  j["finalized"] = g.finalized;
  j["affine_plane_warning"] = g.affine_plane_warning;
  j["e1"] = g.e1 ? Json(*g.e1) : Json(nullptr);
  j["e0"] = g.e0 ? Json(*g.e0) : Json(nullptr);
  j["chain"] = g.chain;
  Json comps = Json::array();
  for (const auto& c : g.components) {
    Json jc;
    jc["label"] = c.label;
    jc["role"] = std::string(role_name(c.role));
    jc["self_int"] = c.self_int;
    jc["mult"] = c.mult;
    jc["eps"] = c.eps;
    comps.push_back(jc);
  }
  j["components"] = comps;
  Json att = Json::array();
  for (const auto& [host, leaf] : g.attachments) {
    att.push_back(Json{{"host", host}, {"leaf", leaf}});
  }
  j["attachments"] = att;
  return j;
}

std::string zigzag_text(const BoundaryGraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.chain.size(); ++i) {
    if (i) os << " -- ";
    const Component& c = g.comp(g.chain[i]);
    os << c.label << "(" << c.self_int << ")";
    auto leaves = g.leaves_of(c.label);
    if (!leaves.empty()) {
      os << "[";
      for (std::size_t k = 0; k < leaves.size(); ++k) {
        os << (k ? " " : "") << leaves[k];
      }
      os << "]";
    }
  }
  return os.str();
}

std::string graph_dot(const BoundaryGraph& g) {
  std::ostringstream os;
  os << "graph zigzag {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& c : g.components) {
    os << "  \"" << c.label << "\" [label=\"" << c.label << " / " << c.self_int
       << " / " << c.mult << " / " << c.eps << "\"];\n";
  }
  for (std::size_t i = 0; i + 1 < g.chain.size(); ++i) {
    os << "  \"" << g.chain[i] << "\" -- \"" << g.chain[i + 1] << "\";\n";
  }
  for (const auto& [host, leaf] : g.attachments) {
    os << "  \"" << host << "\" -- \"" << leaf << "\";\n";
  }
  os << "}\n";
  return os.str();
}

CheckBundle run_checks(const BoundaryGraph& g) {
  CheckBundle b{validate(g), adjunction_check(g), fiber_check(g),
                check_chain_bounds(g), std::nullopt, std::nullopt, false};
  try {
    b.canonical = canonical_record(g);
  } catch (const Error& e) {
    b.canonical_error = e.what();
  }
  b.pass = b.validation.valid && b.adjunction.pass && b.fiber.pass &&
           b.bounds.pass && !b.canonical_error;
  return b;
}

Json check_json(const BoundaryGraph& g, const CheckBundle& b) {
  Json j;
  j["pass"] = b.pass;
  j["graph"] = graph_json(g);
  j["structure"] = Json{{"valid", b.validation.valid},
                        {"violations", b.validation.violations},
                        {"minus_one_chain", b.validation.minus_one_chain},
                        {"good_closure", b.validation.good_closure}};
  Json residuals = Json::object();
  for (const auto& [label, r] : b.adjunction.residuals) residuals[label] = r;
  j["adjunction"] = Json{{"pass", b.adjunction.pass}, {"residuals", residuals}};
  Json fiber_dot = Json::object();
  for (const auto& [label, v] : b.fiber.fiber_dot) fiber_dot[label] = v;
  j["fiber"] = Json{{"pass", b.fiber.pass},
                    {"self", b.fiber.fiber_self},
                    {"dot_d", b.fiber.fiber_dot_d},
                    {"dot", fiber_dot}};
  Json entries = Json::array();
  for (const auto& e : b.bounds.entries) {
    entries.push_back(Json{{"label", e.label},
                           {"mult", e.mult},
                           {"eps", e.eps},
                           {"side_e1", e.left_of_e1 ? "left" : "right"},
                           {"side_e0", e.left_of_e0 ? "left" : "right"},
                           {"e1_bound", e.e1_bound_holds},
                           {"e0_bound", e.e0_bound_holds},
                           {"e1_tight", e.e1_bound_tight},
                           {"e0_tight", e.e0_bound_tight}});
  }
  j["chain_bounds"] = Json{{"pass", b.bounds.pass}, {"entries", entries}};
  if (b.canonical) {
    Json eps = Json::object(), delta = Json::object(), mult = Json::object();
    for (const auto& [label, v] : b.canonical->eps) eps[label] = v;
    for (const auto& [label, v] : b.canonical->delta) delta[label] = v;
    for (const auto& [label, v] : b.canonical->mult) mult[label] = v;
    j["canonical"] = Json{{"alpha", b.canonical->alpha},
                          {"d", b.canonical->d_coefficient},
                          {"eps", eps},
                          {"delta", delta},
                          {"mult", mult}};
  } else {
    j["canonical"] = Json{{"error", *b.canonical_error}};
  }
  return j;
}

std::string check_text(const BoundaryGraph& g, const CheckBundle& b) {
  std::ostringstream os;
  os << "zigzag: " << zigzag_text(g) << "\n";
  os << "structure: " << (b.validation.valid ? "ok" : "BROKEN");
  for (const auto& v : b.validation.violations) os << "\n  " << v;
  os << "\n";
  os << "good closure: " << (b.validation.good_closure ? "yes" : "no");
  if (!b.validation.minus_one_chain.empty()) {
    os << " (superfluous:";
    for (const auto& l : b.validation.minus_one_chain) os << " " << l;
    os << ")";
  }
  os << "\n";
  os << "adjunction K.C + C.C = -2: " << (b.adjunction.pass ? "ok" : "FAIL")
     << "\n";
  os << "fiber class: " << (b.fiber.pass ? "ok" : "FAIL") << " (self "
     << b.fiber.fiber_self << ", meets D " << b.fiber.fiber_dot_d << ")\n";
  os << "coefficient bounds: " << (b.bounds.pass ? "ok" : "FAIL") << "\n";
  if (b.canonical) {
    os << "canonical class: alpha " << b.canonical->alpha << ", cross-checked\n";
  } else {
    os << "canonical class: " << *b.canonical_error << "\n";
  }
  os << (b.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json classification_json(const Classification& c) {
  Json j;
  j["class"] = surface_class_name(c.surface_class);
  j["q"] = c.q;
  j["k"] = c.k;
  j["steps"] = c.steps;
  j["k_trivial"] = c.k_trivial;
  j["m"] = optional_int(c.m);
  j["fixed_point_free_action"] = c.fixed_point_free_action;
  j["hypersurface_degree"] = optional_int(c.hypersurface_degree);
  j["affine_plane_warning"] = c.affine_plane_warning;
  j["normalized_program"] = print_program(c.normalized);
  j["zigzag"] = zigzag_text(replay(c.normalized));
  return j;
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  os << "zigzag: " << zigzag_text(replay(c.normalized)) << "\n";
  os << "class: " << surface_class_name(c.surface_class);
  if (c.hypersurface_degree) {
    os << "  (hypersurface x*y = p(z), deg p = " << *c.hypersurface_degree
       << ")";
  }
  os << "\n";
  os << "k: " << c.k << "  steps: " << c.steps << "  q: " << c.q << "\n";
  os << "K-trivial: " << (c.k_trivial ? "yes" : "no");
  if (c.m) os << " (m = " << *c.m << ")";
  os << "\n";
  os << "fixed-point-free additive action: "
     << (c.fixed_point_free_action ? "yes" : "no") << "\n";
  if (c.affine_plane_warning) {
    os << "warning: single leaf without step 1, the surface is the plane\n";
  }
  os << "normalized program:\n" << print_program(c.normalized);
  return os.str();
}

Json verify_json(const VerifySettings& s, const VerifyReport& r) {
  Json j;
  j["limits"] = Json{{"max_k", s.limits.max_k},
                     {"max_q", s.limits.max_q},
                     {"base_n_min", s.limits.base_n_min},
                     {"base_n_max", s.limits.base_n_max}};
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(check_name(c));
  j["checks"] = checks;
  j["k_convention"] =
      "k counts step 1 plus the interior blow-ups; the closing leaf "
      "attachments are counted separately in steps";
  j["programs"] = r.programs;
  j["stages"] = r.stages;
  j["failure_count"] = r.failure_count;
  Json classes = Json::object();
  for (const auto& [name, count] : r.class_counts) classes[name] = count;
  j["class_counts"] = classes;
  Json ks = Json::object();
  for (const auto& [k, count] : r.k_counts) ks[std::to_string(k)] = count;
  j["k_counts"] = ks;
  Json counters = Json::object();
  for (const auto& [name, count] : r.counters) counters[name] = count;
  j["counters"] = counters;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{
        {"program", f.program}, {"check", f.check}, {"detail", f.detail}});
  }
  j["failures"] = failures;
  return j;
}

std::string verify_text(const VerifySettings& s, const VerifyReport& r) {
  std::ostringstream os;
  os << "programs: " << r.programs << "  stages: " << r.stages << "\n";
  os << "limits: k <= " << s.limits.max_k << ", q <= " << s.limits.max_q
     << ", base " << s.limits.base_n_min << ".." << s.limits.base_n_max << "\n";
  os << "k convention: step 1 plus interior blow-ups; leaves counted in steps "
        "only\n";
  os << "classes:";
  for (const auto& [name, count] : r.class_counts) {
    os << " " << name << "=" << count;
  }
  os << "\n";
  os << "normalized k:";
  for (const auto& [k, count] : r.k_counts) os << " " << k << ":" << count;
  os << "\n";
  if (!r.counters.empty()) {
    os << "bound tightness:";
    for (const auto& [name, count] : r.counters) {
      os << " " << name << "=" << count;
    }
    os << "\n";
  }
  os << "failures: " << r.failure_count << "\n";
  for (const auto& f : r.failures) {
    os << "  [" << f.check << "] " << f.detail << "\n";
    std::istringstream is(f.program);
    std::string line;
    while (std::getline(is, line)) os << "    " << line << "\n";
  }
  os << (r.failure_count == 0 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

DerivationReport analyze_derivation(const Derivation& d, int cap) {
  DerivationReport rep{d.name, is_lnd(d, cap), false, false};
  rep.preserves = rep.certificate.verdict != LndVerdict::No;
  rep.fixed_point_free = is_fixed_point_free(d);
  return rep;
}

Json lnd_json(const std::vector<DerivationReport>& entries) {
  Json list = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["name"] = e.name;
    j["verdict"] = verdict_name(e.certificate.verdict);
    j["cap"] = e.certificate.cap;
    j["preserves_relations"] = e.preserves;
    if (e.certificate.witness) {
      const auto& w = *e.certificate.witness;
      j["witness"] = Json{{"relation_index", w.relation_index},
                          {"relation", w.relation.str()},
                          {"residue", w.image_normal_form.str()}};
    } else {
      j["witness"] = nullptr;
    }
    Json nil = Json::array();
    for (const auto& gi : e.certificate.generator_indices) {
      nil.push_back(Json{{"variable", gi.variable},
                         {"index", optional_int(gi.index)}});
    }
    j["nilpotency"] = nil;
    j["fixed_point_free"] = e.fixed_point_free;
    list.push_back(j);
  }
  return Json{{"derivations", list}};
}

std::string lnd_text(const std::vector<DerivationReport>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "derivation " << e.name << ": " << verdict_name(e.certificate.verdict)
       << " (cap " << e.certificate.cap << ")\n";
    os << "  preserves relations: " << (e.preserves ? "yes" : "no") << "\n";
    if (e.certificate.witness) {
      os << "  witness: relation " << e.certificate.witness->relation.str()
         << " maps to residue " << e.certificate.witness->image_normal_form.str()
         << "\n";
    }
    if (!e.certificate.generator_indices.empty()) {
      os << "  nilpotency:";
      for (const auto& gi : e.certificate.generator_indices) {
        os << " " << gi.variable << ":";
        if (gi.index) {
          os << *gi.index;
        } else {
          os << ">" << e.certificate.cap;
        }
      }
      os << "\n";
    }
    os << "  fixed-point-free: " << (e.fixed_point_free ? "yes" : "no") << "\n";
  }
  return os.str();
}

Json danielewski_json(const DanielewskiSurface& s, int cap) {
  Json j;
  j["p"] = s.p.str();
  j["q"] = s.q;
  if (s.roots) {
    Json roots = Json::array();
    for (const auto& r : *s.roots) roots.push_back(rational_json(r));
    j["roots"] = roots;
  } else {
    j["roots"] = nullptr;
  }
  bool smooth = is_smooth(s);
  j["smooth"] = smooth;
  j["smooth_groebner"] = is_smooth_groebner(s);
  std::vector<DerivationReport> entries{analyze_derivation(s.d_x, cap),
                                        analyze_derivation(s.d_y, cap)};
  j["derivations"] = lnd_json(entries)["derivations"];
  if (smooth) {
    BlowupProgram prog = zigzag_of(s);
    j["zigzag_program"] = print_program(prog);
    j["classification"] = classification_json(classify(prog));
    EmbeddingWitness w = embedding_witness(s);
    j["embedding"] = Json{{"rho", w.rho.str()},
                          {"v", w.v.str()},
                          {"u", w.u.str()},
                          {"relation_holds", w.relation_holds},
                          {"roots_known", w.roots.has_value()},
                          {"roots_distinct", w.roots_distinct}};
  } else {
    j["zigzag_program"] = nullptr;
    j["classification"] = nullptr;
    j["embedding"] = nullptr;
  }
  return j;
}

std::string danielewski_text(const DanielewskiSurface& s, int cap) {
  std::ostringstream os;
  os << "surface x*y = " << s.p.str() << "  (q = " << s.q << ")\n";
  bool smooth = is_smooth(s);
  os << "smooth: " << (smooth ? "yes" : "no")
     << (is_smooth_groebner(s) == smooth ? "" : "  [routes disagree!]") << "\n";
  std::vector<DerivationReport> entries{analyze_derivation(s.d_x, cap),
                                        analyze_derivation(s.d_y, cap)};
  os << lnd_text(entries);
  if (smooth) {
    BlowupProgram prog = zigzag_of(s);
    os << "zigzag program:\n" << print_program(prog);
    os << classification_text(classify(prog));
  } else {
    os << "no zigzag: the construction needs a smooth surface\n";
  }
  return os.str();
}

}  // namespace zigzag
