#include "zigzag/boundary_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zigzag {

int chain_blowups(const BlowupProgram& p) {
  return p.step1 ? 1 + static_cast<int>(p.interior.size()) : 0;
}

int steps_taken(const BlowupProgram& p) {
  return (p.step1 ? 1 : 0) + static_cast<int>(p.interior.size()) +
         static_cast<int>(p.attachments.size());
}

std::string print_program(const BlowupProgram& p) {
  std::ostringstream os;
  os << "base hirzebruch " << p.base_n << "\n";
  if (p.step1) {
    os << "step1 " << (*p.step1 == Step1::OnD ? "on-d" : "free") << "\n";
  }
  for (const auto& step : p.interior) {
    if (const auto* b = std::get_if<BetweenStep>(&step)) {
      os << "blow between " << b->left << " " << b->right << "\n";
    } else {
      os << "blow free\n";
    }
  }
  if (!p.attachments.empty()) {
    os << "final {";
    for (std::size_t i = 0; i < p.attachments.size(); ++i) {
      os << (i == 0 ? " " : "; ") << "G on " << p.attachments[i];
    }
    os << " }\n";
  }
  return os.str();
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::F0:
      return "F0";
    case Role::D:
      return "D";
    case Role::E:
      return "E";
    case Role::G:
      return "G";
  }
  return "E";
}

// ---------------------------------------------------------------------------
// BoundaryGraph accessors
// ---------------------------------------------------------------------------

const Component* BoundaryGraph::find(std::string_view label) const {
  for (const auto& c : components) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

const Component& BoundaryGraph::comp(std::string_view label) const {
  if (const Component* c = find(label)) return *c;
  throw InvalidParameter("no component labeled " + std::string(label));
}

Component& BoundaryGraph::comp(std::string_view label) {
  for (auto& c : components) {
    if (c.label == label) return c;
  }
  throw InvalidParameter("no component labeled " + std::string(label));
}

bool BoundaryGraph::adjacent(std::string_view a, std::string_view b) const {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if ((chain[i] == a && chain[i + 1] == b) ||
        (chain[i] == b && chain[i + 1] == a)) {
      return true;
    }
  }
  for (const auto& [host, leaf] : attachments) {
    if ((host == a && leaf == b) || (host == b && leaf == a)) return true;
  }
  return false;
}

int BoundaryGraph::intersection(std::string_view a, std::string_view b) const {
  if (a == b) return comp(a).self_int;
  return adjacent(a, b) ? 1 : 0;
}

std::vector<std::vector<int>> BoundaryGraph::intersection_matrix() const {
  std::size_t n = components.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = intersection(components[i].label, components[j].label);
    }
  }
  return m;
}

std::vector<std::string> BoundaryGraph::chain_e_components() const {
  std::vector<std::string> out;
  for (const auto& label : chain) {
    Role r = comp(label).role;
    if (r != Role::F0 && r != Role::D) out.push_back(label);
  }
  return out;
}

std::vector<std::string> BoundaryGraph::leaves_of(std::string_view host) const {
  std::vector<std::string> out;
  for (const auto& [h, leaf] : attachments) {
    if (h == host) out.push_back(leaf);
  }
  return out;
}

bool BoundaryGraph::operator==(const BoundaryGraph& o) const {
  return base_n == o.base_n && components == o.components && chain == o.chain &&
         attachments == o.attachments && e1 == o.e1 && e0 == o.e0 &&
         finalized == o.finalized &&
         affine_plane_warning == o.affine_plane_warning;
}

// ---------------------------------------------------------------------------
// Construction operations
// ---------------------------------------------------------------------------

BoundaryGraph base_graph(int n) {
  BoundaryGraph g;
  g.base_n = n;
  g.components = {
      Component{"F0", Role::F0, 0, 0, n - 2},
      Component{"D", Role::D, n, 0, -2},
      Component{"F1", Role::E, 0, 1, 0},
  };
  g.chain = {"F0", "D", "F1"};
  g.history = BlowupProgram{n, std::nullopt, {}, {}};
  return g;
}

BoundaryGraph init_hirzebruch(int n) {
  if (n < 0) {
    throw InvalidParameter("base index must be >= 0, got " + std::to_string(n));
  }
  return base_graph(n);
}

namespace {

std::size_t chain_pos(const BoundaryGraph& g, std::string_view label) {
  for (std::size_t i = 0; i < g.chain.size(); ++i) {
    if (g.chain[i] == label) return i;
  }
  throw InvalidLocation("component " + std::string(label) + " is not on the chain");
}

std::string next_e_label(const BoundaryGraph& g) {
  int next = 2;
  for (const auto& c : g.components) {
    if (c.label.size() > 1 && c.label[0] == 'E') {
      int v = std::atoi(c.label.c_str() + 1);
      if (v >= next) next = v + 1;
    }
  }
  return "E" + std::to_string(next);
}

void refresh_warning(BoundaryGraph& g) {
  g.affine_plane_warning =
      g.finalized && !g.step1_done() && g.leaf_count() == 1;
}

}  // namespace

BoundaryGraph blow_up_step1(const BoundaryGraph& g, Step1 choice) {
  if (g.finalized) throw InvalidState("the final step has already been applied");
  if (g.step1_done()) throw InvalidState("step 1 has already been performed");
  if (g.chain.size() != 3 || !g.find("F1")) {
    throw InvalidState("step 1 needs the untouched base configuration");
  }
  BoundaryGraph out = g;
  if (choice == Step1::OnD) {
    // blow up the intersection point of the fiber with the section
    out.comp("D").self_int -= 1;
    Component& f1 = out.comp("F1");
    f1.label = "E0";
    f1.self_int -= 1;
    out.chain.back() = "E0";
    out.components.push_back(Component{"E1", Role::E, -1, 1, -1});
    out.chain.insert(out.chain.begin() + 2, "E1");
  } else {
    // blow up a free point of the fiber
    Component& f1 = out.comp("F1");
    f1.label = "E1";
    f1.self_int -= 1;
    f1.eps = -1;
    out.chain.back() = "E1";
    out.components.push_back(Component{"E0", Role::E, -1, 1, 0});
    out.chain.push_back("E0");
    out.comp("F0").eps += 1;
  }
  out.e1 = "E1";
  out.e0 = "E0";
  if (out.history) out.history->step1 = choice;
  return out;
}

BoundaryGraph blow_up(const BoundaryGraph& g, const InteriorStep& step) {
  if (g.finalized) throw InvalidState("the final step has already been applied");
  if (!g.step1_done()) {
    throw InvalidState("interior blow-ups need step 1 first");
  }
  BoundaryGraph out = g;
  std::string label = next_e_label(g);
  if (const auto* b = std::get_if<BetweenStep>(&step)) {
    const Component* left = g.find(b->left);
    const Component* right = g.find(b->right);
    if (!left || !right) {
      throw InvalidLocation("unknown component " +
                            std::string(!left ? b->left : b->right));
    }
    if (left->role == Role::G || right->role == Role::G) {
      throw InvalidLocation("leaves admit no further blow-ups");
    }
    std::size_t pa = chain_pos(g, b->left);
    std::size_t pb = chain_pos(g, b->right);
    if (pa > pb) std::swap(pa, pb);
    if (pb - pa != 1) {
      throw InvalidLocation("components " + b->left + " and " + b->right +
                            " do not meet");
    }
    if (left->role == Role::F0 || right->role == Role::F0) {
      throw InvalidLocation("blow-ups are only legal along the fiber chain");
    }
    const Component& cl = g.comp(g.chain[pa]);
    const Component& cr = g.comp(g.chain[pb]);
    int eps, mult;
    if (cl.role == Role::D || cr.role == Role::D) {
      const Component& e = cl.role == Role::D ? cr : cl;
      eps = e.eps - 1;
      mult = e.mult;
    } else {
      eps = cl.eps + cr.eps + 1;
      mult = cl.mult + cr.mult;
    }
    out.comp(g.chain[pa]).self_int -= 1;
    out.comp(g.chain[pb]).self_int -= 1;
    out.components.push_back(Component{label, Role::E, -1, mult, eps});
    out.chain.insert(out.chain.begin() + static_cast<long>(pb), label);
  } else {
    const Component& last = g.comp(g.chain.back());
    out.comp(last.label).self_int -= 1;
    out.components.push_back(
        Component{label, Role::E, -1, last.mult, last.eps + 1});
    out.chain.push_back(label);
  }
  if (out.history) out.history->interior.push_back(step);
  return out;
}

BoundaryGraph final_step(const BoundaryGraph& g,
                         const std::vector<std::string>& hosts) {
  if (g.finalized) throw InvalidState("the final step has already been applied");
  if (hosts.empty()) {
    throw InvalidParameter("the final step needs at least one attachment");
  }
  BoundaryGraph out = g;
  for (const auto& host : hosts) {
    const Component* h = out.find(host);
    if (!h) throw InvalidLocation("unknown component " + host);
    if (h->role != Role::E) {
      throw InvalidLocation("leaves attach to fiber chain components only");
    }
    chain_pos(out, host);
    std::string leaf = "G" + std::to_string(out.attachments.size() + 1);
    out.components.push_back(Component{leaf, Role::G, -1, h->mult, h->eps + 1});
    out.attachments.emplace_back(host, leaf);
    out.comp(host).self_int -= 1;
  }
  out.finalized = true;
  refresh_warning(out);
  if (out.history) out.history->attachments = hosts;
  return out;
}

BoundaryGraph contract(const BoundaryGraph& g, std::string_view label) {
  const Component* c = g.find(label);
  if (!c) throw InvalidParameter("no component labeled " + std::string(label));
  if (c->role == Role::F0 || c->role == Role::D) {
    throw InvalidLocation("the base sections never contract");
  }
  if (c->self_int != -1) {
    throw InvalidState("contraction needs self-intersection -1, " +
                       std::string(label) + " has " +
                       std::to_string(c->self_int));
  }
  BoundaryGraph out = g;
  out.history = std::nullopt;

  if (c->role == Role::G) {
    out.comp(out.attachments_host(label)).self_int += 1;
    std::erase_if(out.attachments,
                  [&](const auto& a) { return a.second == label; });
    std::erase_if(out.components,
                  [&](const Component& x) { return x.label == label; });
    out.finalized = !out.attachments.empty();
    refresh_warning(out);
    return out;
  }

  // chain component
  if (!g.leaves_of(label).empty()) {
    throw LinearityViolation("contracting " + std::string(label) +
                             " would push its leaves onto the chain");
  }
  std::size_t pos = chain_pos(g, label);
  if (pos > 0) out.comp(g.chain[pos - 1]).self_int += 1;
  if (pos + 1 < g.chain.size()) out.comp(g.chain[pos + 1]).self_int += 1;
  out.chain.erase(out.chain.begin() + static_cast<long>(pos));
  std::erase_if(out.components,
                [&](const Component& x) { return x.label == label; });

  bool was_pair = g.e1 == label || g.e0 == label;
  if (was_pair) {
    std::vector<std::string> rest = out.chain_e_components();
    if (rest.size() == 1) {
      // single survivor: this undoes step 1, so restore the base labeling and
      // recompute everything that depends on the base index
      Component& f = out.comp(rest.front());
      f.label = "F1";
      f.eps = 0;
      f.mult = 1;
      out.chain.back() = "F1";
      out.base_n = out.comp("D").self_int;
      out.comp("F0").eps = out.base_n - 2;
      for (auto& [host, leaf] : out.attachments) {
        if (host == rest.front()) host = "F1";
        Component& gc = out.comp(leaf);
        gc.eps = 1;
        gc.mult = 1;
      }
    }
    out.e1 = std::nullopt;
    out.e0 = std::nullopt;
  }
  refresh_warning(out);
  return out;
}

std::string BoundaryGraph::attachments_host(std::string_view leaf) const {
  for (const auto& [host, l] : attachments) {
    if (l == leaf) return host;
  }
  throw InvalidParameter("no leaf labeled " + std::string(leaf));
}

BoundaryGraph replay(const BlowupProgram& p) {
  BoundaryGraph g = base_graph(p.base_n);
  if (p.step1) g = blow_up_step1(g, *p.step1);
  for (const auto& step : p.interior) g = blow_up(g, step);
  // a program without attachments is an unfinished completion; leave it open
  if (p.attachments.empty()) return g;
  return final_step(g, p.attachments);
}

std::vector<BoundaryGraph> replay_stages(const BlowupProgram& p) {
  std::vector<BoundaryGraph> stages;
  stages.push_back(base_graph(p.base_n));
  if (p.step1) stages.push_back(blow_up_step1(stages.back(), *p.step1));
  for (const auto& step : p.interior) {
    stages.push_back(blow_up(stages.back(), step));
  }
  if (!p.attachments.empty()) {
    stages.push_back(final_step(stages.back(), p.attachments));
  }
  return stages;
}

// ---------------------------------------------------------------------------
// Program rewriting
// ---------------------------------------------------------------------------

namespace {

std::string remapped(const std::map<std::string, std::string>& remap,
                     const std::string& label) {
  auto it = remap.find(label);
  return it == remap.end() ? label : it->second;
}

void apply_remap(BlowupProgram& p,
                 const std::map<std::string, std::string>& remap) {
  for (auto& step : p.interior) {
    if (auto* b = std::get_if<BetweenStep>(&step)) {
      b->left = remapped(remap, b->left);
      b->right = remapped(remap, b->right);
    }
  }
  for (auto& host : p.attachments) host = remapped(remap, host);
}

bool mentions(const BlowupProgram& p, const std::string& label) {
  for (const auto& step : p.interior) {
    if (const auto* b = std::get_if<BetweenStep>(&step)) {
      if (b->left == label || b->right == label) return true;
    }
  }
  return std::find(p.attachments.begin(), p.attachments.end(), label) !=
         p.attachments.end();
}

}  // namespace

BlowupProgram normalize(const BlowupProgram& p0) {
  BlowupProgram p = p0;
  for (;;) {
    BoundaryGraph g = replay(p);
    std::string victim;
    for (const auto& label : g.chain_e_components()) {
      const Component& c = g.comp(label);
      if (c.self_int != -1 || !g.leaves_of(label).empty()) continue;
      if (!p.step1 && label == "F1") continue;  // nothing left to peel off
      victim = label;
      break;
    }
    if (victim.empty()) return p;

    if (victim != "E1" && victim != "E0") {
      // created by an interior step; delete it and shift later labels down
      int m = std::atoi(victim.c_str() + 1);
      std::size_t j = static_cast<std::size_t>(m - 2);
      BlowupProgram q = p;
      q.interior.erase(q.interior.begin() + static_cast<long>(j));
      if (mentions(q, victim)) {
        throw InternalCheckFailure("superfluous component " + victim +
                                   " is still referenced");
      }
      std::map<std::string, std::string> remap;
      int top = 1 + static_cast<int>(p.interior.size());
      for (int t = m + 1; t <= top; ++t) {
        remap["E" + std::to_string(t)] = "E" + std::to_string(t - 1);
      }
      apply_remap(q, remap);
      p = std::move(q);
      continue;
    }

    // one of the step-1 pair: drop step 1 and promote the first interior step
    bool on_d = *p.step1 == Step1::OnD;
    bool victim_is_fiber = (on_d && victim == "E0") || (!on_d && victim == "E1");
    std::string survivor = victim == "E0" ? "E1" : "E0";
    BlowupProgram q;
    q.base_n = p.base_n + (victim_is_fiber ? (on_d ? -1 : 1) : 0);
    q.attachments = p.attachments;
    std::map<std::string, std::string> remap;
    if (p.interior.empty()) {
      remap[survivor] = "F1";
    } else {
      const InteriorStep& first = p.interior.front();
      if (const auto* b = std::get_if<BetweenStep>(&first)) {
        bool d_e1 = (b->left == "D" && b->right == "E1") ||
                    (b->left == "E1" && b->right == "D");
        if (!d_e1 || victim != "E0") {
          throw InternalCheckFailure(
              "untouched step-1 component with an incompatible first step");
        }
        q.step1 = Step1::OnD;
        remap[survivor] = "E0";
        remap["E2"] = "E1";
      } else {
        if (victim != "E1") {
          throw InternalCheckFailure(
              "untouched step-1 component with an incompatible first step");
        }
        q.step1 = Step1::Free;
        remap[survivor] = "E1";
        remap["E2"] = "E0";
      }
      int top = 1 + static_cast<int>(p.interior.size());
      for (int t = 3; t <= top; ++t) {
        remap["E" + std::to_string(t)] = "E" + std::to_string(t - 1);
      }
      q.interior.assign(p.interior.begin() + 1, p.interior.end());
    }
    apply_remap(q, remap);
    p = std::move(q);
  }
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

ValidationReport validate(const BoundaryGraph& g) {
  ValidationReport rep;
  auto flag = [&](const std::string& v) { rep.violations.push_back(v); };

  std::map<std::string, int> label_count;
  for (const auto& c : g.components) label_count[c.label] += 1;
  for (const auto& [label, count] : label_count) {
    if (count > 1) flag("duplicate label " + label);
  }

  bool chain_ok = g.chain.size() >= 3;
  if (!chain_ok) flag("chain has fewer than three components");
  for (const auto& label : g.chain) {
    if (!g.find(label)) {
      flag("chain references unknown component " + label);
      chain_ok = false;
    }
  }
  if (chain_ok) {
    if (g.comp(g.chain[0]).role != Role::F0) flag("chain does not start with F0");
    if (g.comp(g.chain[1]).role != Role::D) {
      flag("second chain component is not the section D");
    }
    for (std::size_t i = 2; i < g.chain.size(); ++i) {
      if (g.comp(g.chain[i]).role != Role::E) {
        flag("chain component " + g.chain[i] + " past D is not a fiber component");
      }
    }
  }

  int f0s = 0, ds = 0;
  for (const auto& c : g.components) {
    if (c.role == Role::F0) ++f0s;
    if (c.role == Role::D) ++ds;
  }
  if (f0s != 1) flag("expected exactly one F0 component");
  if (ds != 1) flag("expected exactly one section D");

  std::map<std::string, int> leaf_uses;
  for (const auto& [host, leaf] : g.attachments) {
    leaf_uses[leaf] += 1;
    const Component* h = g.find(host);
    const Component* l = g.find(leaf);
    if (!h || !l) {
      flag("attachment references unknown component");
      continue;
    }
    if (h->role != Role::E) flag("leaf " + leaf + " hosted off the fiber chain");
    if (l->role != Role::G) flag("attachment leaf " + leaf + " is not a leaf");
    if (l->self_int != -1) flag("leaf " + leaf + " is not a (-1)-curve");
    if (l->mult != h->mult) flag("leaf " + leaf + " multiplicity mismatch");
    if (l->eps != h->eps + 1) flag("leaf " + leaf + " canonical coefficient mismatch");
  }
  for (const auto& [leaf, uses] : leaf_uses) {
    if (uses > 1) flag("leaf " + leaf + " attached more than once");
  }
  for (const auto& c : g.components) {
    if (c.role == Role::G && leaf_uses.find(c.label) == leaf_uses.end()) {
      flag("leaf " + c.label + " is attached to nothing");
    }
    if (c.role == Role::G &&
        std::find(g.chain.begin(), g.chain.end(), c.label) != g.chain.end()) {
      flag("leaf " + c.label + " sits on the chain");
    }
  }

  if (const Component* d = g.find("D"); d && d->eps != -2) {
    flag("section D must carry canonical coefficient -2");
  }
  if (const Component* f0 = g.find("F0")) {
    if (f0->self_int != 0) flag("F0 must have self-intersection 0");
    if (f0->mult != 0) flag("F0 is not a fiber component");
  }
  if (chain_ok) {
    for (const auto& label : g.chain_e_components()) {
      if (g.comp(label).mult < 1) {
        flag("fiber component " + label + " has multiplicity below 1");
      }
    }
  }

  if (g.e1.has_value() != g.e0.has_value()) {
    flag("the step-1 pair must be tracked together");
  } else if (g.e1) {
    const Component* a = g.find(*g.e1);
    const Component* b = g.find(*g.e0);
    if (!a || !b || a->role != Role::E || b->role != Role::E) {
      flag("step-1 markers do not point at fiber components");
    } else {
      auto ia = std::find(g.chain.begin(), g.chain.end(), *g.e1);
      auto ib = std::find(g.chain.begin(), g.chain.end(), *g.e0);
      if (ia == g.chain.end() || ib == g.chain.end() || ia >= ib) {
        flag("step-1 markers out of order on the chain");
      }
    }
  }

  if (g.finalized != !g.attachments.empty()) {
    flag("finalized flag disagrees with the attachment list");
  }

  if (chain_ok) {
    for (const auto& label : g.chain_e_components()) {
      const Component& c = g.comp(label);
      if (c.self_int == -1 && g.leaves_of(label).empty()) {
        rep.minus_one_chain.push_back(label);
      }
    }
  }
  rep.good_closure = rep.minus_one_chain.empty();
  rep.valid = rep.violations.empty();
  return rep;
}

FiberReport fiber_check(const BoundaryGraph& g) {
  FiberReport rep;
  std::vector<std::string> fiber;
  for (const auto& c : g.components) {
    if (c.role == Role::E || c.role == Role::G) fiber.push_back(c.label);
  }
  auto pairing = [&](std::string_view other) {
    int total = 0;
    for (const auto& f : fiber) {
      total += g.comp(f).mult * g.intersection(f, other);
    }
    return total;
  };
  for (const auto& f : fiber) {
    rep.fiber_self += g.comp(f).mult * pairing(f);
    rep.fiber_dot.emplace_back(f, pairing(f));
  }
  rep.fiber_dot_d = pairing("D");
  rep.pass = rep.fiber_self == 0 && rep.fiber_dot_d == 1;
  for (const auto& [label, v] : rep.fiber_dot) {
    if (v != 0) rep.pass = false;
  }
  return rep;
}

}  // namespace zigzag
