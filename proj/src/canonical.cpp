#include "zigzag/canonical.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace zigzag {

namespace {

// dense divisor class in the basis (fiber, section, e_1, ..., e_events)
using Cls = std::vector<long long>;

struct ClassState {
  int dim = 0;
  std::vector<std::pair<std::string, Cls>> comps;  // creation order
  std::vector<std::string> chain;
  std::vector<std::string> leaf_hosts;  // host per leaf, in order
  Cls canonical;

  Cls& cls(const std::string& label) {
    for (auto& [l, c] : comps) {
      if (l == label) return c;
    }
    throw InvalidLocation("unknown component " + label);
  }
};

ClassState replay_classes(const BlowupProgram& p) {
  int events = (p.step1 ? 1 : 0) + static_cast<int>(p.interior.size()) +
               static_cast<int>(p.attachments.size());
  ClassState st;
  st.dim = 2 + events;
  auto unit = [&](int slot) {
    Cls c(st.dim, 0);
    c[slot] = 1;
    return c;
  };
  Cls f = unit(0);
  st.comps.emplace_back("F0", f);
  st.comps.emplace_back("D", unit(1));
  st.comps.emplace_back("F1", f);
  st.chain = {"F0", "D", "F1"};
  st.canonical = Cls(st.dim, 0);
  st.canonical[0] = p.base_n - 2;
  st.canonical[1] = -2;

  int slot = 2;
  auto blow = [&](std::vector<std::string> through, const std::string& label,
                  std::size_t chain_at) {
    for (const auto& t : through) st.cls(t)[slot] -= 1;
    st.canonical[slot] += 1;
    st.comps.emplace_back(label, unit(slot));
    st.chain.insert(st.chain.begin() + static_cast<long>(chain_at), label);
    ++slot;
  };

  if (p.step1) {
    if (*p.step1 == Step1::OnD) {
      // the blown point lies on both the section and the fiber
      for (auto& [l, c] : st.comps) {
        if (l == "F1") l = "E0";
      }
      st.chain.back() = "E0";
      st.cls("D")[slot] -= 1;
      st.cls("E0")[slot] -= 1;
      st.canonical[slot] += 1;
      st.comps.emplace_back("E1", unit(slot));
      st.chain.insert(st.chain.begin() + 2, "E1");
      ++slot;
    } else {
      for (auto& [l, c] : st.comps) {
        if (l == "F1") l = "E1";
      }
      st.chain.back() = "E1";
      blow({"E1"}, "E0", st.chain.size());
    }
  }

  int next_e = 2;
  for (const auto& step : p.interior) {
    std::string label = "E" + std::to_string(next_e++);
    if (const auto* b = std::get_if<BetweenStep>(&step)) {
      auto ia = std::find(st.chain.begin(), st.chain.end(), b->left);
      auto ib = std::find(st.chain.begin(), st.chain.end(), b->right);
      if (ia == st.chain.end() || ib == st.chain.end()) {
        throw InvalidLocation("unknown component in blow-up location");
      }
      std::size_t pa = static_cast<std::size_t>(ia - st.chain.begin());
      std::size_t pb = static_cast<std::size_t>(ib - st.chain.begin());
      if (pa > pb) std::swap(pa, pb);
      blow({st.chain[pa], st.chain[pb]}, label, pb);
    } else {
      blow({st.chain.back()}, label, st.chain.size());
    }
  }

  int next_g = 1;
  for (const auto& host : p.attachments) {
    std::string label = "G" + std::to_string(next_g++);
    st.cls(host)[slot] -= 1;
    st.canonical[slot] += 1;
    st.comps.emplace_back(label, unit(slot));
    st.leaf_hosts.push_back(host);
    ++slot;
  }
  return st;
}

}  // namespace

PullbackLedger pullback_ledger(const BlowupProgram& p) {
  ClassState st = replay_classes(p);

  // unknowns: one coefficient per component except the section (fixed at -2)
  std::vector<std::string> unknowns;
  for (const auto& [label, c] : st.comps) {
    if (label != "D") unknowns.push_back(label);
  }
  std::size_t cols = unknowns.size();

  // rows: one per basis direction, plus the normalization that pins the
  // representative (the step-1 exceptional at -1, or the untouched fiber at 0)
  std::size_t rows = static_cast<std::size_t>(st.dim) + 1;
  std::vector<std::vector<mpq_class>> m(rows,
                                        std::vector<mpq_class>(cols + 1, 0));
  const Cls d_cls = st.cls("D");
  for (int r = 0; r < st.dim; ++r) {
    for (std::size_t u = 0; u < cols; ++u) {
      m[static_cast<std::size_t>(r)][u] =
          mpq_class(static_cast<long>(st.cls(unknowns[u])[r]));
    }
    m[static_cast<std::size_t>(r)][cols] = mpq_class(static_cast<long>(
        st.canonical[static_cast<std::size_t>(r)] +
        2 * d_cls[static_cast<std::size_t>(r)]));
  }
  std::string pinned = p.step1 ? "E1" : "F1";
  int pinned_value = p.step1 ? -1 : 0;
  for (std::size_t u = 0; u < cols; ++u) {
    if (unknowns[u] == pinned) m[rows - 1][u] = 1;
  }
  m[rows - 1][cols] = pinned_value;

  // exact Gauss-Jordan elimination
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_of_col(cols, rows);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    mpq_class inv = 1 / m[rank][col];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      mpq_class factor = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) {
      throw InternalCheckFailure(
          "divisor-class system for the canonical representative is "
          "inconsistent");
    }
  }
  if (rank != cols) {
    throw InternalCheckFailure(
        "divisor-class system does not pin the canonical representative");
  }

  PullbackLedger ledger;
  for (std::size_t u = 0; u < cols; ++u) {
    mpq_class v = m[pivot_of_col[u]][cols];
    if (v.get_den() != 1) {
      throw InternalCheckFailure("non-integral canonical coefficient for " +
                                 unknowns[u]);
    }
    long value = v.get_num().get_si();
    if (unknowns[u] == "F0") {
      ledger.alpha = static_cast<int>(value);
    } else {
      ledger.coefficient[unknowns[u]] = static_cast<int>(value);
    }
  }
  return ledger;
}

CanonicalRecord canonical_record(const BoundaryGraph& g) {
  if (!g.history) {
    throw UnsupportedInput(
        "canonical record needs a graph built by the construction operations");
  }
  CanonicalRecord rec;
  rec.alpha = g.comp("F0").eps;
  rec.d_coefficient = g.comp("D").eps;
  for (const auto& label : g.chain_e_components()) {
    const Component& c = g.comp(label);
    rec.eps.emplace_back(label, c.eps);
    rec.mult.emplace_back(label, c.mult);
  }
  for (const auto& [host, leaf] : g.attachments) {
    const Component& c = g.comp(leaf);
    rec.delta.emplace_back(leaf, c.eps);
  }
  for (const auto& [host, leaf] : g.attachments) {
    rec.mult.emplace_back(leaf, g.comp(leaf).mult);
  }

  PullbackLedger pb = pullback_ledger(*g.history);
  auto mismatch = [&](const std::string& label, int stored, int derived) {
    throw InternalCheckFailure(
        "canonical bookkeeping for " + label + " (" + std::to_string(stored) +
        ") disagrees with the divisor-class computation (" +
        std::to_string(derived) + ")");
  };
  if (pb.alpha != rec.alpha) mismatch("F0", rec.alpha, pb.alpha);
  if (rec.d_coefficient != -2) mismatch("D", rec.d_coefficient, -2);
  for (const auto& [label, eps] : rec.eps) {
    auto it = pb.coefficient.find(label);
    if (it == pb.coefficient.end() || it->second != eps) {
      mismatch(label, eps, it == pb.coefficient.end() ? 0 : it->second);
    }
  }
  for (const auto& [label, delta] : rec.delta) {
    auto it = pb.coefficient.find(label);
    if (it == pb.coefficient.end() || it->second != delta) {
      mismatch(label, delta, it == pb.coefficient.end() ? 0 : it->second);
    }
  }
  return rec;
}

AdjunctionReport adjunction_check(const BoundaryGraph& g) {
  AdjunctionReport rep;
  rep.pass = true;
  for (const auto& c : g.components) {
    int kc = 0;
    for (const auto& w : g.components) {
      kc += w.eps * g.intersection(w.label, c.label);
    }
    int residual = kc + c.self_int + 2;
    rep.residuals.emplace_back(c.label, residual);
    if (residual != 0) rep.pass = false;
  }
  return rep;
}

ChainBoundReport check_chain_bounds(const BoundaryGraph& g) {
  ChainBoundReport rep;
  if (!g.step1_done()) return rep;  // nothing to bound yet
  auto pos = [&](const std::string& label) {
    return static_cast<long>(
        std::find(g.chain.begin(), g.chain.end(), label) - g.chain.begin());
  };
  long p1 = pos(*g.e1);
  long p0 = pos(*g.e0);
  for (const auto& label : g.chain_e_components()) {
    if (label == *g.e1 || label == *g.e0) continue;
    const Component& c = g.comp(label);
    ChainBoundEntry entry;
    entry.label = label;
    entry.mult = c.mult;
    entry.eps = c.eps;
    long p = pos(label);
    entry.left_of_e1 = p < p1;
    entry.left_of_e0 = p < p0;
    if (entry.left_of_e1) {
      entry.e1_bound_holds = c.eps < -1;
      entry.e1_bound_tight = c.eps == -2;
    } else {
      entry.e1_bound_holds = c.eps >= 0;
      entry.e1_bound_tight = c.eps == 0;
    }
    if (entry.left_of_e0) {
      entry.e0_bound_holds = c.eps < c.mult - 1;
      entry.e0_bound_tight = c.eps == c.mult - 2;
    } else {
      entry.e0_bound_holds = c.eps >= c.mult;
      entry.e0_bound_tight = c.eps == c.mult;
    }
    if (!entry.e1_bound_holds || !entry.e0_bound_holds) rep.pass = false;
    rep.entries.push_back(entry);
  }
  return rep;
}

}  // namespace zigzag
