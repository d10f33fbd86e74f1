#include "zigzag/enumerate.hpp"

#include "zigzag/canonical.hpp"
#include "zigzag/classify.hpp"

namespace zigzag {

namespace {

class Enumerator {
 public:
  Enumerator(const EnumerationLimits& limits,
             const std::function<void(const BlowupProgram&)>& emit)
      : limits_(limits), emit_(emit) {}

  void run() {
    for (int n = limits_.base_n_min; n <= limits_.base_n_max; ++n) {
      BoundaryGraph base = base_graph(n);
      finals(base);
      if (limits_.max_k >= 1) {
        descend(blow_up_step1(base, Step1::OnD), 1);
        descend(blow_up_step1(base, Step1::Free), 1);
      }
    }
  }

 private:
  void finals(const BoundaryGraph& g) {
    std::vector<std::string> hosts = g.chain_e_components();
    std::vector<std::string> acc;
    for (int q = 1; q <= limits_.max_q; ++q) pick(g, hosts, 0, q, acc);
  }

  void pick(const BoundaryGraph& g, const std::vector<std::string>& hosts,
            std::size_t start, int remaining, std::vector<std::string>& acc) {
    if (remaining == 0) {
      BlowupProgram p = *g.history;
      p.attachments = acc;
      emit_(p);
      return;
    }
    for (std::size_t i = start; i < hosts.size(); ++i) {
      acc.push_back(hosts[i]);
      pick(g, hosts, i, remaining - 1, acc);
      acc.pop_back();
    }
  }

  void descend(const BoundaryGraph& g, int k_used) {
    finals(g);
    if (k_used >= limits_.max_k) return;
    for (std::size_t i = 1; i + 1 < g.chain.size(); ++i) {
      BetweenStep step{g.chain[i], g.chain[i + 1]};
      descend(blow_up(g, step), k_used + 1);
    }
    descend(blow_up(g, FarRightFreeStep{}), k_used + 1);
  }

  const EnumerationLimits& limits_;
  const std::function<void(const BlowupProgram&)>& emit_;
};

constexpr std::size_t kFailureSample = 200;

}  // namespace

void enumerate_programs(const EnumerationLimits& limits,
                        const std::function<void(const BlowupProgram&)>& emit) {
  if (limits.max_k < 0 || limits.max_q < 1) {
    throw InvalidParameter("enumeration limits need max_k >= 0 and max_q >= 1");
  }
  if (limits.base_n_min > limits.base_n_max) {
    throw InvalidParameter("empty base range");
  }
  Enumerator(limits, emit).run();
}

std::vector<BlowupProgram> enumerate_programs(const EnumerationLimits& limits) {
  std::vector<BlowupProgram> out;
  enumerate_programs(limits,
                     [&](const BlowupProgram& p) { out.push_back(p); });
  return out;
}

std::string check_name(Check c) {
  switch (c) {
    case Check::ChainBounds:
      return "chain-bounds";
    case Check::KCriterion:
      return "k-criterion";
    case Check::Adjunction:
      return "adjunction";
    case Check::Fiber:
      return "fiber";
    case Check::Roundtrip:
      return "roundtrip";
  }
  return "unknown";
}

VerifyReport verify_programs(const VerifySettings& settings) {
  VerifyReport rep;
  auto has = [&](Check c) { return settings.checks.count(c) > 0; };
  auto record = [&](const BlowupProgram& p, const std::string& check,
                    const std::string& detail) {
    rep.failure_count += 1;
    if (rep.failures.size() < kFailureSample) {
      rep.failures.push_back(VerifyFailure{print_program(p), check, detail});
    }
  };

  enumerate_programs(settings.limits, [&](const BlowupProgram& p) {
    rep.programs += 1;

    std::vector<BoundaryGraph> stages;
    stages.push_back(base_graph(p.base_n));
    if (p.step1) {
      stages.push_back(blow_up_step1(stages.back(), *p.step1));
      if (has(Check::Roundtrip)) {
        std::string exceptional = *p.step1 == Step1::OnD ? "E1" : "E0";
        if (!(contract(stages.back(), exceptional) == stages[stages.size() - 2])) {
          record(p, check_name(Check::Roundtrip),
                 "contracting the step-1 exceptional does not restore the base");
        }
      }
    }
    for (const auto& step : p.interior) {
      const BoundaryGraph before = stages.back();
      stages.push_back(blow_up(before, step));
      if (has(Check::Roundtrip)) {
        const std::string& label = stages.back().components.back().label;
        if (!(contract(stages.back(), label) == before)) {
          record(p, check_name(Check::Roundtrip),
                 "contracting " + label + " does not undo its blow-up");
        }
      }
    }
    {
      const BoundaryGraph before = stages.back();
      stages.push_back(final_step(before, p.attachments));
      if (has(Check::Roundtrip)) {
        BoundaryGraph cur = stages.back();
        for (std::size_t i = p.attachments.size(); i-- > 0;) {
          cur = contract(cur, "G" + std::to_string(i + 1));
        }
        if (!(cur == before)) {
          record(p, check_name(Check::Roundtrip),
                 "contracting the leaves does not undo the final step");
        }
      }
    }
    rep.stages += static_cast<long long>(stages.size());

    for (const auto& g : stages) {
      ValidationReport v = validate(g);
      if (!v.valid) {
        record(p, "structure", v.violations.front());
      }
      if (has(Check::Adjunction) && !adjunction_check(g).pass) {
        record(p, check_name(Check::Adjunction),
               "a component violates K.C + C.C = -2");
      }
      if (has(Check::Fiber) && !fiber_check(g).pass) {
        record(p, check_name(Check::Fiber),
               "the fiber class does not survive the blow-ups");
      }
      if (has(Check::ChainBounds) && !check_chain_bounds(g).pass) {
        record(p, check_name(Check::ChainBounds),
               "an interior coefficient leaves its positional bounds");
      }
    }

    const BoundaryGraph& fin = stages.back();
    if (has(Check::ChainBounds)) {
      for (const auto& e : check_chain_bounds(fin).entries) {
        std::string side1 = e.left_of_e1 ? "e1_left" : "e1_right";
        std::string side0 = e.left_of_e0 ? "e0_left" : "e0_right";
        rep.counters[side1] += 1;
        if (e.e1_bound_tight) rep.counters[side1 + "_tight"] += 1;
        rep.counters[side0] += 1;
        if (e.e0_bound_tight) rep.counters[side0 + "_tight"] += 1;
      }
    }
    if (has(Check::Adjunction)) {
      try {
        canonical_record(fin);
      } catch (const Error& e) {
        record(p, check_name(Check::Adjunction), e.what());
      }
    }

    Classification cls = classify(p);
    rep.class_counts[surface_class_name(cls.surface_class)] += 1;
    rep.k_counts[cls.k] += 1;
    if (has(Check::KCriterion)) {
      BoundaryGraph ng = replay(cls.normalized);
      bool presence_here = k_triviality_constant(fin).has_value();
      if (presence_here != cls.k_trivial) {
        record(p, check_name(Check::KCriterion),
               "k-triviality depends on the presentation");
      }
      if (cls.k_trivial != (cls.k == 0)) {
        record(p, check_name(Check::KCriterion),
               "k-triviality disagrees with the normalized step count");
      }
      if (cls.k == 0 && cls.m != 1) {
        record(p, check_name(Check::KCriterion),
               "normalized k = 0 should force m = 1");
      }
      if (ng.leaf_count() != fin.leaf_count()) {
        record(p, check_name(Check::KCriterion), "normalization changed q");
      }
      if (!validate(ng).good_closure) {
        record(p, check_name(Check::KCriterion),
               "normalized program keeps a superfluous (-1)-curve");
      }
      if (!(normalize(cls.normalized) == cls.normalized)) {
        record(p, check_name(Check::KCriterion), "normalize is not idempotent");
      }
    }
  });
  return rep;
}

}  // namespace zigzag
