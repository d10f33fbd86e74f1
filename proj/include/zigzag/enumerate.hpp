#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zigzag/boundary_graph.hpp"

namespace zigzag {

struct EnumerationLimits {
  int max_k = 0;  // step 1 plus interior steps
  int max_q = 1;  // leaves
  int base_n_min = 0;
  int base_n_max = 0;
};

/// Visits every legal program within the limits exactly once, in a fixed
/// deterministic order: bases ascending; at each construction state the
/// finished programs (leaves ascending, host multisets in chain order) come
/// before deeper blow-ups; blow-up locations run left to right along the
/// chain with the free blow-up of the rightmost component last; step 1 on
/// the section before step 1 at a free point.
void enumerate_programs(const EnumerationLimits& limits,
                        const std::function<void(const BlowupProgram&)>& emit);

std::vector<BlowupProgram> enumerate_programs(const EnumerationLimits& limits);

enum class Check { ChainBounds, KCriterion, Adjunction, Fiber, Roundtrip };

std::string check_name(Check c);

struct VerifySettings {
  EnumerationLimits limits;
  std::set<Check> checks = {Check::ChainBounds, Check::KCriterion,
                            Check::Adjunction, Check::Fiber, Check::Roundtrip};
};

struct VerifyFailure {
  std::string program;  // printed form
  std::string check;
  std::string detail;
};

struct VerifyReport {
  long long programs = 0;
  long long stages = 0;
  long long failure_count = 0;
  std::map<std::string, long long> class_counts;
  std::map<int, long long> k_counts;          // normalized k histogram
  std::map<std::string, long long> counters;  // bound tightness tallies
  std::vector<VerifyFailure> failures;        // capped sample
};

/// Replays every enumerated program and runs the selected checks on every
/// intermediate graph: structural shape, the canonical-coefficient bounds,
/// adjunction plus the divisor-class cross-check, the fiber class, one
/// contraction round trip per blow-up, and coherence of the k-triviality
/// decision with the normalized program.
VerifyReport verify_programs(const VerifySettings& settings);

}  // namespace zigzag
