#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zigzag/boundary_graph.hpp"
#include "zigzag/canonical.hpp"
#include "zigzag/classify.hpp"
#include "zigzag/danielewski.hpp"
#include "zigzag/derivation.hpp"
#include "zigzag/enumerate.hpp"

namespace zigzag {

/// Insertion-ordered JSON so every report is byte-stable run to run.
using Json = nlohmann::ordered_json;

Json graph_json(const BoundaryGraph& g);
std::string graph_dot(const BoundaryGraph& g);
/// One-line pictograph: F0(0) -- D(1) -- F1(-3)[G1 G2 G3]
std::string zigzag_text(const BoundaryGraph& g);

/// Everything the `check` command evaluates on one graph.
struct CheckBundle {
  ValidationReport validation;
  AdjunctionReport adjunction;
  FiberReport fiber;
  ChainBoundReport bounds;
  std::optional<CanonicalRecord> canonical;
  std::optional<std::string> canonical_error;
  bool pass = false;
};

CheckBundle run_checks(const BoundaryGraph& g);
Json check_json(const BoundaryGraph& g, const CheckBundle& b);
std::string check_text(const BoundaryGraph& g, const CheckBundle& b);

Json classification_json(const Classification& c);
std::string classification_text(const Classification& c);

Json verify_json(const VerifySettings& s, const VerifyReport& r);
std::string verify_text(const VerifySettings& s, const VerifyReport& r);

/// Certificate plus the two yes/no facts reports care about.
struct DerivationReport {
  std::string name;
  LndCertificate certificate;
  bool preserves = false;
  bool fixed_point_free = false;
};

DerivationReport analyze_derivation(const Derivation& d, int cap);
Json lnd_json(const std::vector<DerivationReport>& entries);
std::string lnd_text(const std::vector<DerivationReport>& entries);

Json danielewski_json(const DanielewskiSurface& s, int cap);
std::string danielewski_text(const DanielewskiSurface& s, int cap);

}  // namespace zigzag
