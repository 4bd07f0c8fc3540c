#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "crn/decomposition.hpp"
#include "crn/kinetics.hpp"
#include "crn/network.hpp"

namespace crn {

using Json = nlohmann::ordered_json;

/* Analysis report with a stable schema: top-level keys {command, network,
 * result}. All rationals and big counts render as exact decimal strings;
 * serialization round-trips losslessly. */
struct Report {
  std::string command;
  Json network;
  Json result;

  Json to_json() const;
  static Report from_json(const Json& j);

  /// Deterministic plain-text rendering.
  std::string to_text() const;

  bool operator==(const Report&) const = default;
};

struct DecomposeOptions {
  bool count = false;
  bool enumerate = false;
  int max = 0;  // 0 = unlimited
};

Report analyze_report(const std::string& file, const Network& net);

Report decompose_report(const std::string& file, const Network& net, DecompositionKind kind,
                        const DecomposeOptions& options);

Report check_report(const std::string& file, const Network& net, const Decomposition& d);

Report zero_analysis_report(const std::string& file, const Network& net);

Report equilibrium_report(const std::string& file, const MassActionSystem& sys,
                          const RationalVector& point,
                          const std::optional<Decomposition>& parts);

}  // namespace crn
