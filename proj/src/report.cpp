#include "crn/report.hpp"

#include <sstream>

namespace crn {

namespace {

Json stats_json(const NetworkStats& stats) {
  return Json{{"n", stats.n},
              {"m", stats.m},
              {"r", stats.r},
              {"l", stats.l},
              {"sl", stats.sl},
              {"t", stats.t},
              {"s", stats.s},
              {"deficiency", stats.deficiency},
              {"weakly_reversible", stats.weakly_reversible},
              {"reversible", stats.reversible}};
}

Json network_json(const std::string& file, const Network& net) {
  Json species = Json::array();
  for (const Species& s : net.species()) species.push_back(s.name);
  Json reactions = Json::array();
  for (int i = 0; i < net.reaction_count(); ++i)
    reactions.push_back(Json{{"name", net.reaction_name(i)}, {"text", net.reaction_text(i)}});
  return Json{{"file", file}, {"species", species}, {"reactions", reactions}};
}

Json part_names(const Network& net, const std::vector<int>& part) {
  Json out = Json::array();
  for (int rx : part) out.push_back(net.reaction_name(rx));
  return out;
}

Json decomposition_json(const Network& net, const Decomposition& d,
                        const SubnetworkReport& report) {
  Json parts = Json::array();
  for (size_t p = 0; p < d.parts.size(); ++p) {
    parts.push_back(Json{{"reactions", part_names(net, d.parts[p])},
                         {"stats", stats_json(report.parts[p].stats)}});
  }
  return Json{{"length", d.length()}, {"trivial", d.trivial()}, {"parts", parts}};
}

std::string join_names(const Json& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i].get<std::string>();
  }
  return out + "}";
}

std::string parts_line(const Json& parts_json) {
  std::string out;
  for (size_t p = 0; p < parts_json.size(); ++p) {
    if (p) out += " | ";
    const Json& part = parts_json[p];
    out += join_names(part.contains("reactions") ? part["reactions"] : part);
  }
  return out;
}

std::string stats_line(const Json& stats) {
  std::ostringstream out;
  out << "n=" << stats["n"].get<int>() << " m=" << stats["m"].get<int>() << " r="
      << stats["r"].get<int>() << " l=" << stats["l"].get<int>() << " sl="
      << stats["sl"].get<int>() << " t=" << stats["t"].get<int>() << " s="
      << stats["s"].get<int>() << " deficiency=" << stats["deficiency"].get<int>()
      << " weakly_reversible=" << (stats["weakly_reversible"].get<bool>() ? "true" : "false")
      << " reversible=" << (stats["reversible"].get<bool>() ? "true" : "false");
  return out.str();
}

std::string part_stats_line(const Json& stats) {
  std::ostringstream out;
  out << "n=" << stats["n"].get<int>() << " l=" << stats["l"].get<int>() << " s="
      << stats["s"].get<int>() << " deficiency=" << stats["deficiency"].get<int>()
      << " weakly_reversible=" << (stats["weakly_reversible"].get<bool>() ? "true" : "false")
      << " reversible=" << (stats["reversible"].get<bool>() ? "true" : "false");
  return out.str();
}

void render_finest(std::ostream& out, const Json& finest, const std::string& label) {
  out << label << ": " << finest["length"].get<int>() << " part"
      << (finest["length"].get<int>() == 1 ? "" : "s") << " ("
      << (finest["trivial"].get<bool>() ? "trivial" : "nontrivial") << ")\n";
  const Json& parts = finest["parts"];
  for (size_t p = 0; p < parts.size(); ++p) {
    out << "  part " << (p + 1) << ": " << join_names(parts[p]["reactions"]) << "  "
        << part_stats_line(parts[p]["stats"]) << "\n";
  }
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

Json Report::to_json() const {
  return Json{{"command", command}, {"network", network}, {"result", result}};
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.network = j.at("network");
  r.result = j.at("result");
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "file: " << network["file"].get<std::string>() << "\n";

  if (command == "analyze") {
    out << stats_line(result) << "\n";
  } else if (command == "decompose") {
    out << "kind: " << result["kind"].get<std::string>() << "\n";
    render_finest(out, result["finest"], "finest decomposition");
    if (result.contains("count")) {
      out << "number of " << result["kind"].get<std::string>() << " decompositions: "
          << result["count"].get<std::string>() << "\n";
    }
    if (result.contains("enumeration")) {
      out << "enumeration:\n";
      const Json& list = result["enumeration"];
      for (size_t i = 0; i < list.size(); ++i)
        out << "  " << (i + 1) << ": " << parts_line(list[i]) << "\n";
      if (result["enumeration_truncated"].get<bool>())
        out << "  ... (truncated at --max)\n";
    }
  } else if (command == "check") {
    out << "parts: " << parts_line(result["parts"]) << "\n";
    out << "independent: " << bool_text(result["independent"].get<bool>()) << "\n";
    out << "incidence_independent: "
        << bool_text(result["incidence_independent"].get<bool>()) << "\n";
    out << "bi_independent: " << bool_text(result["bi_independent"].get<bool>()) << "\n";
    const Json& d = result["deficiency"];
    out << "deficiency: delta=" << d["delta"].get<int>() << " sum=" << d["sum"].get<int>()
        << " relation: delta " << d["relation"].get<std::string>() << " sum\n";
    const Json& parts = result["part_stats"];
    for (size_t p = 0; p < parts.size(); ++p) {
      out << "  part " << (p + 1) << ": " << join_names(parts[p]["reactions"])
          << "  weakly_reversible=" << bool_text(parts[p]["weakly_reversible"].get<bool>())
          << " reversible=" << bool_text(parts[p]["reversible"].get<bool>()) << "\n";
    }
  } else if (command == "zero-analysis") {
    render_finest(out, result["finest"], "finest independent decomposition");
    out << "deficiency-zero parts:";
    for (const Json& p : result["deficiency_zero_parts"]) out << " " << p.get<int>();
    if (result["deficiency_zero_parts"].empty()) out << " none";
    out << "\n";
    out << "zero species: " << join_names(result["zero_species"]) << "\n";
    out << "unsupported complexes: " << join_names(result["unsupported_complexes"]) << "\n";
    out << "derivation log:\n";
    for (const Json& step : result["derivation_log"])
      out << "  " << step["rule"].get<std::string>() << ": "
          << step["detail"].get<std::string>() << "\n";
    out << "verdict: " << result["verdict"].get<std::string>() << "\n";
  } else if (command == "equilibrium") {
    out << "point:";
    for (const auto& [name, value] : result["point"].items())
      out << " " << name << "=" << value.get<std::string>();
    out << "\n";
    out << "whole network at equilibrium: "
        << bool_text(result["whole_at_equilibrium"].get<bool>()) << "\n";
    if (result["complex_balanced"].is_boolean())
      out << "complex balanced at point: "
          << bool_text(result["complex_balanced"].get<bool>()) << "\n";
    else
      out << "complex balanced at point: not applicable (point not strictly positive)\n";
    if (result.contains("parts")) {
      const Json& parts = result["parts"];
      for (size_t p = 0; p < parts.size(); ++p) {
        out << "  part " << (p + 1) << ": " << join_names(parts[p]["reactions"])
            << "  at equilibrium: " << bool_text(parts[p]["at_equilibrium"].get<bool>())
            << "\n";
      }
      out << "equality clause applies (independent decomposition at positive point): "
          << bool_text(result["equality_clause_applies"].get<bool>()) << "\n";
    }
  }
  return out.str();
}

Report analyze_report(const std::string& file, const Network& net) {
  Report r;
  r.command = "analyze";
  r.network = network_json(file, net);
  r.result = stats_json(network_stats(net));
  return r;
}

Report decompose_report(const std::string& file, const Network& net, DecompositionKind kind,
                        const DecomposeOptions& options) {
  auto [finest, report] = kind == DecompositionKind::Independent
                              ? finest_independent(net)
                              : finest_incidence_independent(net);
  Report r;
  r.command = "decompose";
  r.network = network_json(file, net);
  r.result = Json{{"kind", to_string(kind)},
                  {"finest", decomposition_json(net, finest, report)}};
  if (options.count)
    r.result["count"] = to_string(count_decompositions(finest.length()));
  if (options.enumerate) {
    Json list = Json::array();
    bool truncated = false;
    CoarseningEnumerator coarsenings(finest);
    while (auto d = coarsenings.next()) {
      if (options.max > 0 && static_cast<int>(list.size()) == options.max) {
        truncated = true;
        break;
      }
      Json parts = Json::array();
      for (const auto& part : d->parts) parts.push_back(part_names(net, part));
      list.push_back(parts);
    }
    r.result["enumeration"] = list;
    r.result["enumeration_truncated"] = truncated;
  }
  return r;
}

Report check_report(const std::string& file, const Network& net, const Decomposition& d) {
  Report r;
  r.command = "check";
  r.network = network_json(file, net);

  DeficiencyRelation rel = deficiency_relation(net, d);
  PartReversibility rev = weak_reversibility_of_decomposition(net, d);

  Json parts = Json::array();
  Json part_stats = Json::array();
  for (size_t p = 0; p < d.parts.size(); ++p) {
    parts.push_back(part_names(net, d.parts[p]));
    part_stats.push_back(Json{{"reactions", part_names(net, d.parts[p])},
                              {"weakly_reversible", rev.weakly_reversible[p]},
                              {"reversible", rev.reversible[p]}});
  }
  Json deltas = Json::array();
  for (int delta : rel.part_deltas) deltas.push_back(delta);

  r.result = Json{{"parts", parts},
                  {"independent", rel.independent},
                  {"incidence_independent", rel.incidence_independent},
                  {"bi_independent", rel.bi_independent},
                  {"deficiency",
                   Json{{"delta", rel.delta},
                        {"parts", deltas},
                        {"sum", rel.sum},
                        {"relation", rel.cmp < 0 ? "<" : rel.cmp > 0 ? ">" : "="}}},
                  {"part_stats", part_stats}};
  return r;
}

Report zero_analysis_report(const std::string& file, const Network& net) {
  auto [finest, report] = finest_independent(net);
  SupportFacts facts = zero_support_analysis(net, finest);

  Json zero_species = Json::array();
  for (int s : facts.zero_species) zero_species.push_back(net.species_at(s).name);
  Json unsupported = Json::array();
  for (int c : facts.unsupported_complexes) unsupported.push_back(net.complex_text(c));
  Json log = Json::array();
  for (const DerivationStep& step : facts.derivation_log)
    log.push_back(Json{{"rule", step.rule}, {"detail", step.detail}});
  Json def_zero = Json::array();
  for (int p : embedded_deficiency_zero_parts(report)) def_zero.push_back(p + 1);

  bool possible = facts.zero_species.empty();
  Report r;
  r.command = "zero-analysis";
  r.network = network_json(file, net);
  r.result = Json{{"finest", decomposition_json(net, finest, report)},
                  {"deficiency_zero_parts", def_zero},
                  {"decomposition_independent", facts.decomposition_independent},
                  {"zero_species", zero_species},
                  {"unsupported_complexes", unsupported},
                  {"derivation_log", log},
                  {"positive_steady_state_possible", possible},
                  {"verdict",
                   possible ? "no species is forced to zero at steady state"
                            : "a positive steady state (all species positive) is not possible"}};
  return r;
}

Report equilibrium_report(const std::string& file, const MassActionSystem& sys,
                          const RationalVector& point,
                          const std::optional<Decomposition>& parts) {
  const Network& net = sys.network;
  Report r;
  r.command = "equilibrium";
  r.network = network_json(file, net);

  Json point_json = Json::object();
  for (int s = 0; s < net.species_count(); ++s)
    point_json[net.species_at(s).name] = to_string(point(s));
  Json rates = Json::array();
  for (const Rational& k : sys.rates) rates.push_back(to_string(k));

  bool positive = true;
  for (Index i = 0; i < point.size(); ++i) positive = positive && point(i) > 0;

  r.result = Json{{"point", point_json},
                  {"rates", rates},
                  {"whole_at_equilibrium", is_equilibrium(sys, point)},
                  {"complex_balanced",
                   positive ? Json(is_complex_balanced_at(sys, point)) : Json(nullptr)}};

  if (parts) {
    EquilibriumCheck check = equilibrium_intersection_check(sys, *parts, point);
    Json part_list = Json::array();
    for (size_t p = 0; p < parts->parts.size(); ++p) {
      part_list.push_back(Json{{"reactions", part_names(net, parts->parts[p])},
                               {"at_equilibrium", check.part_at_equilibrium[p]}});
    }
    r.result["parts"] = part_list;
    r.result["independent"] = check.independent;
    r.result["positive_point"] = check.positive_point;
    r.result["equality_clause_applies"] = check.equality_clause_applies;
  }
  return r;
}

}  // namespace crn
