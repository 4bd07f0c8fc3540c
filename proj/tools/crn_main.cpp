#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "crn/kinetics.hpp"
#include "crn/parser.hpp"
#include "crn/report.hpp"

namespace {

void emit(const crn::Report& report, const std::string& format) {
  if (format == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decomposition analysis for chemical reaction networks"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file;
  std::string kind = "independent";
  std::string parts_text;
  std::string point_text;
  crn::DecomposeOptions decompose_options;

  auto* analyze = app.add_subcommand("analyze", "Network statistics");
  analyze->add_option("file", file, "Reaction network file")->required();
  analyze->fallthrough();

  auto* decompose = app.add_subcommand("decompose", "Finest decomposition");
  decompose->add_option("file", file)->required();
  decompose->add_option("--kind", kind, "independent or incidence")
      ->check(CLI::IsMember({"independent", "incidence"}))
      ->capture_default_str();
  decompose->add_flag("--count", decompose_options.count,
                      "Print the number of decompositions (Bell number of the finest length)");
  decompose->add_flag("--enumerate", decompose_options.enumerate,
                      "List the coarsenings of the finest decomposition");
  decompose->add_option("--max", decompose_options.max, "Stop enumeration after this many");
  decompose->fallthrough();

  auto* check = app.add_subcommand("check", "Classify a given decomposition");
  check->add_option("file", file)->required();
  check->add_option("--parts", parts_text, "Partition, e.g. \"1,2,3;4,5\" or labels")
      ->required();
  check->fallthrough();

  auto* zero = app.add_subcommand("zero-analysis", "Steady-state support analysis");
  zero->add_option("file", file)->required();
  zero->fallthrough();

  auto* equilibrium = app.add_subcommand("equilibrium", "Check a point for equilibrium");
  equilibrium->add_option("file", file)->required();
  equilibrium->add_option("--point", point_text, "Concentrations, e.g. \"A=2,B=1,C=2\"")
      ->required();
  equilibrium->add_option("--parts", parts_text, "Optional partition for per-part checks");
  equilibrium->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    crn::NetworkDocument doc = crn::parse_network_file(file);
    if (analyze->parsed()) {
      emit(crn::analyze_report(file, doc.network), format);
    } else if (decompose->parsed()) {
      auto k = kind == "incidence" ? crn::DecompositionKind::IncidenceIndependent
                                   : crn::DecompositionKind::Independent;
      emit(crn::decompose_report(file, doc.network, k, decompose_options), format);
    } else if (check->parsed()) {
      crn::Decomposition d = crn::parse_parts(doc.network, parts_text);
      emit(crn::check_report(file, doc.network, d), format);
    } else if (zero->parsed()) {
      emit(crn::zero_analysis_report(file, doc.network), format);
    } else if (equilibrium->parsed()) {
      crn::MassActionSystem sys = crn::MassActionSystem::of(doc);
      crn::RationalVector point = crn::parse_point(doc.network, point_text);
      std::optional<crn::Decomposition> parts;
      if (!parts_text.empty()) parts = crn::parse_parts(doc.network, parts_text);
      emit(crn::equilibrium_report(file, sys, point, parts), format);
    }
  } catch (const crn::ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const crn::MalformedPartition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const crn::MissingRates& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
