// Command-line surface for orbit counting, proof verification, and seeded
// estimation over group actions described by JSON spec files.
//
// Exit codes: 0 success, 2 input error, 3 internal consistency failure,
// 4 proof-identity failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "burnside/counting.hpp"
#include "burnside/problem_spec.hpp"
#include "burnside/proof.hpp"
#include "burnside/sampling.hpp"

namespace {

using burnside::EstimateReport;
using burnside::EventKind;
using burnside::GroupAction;
using burnside::IdentityReport;
using burnside::OrbitCountReport;
using burnside::OrbitPartition;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitProofFailure = 4;

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

// "6" for plain points, "6:0110" when the label carries more than the index.
std::string point_repr(const GroupAction& action, std::uint32_t x) {
  const std::string& label = action.space().labels[x];
  if (label == std::to_string(x)) return label;
  return std::to_string(x) + ":" + label;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_orbits(const GroupAction& action, const std::string& format) {
  const OrbitPartition partition = burnside::orbit_partition(action);

  if (format == "text") {
    std::cout << "group order: " << action.group().order() << "\n";
    std::cout << "space size: " << action.size() << "\n";
    std::cout << "orbits: " << partition.orbit_count << "\n";
    for (std::size_t i = 0; i < partition.orbit_count; ++i) {
      const auto& members = partition.orbit_members[i];
      std::cout << "orbit " << i << " (size " << members.size() << "):";
      for (std::uint32_t y : members) std::cout << " " << point_repr(action, y);
      std::cout << "\n";
    }
    return kExitOk;
  }

  json doc;
  doc["command"] = "orbits";
  doc["group_order"] = action.group().order();
  doc["space_size"] = action.size();
  doc["orbit_count"] = partition.orbit_count;
  doc["orbits"] = partition.orbit_members;
  json labels = json::array();
  for (const auto& members : partition.orbit_members) {
    json row = json::array();
    for (std::uint32_t y : members) row.push_back(action.space().labels[y]);
    labels.push_back(std::move(row));
  }
  doc["orbit_labels"] = std::move(labels);
  emit(doc);
  return kExitOk;
}

int run_count(const GroupAction& action, const std::string& format) {
  const OrbitCountReport report = burnside::orbit_count_report(action);
  const bool consistent = report.burnside_value.is_integer() &&
                          report.burnside_value ==
                              burnside::Rational(static_cast<std::int64_t>(
                                  report.direct_count));

  if (format == "text") {
    std::cout << "group order: " << report.group_order << "\n";
    std::cout << "space size: " << action.size() << "\n";
    std::cout << "|fix(g)| by element:\n";
    for (std::size_t g = 0; g < report.fix_sizes.size(); ++g) {
      std::cout << "  g" << g << " = "
                << burnside::format_cycles(action.group().element(g)) << ": "
                << report.fix_sizes[g] << "\n";
    }
    std::cout << "fixed pairs: " << report.fixed_pairs << "\n";
    std::cout << "burnside: " << report.fixed_pairs << "/"
              << report.group_order << " = " << report.burnside_value.str()
              << "\n";
    std::cout << "direct count: " << report.direct_count << "\n";
  } else {
    json doc;
    doc["command"] = "count";
    doc["group_order"] = report.group_order;
    doc["space_size"] = action.size();
    doc["fix_sizes"] = report.fix_sizes;
    doc["fixed_pairs"] = report.fixed_pairs;
    doc["burnside"] = report.burnside_value.str();
    doc["direct_count"] = report.direct_count;
    doc["consistent"] = consistent;
    emit(doc);
  }

  if (!consistent) {
    std::cerr << "error: burnside value " << report.burnside_value.str()
              << " does not match direct count " << report.direct_count
              << "\n";
    return kExitConsistency;
  }
  return kExitOk;
}

std::string step_summary(const IdentityReport& report) {
  if (report.identity_name == "total-probability") {
    return "sum_x P(gy=x) = " + report.lhs.front().str();
  }
  if (report.identity_name == "transporter-bijection") {
    return report.lhs.front().str() + " triples checked, " +
           report.rhs.front().str() + " passed";
  }
  if (report.identity_name == "chain-rule" ||
      report.identity_name == "conditional-collapse") {
    return std::to_string(report.lhs.size()) + " equalities";
  }
  if (report.identity_name == "orbit-uniformity") {
    return "P(y in orb(x)) = " + report.rhs.front().str() + " for all x";
  }
  // orbit-count
  return "sum_x P(gx=x) = " + report.lhs.front().str() +
         ", direct count = " + report.rhs.front().str();
}

int run_verify(const GroupAction& action, const std::string& format) {
  const std::vector<IdentityReport> reports = burnside::verify_proof(action);
  bool all_hold = true;

  if (format == "text") {
    for (const IdentityReport& report : reports) {
      all_hold = all_hold && report.holds;
      std::cout << (report.holds ? "PASS " : "FAIL ") << report.identity_name
                << ": " << step_summary(report);
      if (report.witness) std::cout << " [" << *report.witness << "]";
      std::cout << "\n";
    }
  } else {
    json doc;
    doc["command"] = "verify";
    json steps = json::array();
    for (const IdentityReport& report : reports) {
      all_hold = all_hold && report.holds;
      json step;
      step["name"] = report.identity_name;
      step["holds"] = report.holds;
      json lhs = json::array();
      for (const auto& v : report.lhs) lhs.push_back(v.str());
      json rhs = json::array();
      for (const auto& v : report.rhs) rhs.push_back(v.str());
      step["lhs"] = std::move(lhs);
      step["rhs"] = std::move(rhs);
      if (report.witness) {
        step["witness"] = *report.witness;
      } else {
        step["witness"] = nullptr;
      }
      steps.push_back(std::move(step));
    }
    doc["reports"] = std::move(steps);
    doc["all_hold"] = all_hold;
    emit(doc);
  }

  return all_hold ? kExitOk : kExitProofFailure;
}

int run_estimate(const GroupAction& action, const std::string& quantity,
                 std::size_t samples, std::uint64_t seed, std::uint32_t x,
                 const std::string& format) {
  EstimateReport report;
  if (quantity == "orbit-count") {
    report = burnside::estimate_orbit_count(action, samples, seed);
  } else if (quantity == "gy=x") {
    report = burnside::estimate_event(action, EventKind::GyEqX, x, samples, seed);
  } else if (quantity == "y-in-orb-x") {
    report =
        burnside::estimate_event(action, EventKind::YInOrbX, x, samples, seed);
  } else if (quantity == "gx=x") {
    report =
        burnside::estimate_event(action, EventKind::GxEqX, x, samples, seed);
  } else {
    std::cerr << "error: unknown quantity '" << quantity
              << "' (expected orbit-count, gy=x, y-in-orb-x or gx=x)\n";
    return kExitInput;
  }

  if (format == "text") {
    std::cout << "quantity: " << report.quantity << "\n";
    std::cout << "samples: " << report.samples << "\n";
    std::cout << "seed: " << report.seed << "\n";
    std::cout << "estimate: " << format_double(report.estimate) << "\n";
    std::cout << "exact: " << report.exact.str() << "\n";
    std::cout << "standard error: " << format_double(report.standard_error)
              << "\n";
  } else {
    json doc;
    doc["command"] = "estimate";
    doc["quantity"] = report.quantity;
    doc["samples"] = report.samples;
    doc["seed"] = report.seed;
    doc["estimate"] = report.estimate;
    doc["exact"] = report.exact.str();
    doc["standard_error"] = report.standard_error;
    emit(doc);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit counting, proof verification and seeded estimation "
               "for finite group actions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string spec_path;
  std::string quantity = "orbit-count";
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::uint32_t x = 0;

  CLI::App* cmd_orbits =
      app.add_subcommand("orbits", "list the orbits of the action");
  cmd_orbits->add_option("spec", spec_path, "spec file")->required();

  CLI::App* cmd_count = app.add_subcommand(
      "count", "count orbits directly and by the fixed-point average");
  cmd_count->add_option("spec", spec_path, "spec file")->required();

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check every identity in the probabilistic argument exactly");
  cmd_verify->add_option("spec", spec_path, "spec file")->required();

  CLI::App* cmd_estimate = app.add_subcommand(
      "estimate", "Monte Carlo estimate of a quantity with its exact value");
  cmd_estimate->add_option("spec", spec_path, "spec file")->required();
  cmd_estimate->add_option("--samples", samples, "number of draws")
      ->capture_default_str();
  cmd_estimate->add_option("--seed", seed, "generator seed")
      ->capture_default_str();
  cmd_estimate
      ->add_option("--quantity", quantity,
                   "orbit-count, gy=x, y-in-orb-x or gx=x")
      ->capture_default_str();
  cmd_estimate->add_option("--x", x, "point parameter for event quantities")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const burnside::ProblemSpec spec = burnside::ProblemSpec::load(spec_path);
    const GroupAction action = burnside::build_action(spec);

    if (app.got_subcommand(cmd_orbits)) return run_orbits(action, format);
    if (app.got_subcommand(cmd_count)) return run_count(action, format);
    if (app.got_subcommand(cmd_verify)) return run_verify(action, format);
    if (app.got_subcommand(cmd_estimate)) {
      return run_estimate(action, quantity, samples, seed, x, format);
    }
    return kExitInput;
  } catch (const burnside::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
