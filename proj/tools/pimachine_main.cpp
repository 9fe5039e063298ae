// pimachine: two-block collision counter, certified closed forms, digit
// extraction, Grover runs, and machine/Grover equivalence reports.

#include "pimachine/angle.hpp"
#include "pimachine/equivalence.hpp"
#include "pimachine/errors.hpp"
#include "pimachine/grover.hpp"
#include "pimachine/io.hpp"
#include "pimachine/machine.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace pimachine;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;  // certification failure, limit overflow
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  out << text;
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

void emit_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error_kind", kind}, {"message", message}}.dump() << "\n";
}

struct Options {
  std::string m1{"1"};
  std::string m2{"1"};
  unsigned digits_n = 0;
  int qubits = 2;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> steps;
  std::string format{"json"};
  std::string out_path;
  std::uint64_t max_events = kDefaultMaxEvents;
  long max_bits = kDefaultMaxBits;
  std::string trace_mode{"count"};
  std::string ratios_file;
};

MachineConfig machine_config(const Options& opt) {
  MachineConfig config;
  config.m1 = parse_rational(opt.m1);
  config.m2 = parse_rational(opt.m2);
  config.v2_initial = -1;
  config.validate();
  return config;
}

int run_simulate(const Options& opt) {
  const MachineConfig config = machine_config(opt);
  const bool full = opt.trace_mode == "full";
  const CollisionTrace trace = run_machine(
      config, full ? TraceMode::FullTrace : TraceMode::CountOnly, opt.max_events);
  if (!full) {
    emit_json(count_summary_json(trace, config), opt.out_path);
  } else if (opt.format == "csv") {
    emit(trace_to_csv(trace), opt.out_path);
  } else {
    emit_json(trace_to_json(trace), opt.out_path);
  }
  return kExitOk;
}

int run_count(const Options& opt) {
  const MachineConfig config = machine_config(opt);
  const CertifiedCount count =
      collision_count_closed_form(config.m1, config.m2, opt.max_bits);
  emit_json(certified_count_json(count, config.mass_ratio()), opt.out_path);
  if (!count.certified) {
    emit_error("uncertified", "count not certified within " +
                                  std::to_string(opt.max_bits) + " bits");
    return kExitDomainFailure;
  }
  return kExitOk;
}

int run_digits(const Options& opt) {
  emit(pi_digits(opt.digits_n, opt.max_bits) + "\n", opt.out_path);
  return kExitOk;
}

int run_grover(const Options& opt) {
  const GroverInstance inst = make_instance(opt.qubits, opt.k);
  const std::uint64_t steps = opt.steps.value_or(static_cast<std::uint64_t>(
      std::floor(std::numbers::pi / (4.0 * inst.theta))));
  const auto trace = grover_probability_trace(inst, steps);
  if (opt.format == "csv") {
    emit(grover_trace_to_csv(trace), opt.out_path);
  } else {
    emit_json(grover_run_json(inst, trace), opt.out_path);
  }
  return kExitOk;
}

int run_compare(const Options& opt) {
  CompareOptions copts;
  copts.max_events = opt.max_events;
  copts.max_bits = opt.max_bits;

  if (!opt.ratios_file.empty()) {
    std::ifstream in(opt.ratios_file);
    if (!in) {
      throw std::invalid_argument("cannot open ratios file '" + opt.ratios_file + "'");
    }
    json reports = json::array();
    bool all_ok = true;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      MachineConfig config;
      config.m1 = 1;
      config.m2 = parse_rational(line);
      config.v2_initial = -1;
      const ComparisonReport report = compare(config, copts);
      all_ok = all_ok && report.count_certified;
      reports.push_back(report_to_json(report));
    }
    emit_json(reports, opt.out_path);
    return all_ok ? kExitOk : kExitDomainFailure;
  }

  const ComparisonReport report = compare(machine_config(opt), copts);
  if (opt.format == "csv") {
    emit(report_to_csv(report), opt.out_path);
  } else {
    emit_json(report_to_json(report), opt.out_path);
  }
  return report.count_certified ? kExitOk : kExitDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-block elastic-collision pi machine and Grover search, side by side"};
  app.require_subcommand(1);

  Options opt;

  auto add_mass_flags = [&](CLI::App* cmd) {
    cmd->add_option("--m1", opt.m1, "mass of the light block, integer or num/den");
    cmd->add_option("--m2", opt.m2, "mass of the heavy block, integer or num/den");
  };
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "write output to this path");
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run the exact event-driven machine");
  add_mass_flags(simulate);
  add_output_flags(simulate);
  simulate->add_option("--trace", opt.trace_mode, "count: total only, full: every event")
      ->check(CLI::IsMember({"count", "full"}));
  simulate->add_option("--max-events", opt.max_events, "event ceiling");

  CLI::App* count = app.add_subcommand(
      "count", "certified closed-form collision count");
  add_mass_flags(count);
  add_output_flags(count);
  count->add_option("--max-bits", opt.max_bits, "precision ceiling in bits");

  CLI::App* digits = app.add_subcommand(
      "digits", "digits of pi from the mass ratio 10^(2n)");
  digits->add_option("--n", opt.digits_n, "prints the first n+1 digits of pi")
      ->required();
  digits->add_option("--max-bits", opt.max_bits, "precision ceiling in bits");
  digits->add_option("--out", opt.out_path, "write output to this path");

  CLI::App* grover = app.add_subcommand(
      "grover", "state-vector Grover run with closed-form comparison");
  grover->add_option("--n", opt.qubits, "qubit count")->required();
  grover->add_option("--k", opt.k, "marked index, default 0");
  grover->add_option("--steps", opt.steps,
                     "iterations; default floor(pi/(4 theta))");
  add_output_flags(grover);

  CLI::App* cmp = app.add_subcommand(
      "compare", "machine vs Grover trajectory and count report");
  add_mass_flags(cmp);
  add_output_flags(cmp);
  cmp->add_option("--max-events", opt.max_events, "event ceiling");
  cmp->add_option("--max-bits", opt.max_bits, "precision ceiling in bits");
  cmp->add_option("--ratios-file", opt.ratios_file,
                  "batch mode: one mass ratio per line, m1 = 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::stringstream ss;
    ss << e.what();
    emit_error("usage", ss.str());
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(opt);
    if (count->parsed()) return run_count(opt);
    if (digits->parsed()) return run_digits(opt);
    if (grover->parsed()) return run_grover(opt);
    if (cmp->parsed()) return run_compare(opt);
    emit_error("usage", "no subcommand given");
    return kExitUsage;
  } catch (const UncertifiedError& e) {
    emit_error("uncertified", e.what());
    return kExitDomainFailure;
  } catch (const LimitError& e) {
    emit_error("limit_exceeded", e.what());
    return kExitDomainFailure;
  } catch (const ContractError& e) {
    emit_error("contract", e.what());
    return kExitDomainFailure;
  } catch (const std::invalid_argument& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kExitDomainFailure;
  }
}
