// Copyright 2026 The tsvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsvf/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsvf/error.hpp"
#include "tsvf/expression.hpp"
#include "tsvf/format.hpp"
#include "tsvf/json_io.hpp"
#include "tsvf/scenarios.hpp"

namespace tsvf::cli {

namespace {

struct RunArgs {
  std::string target;
  std::string scenario;
  std::string file;
  std::string format = "table";
  double tolerance = kZeroTolerance;
};

struct CheckArgs {
  std::string file;
  int particles = 3;
  std::string format = "table";
  double tolerance = kZeroTolerance;
};

bool valid_tolerance(double tol) { return std::isfinite(tol) && tol > 0.0; }

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  if (!valid_tolerance(args.tolerance)) {
    err << "error: tolerance must be a positive finite number\n";
    return kExitInvalidInput;
  }
  const int given = !args.target.empty() + !args.scenario.empty() + !args.file.empty();
  if (given != 1) {
    err << "error: give exactly one of a scenario name, --scenario or --file\n";
    return kExitInvalidInput;
  }

  Scenario scenario;
  try {
    if (!args.scenario.empty()) {
      scenario = find_builtin(args.scenario);
    } else if (!args.file.empty()) {
      scenario = io::load_scenario_file(args.file);
    } else {
      bool builtin = false;
      for (const Scenario& s : builtin_scenarios()) builtin = builtin || s.name == args.target;
      scenario = builtin ? find_builtin(args.target) : io::load_scenario_file(args.target);
    }
  } catch (const io::SchemaError& e) {
    err << "error: invalid scenario: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const ScenarioReport report = run_scenario(scenario, RunOptions{args.tolerance});
  if (args.format == "json") {
    out << io::report_to_json(report).dump(2) << "\n";
  } else {
    format::write_table(out, report);
  }
  return report.has_errors() ? kExitQueryErrors : kExitOk;
}

void write_check_table(std::ostream& out, const CheckReport& report) {
  out << "particles: " << report.n_particles << "   tolerance: " << report.tolerance << "\n";
  for (std::size_t i = 0; i < report.operators.size(); ++i) {
    const OperatorCheck& c = report.operators[i];
    out << "[" << i << "] " << c.expression << "\n"
        << "    is_projector        " << (c.is_projector ? "true" : "false") << "\n"
        << "    hermitian           " << (c.hermitian ? "true" : "false") << "\n"
        << "    hermiticity_defect  " << format::real_text(c.hermiticity_defect) << "\n"
        << "    idempotency_defect  " << format::real_text(c.idempotency_defect) << "\n";
  }
  for (const PairCheck& p : report.pairs) {
    out << "orthogonal [" << p.first << "] [" << p.second << "]  "
        << (p.orthogonal ? "true" : "false") << "\n";
  }
  out << "resolution_of_identity  " << (report.resolution_of_identity ? "true" : "false") << "\n";
}

io::Json check_to_json(const CheckReport& report) {
  io::Json j;
  j["particles"] = report.n_particles;
  j["tolerance"] = report.tolerance;
  io::Json ops = io::Json::array();
  for (const OperatorCheck& c : report.operators) {
    ops.push_back(io::Json{{"expression", c.expression},
                           {"is_projector", c.is_projector},
                           {"hermitian", c.hermitian},
                           {"hermiticity_defect", c.hermiticity_defect},
                           {"idempotency_defect", c.idempotency_defect}});
  }
  j["operators"] = ops;
  io::Json pairs = io::Json::array();
  for (const PairCheck& p : report.pairs) {
    pairs.push_back(io::Json{{"first", p.first}, {"second", p.second}, {"orthogonal", p.orthogonal}});
  }
  j["pairwise_orthogonal"] = pairs;
  j["resolution_of_identity"] = report.resolution_of_identity;
  return j;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  if (!valid_tolerance(args.tolerance)) {
    err << "error: tolerance must be a positive finite number\n";
    return kExitInvalidInput;
  }
  if (args.particles < 1 || args.particles > kMaxParticles) {
    err << "error: --particles must be within 1.." << kMaxParticles << "\n";
    return kExitInvalidInput;
  }
  std::ifstream in(args.file);
  if (!in) {
    err << "error: cannot read '" << args.file << "'\n";
    return kExitInvalidInput;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  std::vector<HamiltonianSpec> specs;
  try {
    specs = parse_operator_list(buffer.str(), args.particles);
  } catch (const ParseError& e) {
    err << "parse error: " << args.file << ": " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const CheckReport report = check_operators(specs, args.tolerance);
  if (args.format == "json") {
    out << check_to_json(report).dump(2) << "\n";
  } else {
    write_check_table(out, report);
  }
  return kExitOk;
}

}  // namespace

CheckReport check_operators(const std::vector<HamiltonianSpec>& specs, double tol) {
  CheckReport report;
  report.tolerance = tol;
  if (specs.empty()) return report;
  report.n_particles = specs.front().n_particles;

  std::vector<Operator> ops;
  for (const HamiltonianSpec& spec : specs) {
    const Operator op = build_hamiltonian(spec);
    OperatorCheck c;
    c.expression = describe(spec);
    c.hermiticity_defect = hermiticity_defect(op);
    c.idempotency_defect = idempotency_defect(op);
    c.hermitian = c.hermiticity_defect <= tol;
    c.is_projector = is_projector(op, tol);
    report.operators.push_back(std::move(c));
    ops.push_back(op);
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      report.pairs.push_back({i, j, are_orthogonal(ops[i], ops[j], tol)});
    }
  }
  report.resolution_of_identity = is_resolution_of_identity(ops, tol);
  return report;
}

void cmd_list(std::ostream& out) {
  std::size_t width = 0;
  for (const Scenario& s : builtin_scenarios()) width = std::max(width, s.name.size());
  for (const Scenario& s : builtin_scenarios()) {
    out << s.name << std::string(width - s.name.size() + 2, ' ') << s.summary << "\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pre- and postselected two-box systems: ABL amplitudes, weak values, "
               "correlation projectors"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List builtin scenarios");

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a builtin scenario or a scenario file");
  run_cmd->add_option("target", run_args.target, "Builtin scenario name or scenario file path");
  run_cmd->add_option("--scenario", run_args.scenario, "Builtin scenario name");
  run_cmd->add_option("--file", run_args.file, "Scenario JSON file");
  run_cmd->add_option("--format", run_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  run_cmd->add_option("--tolerance", run_args.tolerance, "Zero threshold");

  CheckArgs check_args;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Projector, orthogonality and completeness checks");
  check_cmd->add_option("file", check_args.file, "File with one operator expression per line")
      ->required();
  check_cmd->add_option("--particles", check_args.particles, "Particle count");
  check_cmd->add_option("--format", check_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  check_cmd->add_option("--tolerance", check_args.tolerance, "Zero threshold");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  if (app.got_subcommand("list")) {
    cmd_list(out);
    return kExitOk;
  }
  if (app.got_subcommand(run_cmd)) return cmd_run(run_args, out, err);
  return cmd_check(check_args, out, err);
}

}  // namespace tsvf::cli
