// Copyright 2026 The clockham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clockham/errors.hpp"
#include "clockham/io.hpp"
#include "clockham/revcomp.hpp"
#include "clockham/spectral.hpp"
#include "clockham/verifier.hpp"

namespace {

using clockham::CircuitHamiltonian;
using clockham::ClockedState;
using clockham::GapOptions;
using clockham::GapVerdict;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitGapViolation = 1;
constexpr int kExitInputError = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json circuit_summary(const clockham::Circuit& circuit) {
  return ordered_json{{"qubits", circuit.num_qubits},
                      {"input_bits", circuit.num_input_bits},
                      {"steps", circuit.num_steps()}};
}

ordered_json matrix_entries(const Eigen::MatrixXcd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rows.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return rows;
}

struct CommonArgs {
  std::string circuit_path;
  std::string input_bits;
  bool paper_literal = false;
  std::string format = "human";

  bool structured() const { return format == "structured"; }
  bool ancilla_checks() const { return !paper_literal; }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_circuit = true) {
  if (with_circuit) {
    cmd->add_option("-c,--circuit", args.circuit_path, "Circuit file (JSON)")->required();
    cmd->add_option("-x,--input", args.input_bits, "Input bitstring")->required();
    cmd->add_flag("--paper-literal", args.paper_literal,
                  "Check only declared input qubits (no ancilla penalties); "
                  "test slots count T+n+2");
  }
  cmd->add_option("--format", args.format, "Report format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->default_val("human");
}

void emit(const ordered_json& doc, bool structured, const std::string& human) {
  if (structured) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int cmd_build(const CommonArgs& args, bool with_matrices) {
  const clockham::Circuit circuit = clockham::parse_circuit_file(args.circuit_path);
  const CircuitHamiltonian h(circuit, args.input_bits, args.ancilla_checks());

  ordered_json doc{{"schema", 1},
                   {"command", "build"},
                   {"circuit", circuit_summary(circuit)},
                   {"input", args.input_bits},
                   {"ancilla_checks", h.include_ancilla_checks()},
                   {"input_checks", h.num_input_checks()},
                   {"dimension", h.dimension()},
                   {"test_slots", h.num_test_slots()}};
  ordered_json terms = ordered_json::array();
  for (const clockham::HamiltonianTerm& term : h.terms()) {
    ordered_json entry{{"tag", clockham::term_label(term)}};
    if (with_matrices) {
      entry["matrix"] = matrix_entries(clockham::materialize_term(h, term));
    }
    terms.push_back(entry);
  }
  doc["terms"] = terms;

  std::string human;
  human += "instance: " + std::to_string(circuit.num_qubits) + " qubits, " +
           std::to_string(circuit.num_steps()) + " steps, input " + args.input_bits + "\n";
  human += "dimension " + std::to_string(h.dimension()) + ", " + std::to_string(h.terms().size()) +
           " terms, " + std::to_string(h.num_test_slots()) + " test slots\n";
  for (const clockham::HamiltonianTerm& term : h.terms()) {
    human += "  " + clockham::term_label(term) + "\n";
  }
  emit(doc, args.structured(), human);
  return kExitOk;
}

int cmd_spectrum(const CommonArgs& args, const std::string& method, double tol, int max_iter,
                 std::uint64_t seed) {
  const clockham::Circuit circuit = clockham::parse_circuit_file(args.circuit_path);

  GapOptions opts;
  opts.include_ancilla_checks = args.ancilla_checks();
  opts.iterative.tol = tol;
  opts.iterative.max_iterations = max_iter;
  opts.iterative.seed = seed;
  if (method == "dense") {
    opts.method = GapOptions::Method::Dense;
  } else if (method == "iterative") {
    opts.method = GapOptions::Method::Iterative;
  }

  const clockham::SpectralReport report = clockham::gap_report(circuit, args.input_bits, opts);

  ordered_json doc{{"schema", 1},
                   {"command", "spectrum"},
                   {"circuit", circuit_summary(circuit)},
                   {"input", args.input_bits},
                   {"ancilla_checks", opts.include_ancilla_checks},
                   {"method", clockham::to_string(report.method)},
                   {"lambda_min", report.lambda_min},
                   {"iterations", report.iterations},
                   {"residual", report.residual},
                   {"bound", report.bound},
                   {"zero_tol", clockham::kZeroTol},
                   {"verdict", clockham::to_string(report.verdict)},
                   {"dimension", report.dimension}};

  std::string human;
  human += "lambda_min = " + fmt(report.lambda_min) + " (" + clockham::to_string(report.method) +
           ", residual " + fmt(report.residual) + ")\n";
  human += "bound 1/(2(T+1)^3) = " + fmt(report.bound) + "\n";
  human += "verdict: " + clockham::to_string(report.verdict) + "\n";
  emit(doc, args.structured(), human);
  return report.verdict == GapVerdict::Violation ? kExitGapViolation : kExitOk;
}

ClockedState resolve_proof(const std::string& proof, const CircuitHamiltonian& h) {
  if (proof == "history") {
    return clockham::history_state(h.circuit(), h.input_bits());
  }
  if (proof == "zero") {
    ClockedState psi = ClockedState::Zero(h.dimension());
    psi(0) = 1.0;
    return psi;
  }
  return clockham::parse_state_file(proof, h.dimension());
}

int cmd_verify(const CommonArgs& args, const std::string& proof, std::int64_t samples,
               std::uint64_t seed) {
  const clockham::Circuit circuit = clockham::parse_circuit_file(args.circuit_path);
  const CircuitHamiltonian h(circuit, args.input_bits, args.ancilla_checks());
  const ClockedState psi = resolve_proof(proof, h);

  const clockham::MonteCarloResult result = clockham::monte_carlo(h, psi, samples, seed);

  ordered_json histogram = ordered_json::array();
  for (const clockham::SlotTally& tally : result.slot_histogram) {
    histogram.push_back({{"y", tally.y},
                         {"slot", tally.label},
                         {"draws", tally.draws},
                         {"rejections", tally.rejections}});
  }
  ordered_json doc{{"schema", 1},
                   {"command", "verify"},
                   {"circuit", circuit_summary(circuit)},
                   {"input", args.input_bits},
                   {"proof", proof},
                   {"paper_literal", args.paper_literal},
                   {"samples", result.samples},
                   {"seed", result.seed},
                   {"test_slots", h.num_test_slots()},
                   {"exact_rejection_probability", result.exact_probability},
                   {"empirical_reject_rate", result.reject_rate},
                   {"standard_error", result.standard_error},
                   {"rejections", result.rejections},
                   {"transcript_digest", result.transcript_digest},
                   {"slot_histogram", histogram}};

  std::string human;
  human += "exact rejection probability = " + fmt(result.exact_probability) + "\n";
  human += "empirical rate = " + fmt(result.reject_rate) + " +/- " + fmt(result.standard_error) +
           " (" + std::to_string(result.rejections) + "/" + std::to_string(result.samples) +
           " rejections)\n";
  human += "digest " + result.transcript_digest + "\n";
  human += "slot histogram:\n";
  for (const clockham::SlotTally& tally : result.slot_histogram) {
    human += "  y=" + std::to_string(tally.y) + " " + tally.label + ": " +
             std::to_string(tally.draws) + " draws, " + std::to_string(tally.rejections) +
             " rejections\n";
  }
  emit(doc, args.structured(), human);
  return kExitOk;
}

int cmd_demo_revcomp(const std::string& table_path, const std::string& format) {
  const clockham::TruthTable table = clockham::parse_truth_table_file(table_path);
  const clockham::ReversibleCircuit compiled = clockham::compile_truth_table(table);

  ordered_json rows = ordered_json::array();
  std::string human;
  human += "compiled: " + std::to_string(compiled.circuit.num_qubits) + " qubits, " +
           std::to_string(compiled.circuit.num_steps()) + " steps (" + compiled.layout.note +
           ")\n";
  human += "input  f  acceptance  lambda_min      bound           verdict\n";

  for (int row = 0; row < table.rows(); ++row) {
    const std::string input = table.input_of_row(row);
    const clockham::EndToEndInstance instance = clockham::end_to_end_instance(table, input);
    const double acceptance =
        clockham::acceptance_probability(instance.compiled.circuit, input);
    rows.push_back({{"input", input},
                    {"expected", table.value(row) ? 1 : 0},
                    {"acceptance", acceptance},
                    {"lambda_min", instance.report.lambda_min},
                    {"bound", instance.report.bound},
                    {"verdict", clockham::to_string(instance.report.verdict)}});
    char line[160];
    std::snprintf(line, sizeof(line), "%-6s %d  %-10.6f  %-14.8g  %-14.8g  %s\n", input.c_str(),
                  table.value(row) ? 1 : 0, acceptance, instance.report.lambda_min,
                  instance.report.bound, clockham::to_string(instance.report.verdict).c_str());
    human += line;
  }

  ordered_json doc{{"schema", 1},
                   {"command", "demo-revcomp"},
                   {"table", {{"arity", table.arity}}},
                   {"circuit", circuit_summary(compiled.circuit)},
                   {"rows", rows}};
  emit(doc, format == "structured", human);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clock-Hamiltonian toolkit: compile circuits into penalty operators, certify "
               "their promise gap, and simulate the verification protocol"};
  app.require_subcommand(1);

  CommonArgs build_args;
  bool build_matrices = false;
  CLI::App* build = app.add_subcommand("build", "Assemble the penalty operator and dump its terms");
  add_common(build, build_args);
  build->add_flag("--matrices", build_matrices, "Include dense term matrices in the dump");

  CommonArgs spectrum_args;
  std::string spectrum_method = "auto";
  double spectrum_tol = 1e-8;
  int spectrum_max_iter = 5000;
  std::uint64_t spectrum_seed = 1;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Certify the smallest eigenvalue against the promise gap");
  add_common(spectrum, spectrum_args);
  spectrum->add_option("--method", spectrum_method, "Eigensolver")
      ->check(CLI::IsMember({"auto", "dense", "iterative"}))
      ->default_val("auto");
  spectrum->add_option("--tol", spectrum_tol, "Iterative residual tolerance")->default_val(1e-8);
  spectrum->add_option("--max-iter", spectrum_max_iter, "Iterative matvec budget")
      ->default_val(5000);
  spectrum->add_option("--seed", spectrum_seed, "Iterative start-vector seed")->default_val(1);

  CommonArgs verify_args;
  std::string verify_proof;
  std::int64_t verify_samples = 10000;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Run seeded verification protocol rounds");
  add_common(verify, verify_args);
  verify->add_option("--proof", verify_proof,
                     "Proof state: 'history', 'zero', or an amplitude file")
      ->required();
  verify->add_option("--samples", verify_samples, "Number of protocol rounds")->default_val(10000);
  verify->add_option("--seed", verify_seed, "Master seed")->default_val(1);

  CommonArgs demo_args;
  std::string demo_table;
  CLI::App* demo = app.add_subcommand(
      "demo-revcomp", "Compile a truth table and print the gap table over all inputs");
  demo->add_option("-t,--table", demo_table, "Truth-table file (JSON)")->required();
  add_common(demo, demo_args, /*with_circuit=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (build->parsed()) {
      return cmd_build(build_args, build_matrices);
    }
    if (spectrum->parsed()) {
      return cmd_spectrum(spectrum_args, spectrum_method, spectrum_tol, spectrum_max_iter,
                          spectrum_seed);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_args, verify_proof, verify_samples, verify_seed);
    }
    if (demo->parsed()) {
      return cmd_demo_revcomp(demo_table, demo_args.format);
    }
  } catch (const clockham::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const clockham::SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
