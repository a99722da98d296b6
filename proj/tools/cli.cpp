// Copyright 2026 The pcartan Authors
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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcartan/compiler.hpp"
#include "pcartan/matrix_io.hpp"

namespace pcartan::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + out_path + "'");
  f << text << "\n";
}

ToleranceConfig tolerances(const std::optional<double>& equivalence) {
  return equivalence ? ToleranceConfig::with_equivalence(*equivalence) : ToleranceConfig{};
}

void print_counts(const OpticalCircuit& c, std::ostream& err) {
  const CountReport r = element_count(c);
  err << "elements: " << r.total << " (bound " << r.bound << ";";
  for (const auto& [kind, n] : r.by_kind) err << " " << to_string(kind) << " " << n;
  err << ")\n";
  for (const auto& [name, delta] : r.baseline_comparisons) {
    err << "baseline " << name << ": " << (r.total + delta) << " -> " << r.total << " (delta "
        << delta << ")\n";
  }
}

void print_report(const VerificationReport& r, std::ostream& err) {
  err << "verification: " << (r.passed ? "passed" : "FAILED") << " (distance " << r.distance
      << ", global phase " << r.global_phase << ")\n";
}

json report_json(const VerificationReport& r) {
  json j;
  j["distance"] = r.distance;
  j["global_phase"] = r.global_phase;
  j["passed"] = r.passed;
  j["element_total"] = r.element_total;
  return j;
}

CompileResult compile_any(const ComplexMatrix& u, const CompileOptions& opts) {
  if (u.rows() == 8) return compile_m4(u, opts);
  return compile(u, opts);
}

struct CompileFlags {
  std::string matrix;
  std::string convention = "sp";
  bool optimize = false;
  bool verify = false;
  bool emit_phase = false;
  std::optional<double> tolerance;
  std::string out;
};

int cmd_compile(const CompileFlags& f, std::ostream& out, std::ostream& err) {
  CompileOptions opts;
  opts.convention = parse_convention(f.convention);
  opts.optimize = f.optimize;
  opts.verify = true;
  opts.emit_global_phase_ps = f.emit_phase;
  opts.tolerances = tolerances(f.tolerance);
  const ComplexMatrix u = matrix_from_json(read_file(f.matrix));
  const CompileResult r = compile_any(u, opts);
  emit(serialize(r.circuit), f.out, out);
  print_counts(r.circuit, err);
  print_report(*r.report, err);
  return (f.verify && !r.report->passed) ? kVerificationFailed : kSuccess;
}

int cmd_simulate(const std::string& circuit, const std::string& out_path, std::ostream& out) {
  const OpticalCircuit c = deserialize(read_file(circuit));
  emit(matrix_to_json(simulate(c)), out_path, out);
  return kSuccess;
}

int cmd_verify(const std::string& circuit, const std::string& matrix,
               const std::optional<double>& tolerance, std::ostream& out, std::ostream& err) {
  const OpticalCircuit c = deserialize(read_file(circuit));
  const ComplexMatrix u = matrix_from_json(read_file(matrix));
  const VerificationReport r = verify(c, u, tolerances(tolerance));
  out << report_json(r).dump(2) << "\n";
  print_report(r, err);
  return r.passed ? kSuccess : kVerificationFailed;
}

int cmd_target(const std::string& name, const std::string& convention_text, bool do_compile,
               std::ostream& out, std::ostream& err) {
  const BuiltinTarget t = parse_builtin_target(name);
  const DofConvention convention = parse_convention(convention_text);
  const Matrix4c u = builtin_target(t, convention);
  if (!do_compile) {
    out << matrix_to_json(u) << "\n";
    return kSuccess;
  }
  CompileOptions opts;
  opts.convention = convention;
  opts.optimize = true;
  const CompileResult r = compile(u, opts);
  json doc;
  doc["matrix"] = json::parse(matrix_to_json(u));
  doc["circuit"] = json::parse(serialize(r.circuit));
  out << doc.dump(2) << "\n";
  print_counts(r.circuit, err);
  print_report(*r.report, err);
  const auto refs = reference_decompositions();
  const auto it = refs.find(std::string(to_string(t)) + "_" + std::string(to_string(convention)));
  if (it != refs.end()) {
    err << "hand-built circuit for " << name << " (" << to_string(convention)
        << "): " << it->second.hand_count << " elements; compiled: " << r.circuit.elements.size()
        << "\n";
  }
  return r.report->passed ? kSuccess : kVerificationFailed;
}

int cmd_random(int dim, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  if (dim != 4 && dim != 8) throw InvalidInput("--dim must be 4 or 8, got " + std::to_string(dim));
  emit(matrix_to_json(haar_random_unitary(dim, seed)), out_path, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cartan-decomposition compiler for single-photon polarization-spatial unitaries",
               args.empty() ? "pcartan" : args.front()};
  app.require_subcommand(1);

  CompileFlags cf;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a 4x4 or 8x8 unitary to optics");
  compile_cmd->add_option("--matrix", cf.matrix, "Matrix JSON file")->required();
  compile_cmd->add_option("--convention", cf.convention, "Basis convention: ps or sp")
      ->check(CLI::IsMember({"ps", "sp"}));
  compile_cmd->add_flag("--optimize", cf.optimize, "Shortest chains plus peephole pass");
  compile_cmd->add_flag("--verify", cf.verify, "Exit 1 if the circuit does not verify");
  compile_cmd->add_flag("--emit-phase-ps", cf.emit_phase, "Realize the global phase as well");
  compile_cmd->add_option("--tolerance", cf.tolerance, "Equivalence tolerance")
      ->check(CLI::PositiveNumber);
  compile_cmd->add_option("--out", cf.out, "Output file (default: stdout)");

  std::string circuit_path, matrix_path, out_path, name, convention = "sp";
  std::optional<double> tolerance;
  bool do_compile = false;
  int dim = 0;
  std::uint64_t seed = 0;

  auto* simulate_cmd = app.add_subcommand("simulate", "Multiply out a circuit");
  simulate_cmd->add_option("--circuit", circuit_path, "Circuit JSON file")->required();
  simulate_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Compare a circuit against a matrix");
  verify_cmd->add_option("--circuit", circuit_path, "Circuit JSON file")->required();
  verify_cmd->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  verify_cmd->add_option("--tolerance", tolerance, "Equivalence tolerance")
      ->check(CLI::PositiveNumber);

  auto* target_cmd = app.add_subcommand("target", "Emit a built-in target matrix");
  target_cmd->add_option("--name", name, "walk or qft")->required();
  target_cmd->add_option("--convention", convention, "Basis convention: ps or sp")
      ->check(CLI::IsMember({"ps", "sp"}));
  target_cmd->add_flag("--compile", do_compile, "Also compile and optimize it");

  auto* random_cmd = app.add_subcommand("random", "Emit a Haar-random unitary");
  random_cmd->add_option("--dim", dim, "4 or 8")->required();
  random_cmd->add_option("--seed", seed, "RNG seed")->required();
  random_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (compile_cmd->parsed()) return cmd_compile(cf, out, err);
    if (simulate_cmd->parsed()) return cmd_simulate(circuit_path, out_path, out);
    if (verify_cmd->parsed()) return cmd_verify(circuit_path, matrix_path, tolerance, out, err);
    if (target_cmd->parsed()) return cmd_target(name, convention, do_compile, out, err);
    if (random_cmd->parsed()) return cmd_random(dim, seed, out_path, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kInvalidInput;
}

}  // namespace pcartan::cli
