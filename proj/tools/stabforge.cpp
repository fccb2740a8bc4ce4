// stabforge command-line interface: standard forms, circuit synthesis,
// syndrome tables, simulation, round-trip verification, routing, and
// gate-count reports. Exit codes: 0 success, 1 usage error, 2 invalid
// input, 3 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabforge/codes.hpp"

using namespace stabforge;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::uint64_t pick_seed(const std::optional<std::uint64_t>& flag) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("STABFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("STABFORGE_SEED is not an integer");
    }
  }
  return 0;
}

std::string row_bits(const CheckMatrix& h, int i) {
  return "[" + h.xblock.row_str(i) + "|" + h.zblock.row_str(i) + "]";
}

std::string pauli_row_bits(const PauliString& p) {
  std::string x, z;
  for (int j = 0; j < p.num_qubits(); ++j) {
    x += p.x(j) ? '1' : '0';
    z += p.z(j) ? '1' : '0';
  }
  return "[" + x + "|" + z + "]";
}

int cmd_standard_form(const std::string& code_ref) {
  const CodeSpec spec = resolve_code(code_ref);
  const CheckMatrix hq = spec.check_matrix();
  const StandardForm sf = to_standard_form(hq);
  std::printf("code: %s [[%d,%d]]\n", spec.name.c_str(), spec.n, spec.k);
  std::printf("H_q:\n");
  for (int i = 0; i < hq.num_rows(); ++i)
    std::printf("  %s  %s\n", row_bits(hq, i).c_str(), hq.row(i).letters().c_str());
  std::printf("H_s:\n");
  for (int i = 0; i < sf.hs.num_rows(); ++i)
    std::printf("  %s  %s\n", row_bits(sf.hs, i).c_str(), sf.hs.row(i).letters().c_str());
  std::printf("r: %d\n", sf.r);
  if (sf.perm_is_identity()) {
    std::printf("permutation: identity\n");
  } else {
    std::printf("permutation:");
    for (size_t j = 0; j < sf.perm.size(); ++j)
      std::printf(" %zu<-%d", j, sf.perm[j]);
    std::printf("  (wire j carries original qubit perm[j]; 0-based)\n");
  }
  for (int i = 0; i < spec.k; ++i) {
    std::printf("X_%d: %s  %s\n", i, pauli_row_bits(sf.xlogical[i]).c_str(),
                sf.xlogical[i].letters().c_str());
    std::printf("Z_%d: %s  %s\n", i, pauli_row_bits(sf.zlogical[i]).c_str(),
                sf.zlogical[i].letters().c_str());
  }
  return 0;
}

int cmd_synth(const std::string& code_ref, bool encoder, bool syndrome, bool optimize) {
  const CodeSpec spec = resolve_code(code_ref);
  Circuit circuit;
  std::set<int> zero_init;
  if (encoder) {
    const StandardForm sf = to_standard_form(spec.check_matrix());
    circuit = synth_encoder(sf);
    for (int q = 0; q < spec.n - spec.k; ++q) zero_init.insert(q);
  } else if (syndrome) {
    const StandardForm sf = to_standard_form(spec.check_matrix());
    std::vector<PauliString> gens;
    for (const PauliString& g : spec.generators) gens.push_back(permute_pauli(g, sf.perm));
    circuit = synth_syndrome(gens, spec.n);
    for (int q = spec.n; q < circuit.nqubits; ++q) zero_init.insert(q);
  }
  if (optimize) circuit = optimize_trivial_z(circuit, zero_init);
  std::fputs(serialize(circuit).c_str(), stdout);
  return 0;
}

int cmd_table(const std::string& code_ref, bool as_json, bool machine) {
  const CompiledCode code = compile_code(resolve_code(code_ref));
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["code"] = code.spec.name;
    doc["generators"] = json::array();
    for (const PauliString& g : code.table_generators) doc["generators"].push_back(g.letters());
    doc["rows"] = json::array();
    for (const SyndromeEntry& entry : code.table.entries)
      doc["rows"].push_back({{"error", entry.error.letters()},
                             {"syndrome", syndrome_bits_str(entry.bits)},
                             {"decimal", entry.decimal}});
    std::printf("%s\n", doc.dump(2).c_str());
  } else if (machine) {
    std::fputs(format_table_machine(code.table).c_str(), stdout);
  } else {
    std::fputs(format_table(code.table).c_str(), stdout);
  }
  return 0;
}

int cmd_simulate(const std::string& circuit_path, const std::string& init,
                 const std::optional<std::uint64_t>& seed, double tol) {
  const Circuit c = parse_circuit(read_file(circuit_path));
  std::string bits = init;
  if (bits.empty()) bits.assign(static_cast<size_t>(c.nqubits), '0');
  const RunResult res = run(c, init_basis(c.nqubits, bits), pick_seed(seed), tol);
  std::fputs(dump_state(res.final).c_str(), stdout);
  if (c.ncbits > 0) {
    std::string cbits;
    for (int b : res.cbits) cbits += b ? '1' : '0';
    std::printf("cbits: %s\n", cbits.c_str());
    for (const MeasurementRecord& rec : res.transcript)
      std::printf("measure q%d -> c%d: p1=%.12f outcome=%d%s\n", rec.qubit, rec.cbit, rec.p_one,
                  rec.outcome, rec.deterministic ? "" : " (sampled)");
  }
  return 0;
}

json report_to_json(const RoundTripReport& rep) {
  return {{"code", rep.code},
          {"logical_input", rep.logical_input},
          {"error", rep.injected.letters()},
          {"syndrome", syndrome_bits_str(rep.syndrome)},
          {"decimal", rep.syndrome_decimal},
          {"deterministic", rep.syndrome_deterministic},
          {"uncorrectable", rep.uncorrectable},
          {"correction", rep.correction},
          {"fidelity", rep.fidelity},
          {"pass", rep.pass}};
}

int cmd_verify(const std::string& code_ref, bool exhaustive,
               const std::optional<std::uint64_t>& seed_flag, double tol, bool as_json) {
  const CompiledCode code = compile_code(resolve_code(code_ref));
  const std::uint64_t seed = pick_seed(seed_flag);

  std::vector<PauliString> errors = {PauliString(code.spec.n)};
  if (exhaustive) {
    for (int q = 0; q < code.spec.n; ++q)
      for (PauliLetter letter : error_letters(code.spec.error_class))
        errors.push_back(PauliString::single(code.spec.n, q, letter));
  }
  std::vector<RoundTripReport> reports;
  for (int input = 0; input < (1 << code.spec.k); ++input) {
    std::string bits;
    for (int b = code.spec.k - 1; b >= 0; --b) bits += ((input >> b) & 1) ? '1' : '0';
    for (const PauliString& error : errors)
      reports.push_back(verify_roundtrip(code, bits, error, seed, tol));
  }

  int failures = 0;
  for (const RoundTripReport& rep : reports)
    if (!rep.pass) ++failures;

  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["code"] = code.spec.name;
    doc["cases"] = json::array();
    for (const RoundTripReport& rep : reports) doc["cases"].push_back(report_to_json(rep));
    doc["total"] = reports.size();
    doc["failures"] = failures;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("input  error%*s  syndrome  correction%*s  fidelity        verdict\n",
                code.spec.n > 5 ? code.spec.n - 5 : 0, "", code.spec.n > 10 ? code.spec.n - 10 : 0,
                "");
    for (const RoundTripReport& rep : reports) {
      std::printf("%-5s  %-*s  %-8s  %-*s  %.12f  %s\n", rep.logical_input.c_str(),
                  code.spec.n > 5 ? code.spec.n : 5, rep.injected.letters().c_str(),
                  syndrome_bits_str(rep.syndrome).c_str(), code.spec.n > 10 ? code.spec.n : 10,
                  rep.correction.c_str(), rep.fidelity,
                  rep.pass ? "pass" : (rep.uncorrectable ? "uncorrectable" : "FAIL"));
    }
    std::printf("%zu cases, %d failure(s)\n", reports.size(), failures);
  }
  return failures == 0 ? 0 : 3;
}

int cmd_route(const std::string& circuit_path, const std::string& layout_path, bool decompose) {
  const Circuit c = parse_circuit(read_file(circuit_path));
  const auto [graph, layout] = parse_layout(read_file(layout_path));
  const RoutedResult routed = route(c, graph, layout);

  Circuit out = routed.circuit;
  if (decompose) {
    // Rewrite onto fixed wires (wire = initial site occupant) so the CX
    // expansion of each SWAP is literal, then expand.
    out = decompose_swaps(to_physical(routed.circuit, layout));
  }
  std::fputs(serialize(out).c_str(), stdout);
  std::printf("# swaps: %d\n", routed.swap_count);
  std::printf("# final layout:");
  for (size_t q = 0; q < routed.final_layout.site_of.size(); ++q)
    std::printf(" q%zu@%d", q, routed.final_layout.site_of[q]);
  std::printf("\n");
  if (decompose)
    std::printf("# wires relabeled to initial sites; swap expansion uses 3 CX per swap\n");
  if (!is_compliant(routed.circuit, graph, layout))
    throw ValidationError("internal: routed circuit failed the compliance check");
  return 0;
}

int cmd_report(const std::string& circuit_path, bool as_json) {
  const Circuit c = parse_circuit(read_file(circuit_path));
  const auto counts = gate_counts(c);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["qubits"] = c.nqubits;
    doc["cbits"] = c.ncbits;
    for (const auto& [kind, count] : counts) doc["counts"][kind_name(kind)] = count;
    doc["total"] = c.gates.size();
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("qubits: %d\ncbits:  %d\n", c.nqubits, c.ncbits);
    for (const auto& [kind, count] : counts)
      std::printf("%-5s %d\n", kind_name(kind).c_str(), count);
    std::printf("total %zu\n", c.gates.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer-code compiler and verifier"};
  app.require_subcommand(1);

  std::string code_ref, circuit_path, layout_path, init_bits;
  std::optional<std::uint64_t> seed;
  double tolerance = kDefaultTolerance;
  bool flag_encoder = false, flag_syndrome = false, flag_optimize = false;
  bool flag_json = false, flag_machine = false, flag_exhaustive = false, flag_decompose = false;

  auto* sf = app.add_subcommand("standard-form", "print H_q, H_s, rank, permutation, logicals");
  sf->add_option("code", code_ref, "code file or builtin:<name>")->required();

  auto* synth = app.add_subcommand("synth", "emit an encoder or syndrome circuit");
  synth->add_option("code", code_ref, "code file or builtin:<name>")->required();
  synth->add_flag("--encoder", flag_encoder, "synthesize the encoding circuit");
  synth->add_flag("--syndrome", flag_syndrome, "synthesize the syndrome-measurement circuit");
  synth->add_flag("--optimize", flag_optimize, "drop Z/CZ gates acting on untouched |0> qubits");

  auto* table = app.add_subcommand("table", "print the syndrome lookup table");
  table->add_option("code", code_ref, "code file or builtin:<name>")->required();
  table->add_flag("--json", flag_json, "JSON output");
  table->add_flag("--machine", flag_machine, "one machine-readable row per line");

  auto* simulate = app.add_subcommand("simulate", "run a circuit file on a basis state");
  simulate->add_option("circuit", circuit_path, "circuit file")->required();
  simulate->add_option("--init", init_bits, "initial basis state bits (default all zeros)");
  simulate->add_option("--seed", seed, "measurement sampling seed (default $STABFORGE_SEED or 0)");
  simulate->add_option("--tolerance", tolerance, "deterministic-measurement tolerance");

  auto* verify = app.add_subcommand("verify", "encode/corrupt/measure/correct round trips");
  verify->add_option("code", code_ref, "code file or builtin:<name>")->required();
  verify->add_flag("--exhaustive", flag_exhaustive, "all single-qubit errors in the code's class");
  verify->add_option("--seed", seed, "measurement sampling seed");
  verify->add_option("--tolerance", tolerance, "fidelity and determinism tolerance");
  verify->add_flag("--json", flag_json, "JSON output");

  auto* route_cmd = app.add_subcommand("route", "insert swaps for nearest-neighbor compliance");
  route_cmd->add_option("circuit", circuit_path, "circuit file")->required();
  route_cmd->add_option("--layout", layout_path, "layout file (grid + placements)")->required();
  route_cmd->add_flag("--decompose", flag_decompose, "expand each SWAP into 3 CX");

  auto* report = app.add_subcommand("report", "gate counts for a circuit file");
  report->add_option("circuit", circuit_path, "circuit file")->required();
  report->add_flag("--json", flag_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sf->parsed()) return cmd_standard_form(code_ref);
    if (synth->parsed()) {
      if (flag_encoder == flag_syndrome)
        throw CLI::ValidationError("synth", "pass exactly one of --encoder or --syndrome");
      return cmd_synth(code_ref, flag_encoder, flag_syndrome, flag_optimize);
    }
    if (table->parsed()) return cmd_table(code_ref, flag_json, flag_machine);
    if (simulate->parsed()) return cmd_simulate(circuit_path, init_bits, seed, tolerance);
    if (verify->parsed())
      return cmd_verify(code_ref, flag_exhaustive, seed, tolerance, flag_json);
    if (route_cmd->parsed()) return cmd_route(circuit_path, layout_path, flag_decompose);
    if (report->parsed()) return cmd_report(circuit_path, flag_json);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
