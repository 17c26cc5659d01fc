#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trivec/io.hpp"
#include "trivec/selftest.hpp"
#include "trivec/trivec.hpp"

namespace trivec::cli {

// Exit codes: 0 ok, 2 validation/parse error, 3 verification failure,
// 4 internal consistency error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitConsistency = 4;

inline double default_tolerance() {
  if (const char* env = std::getenv("TRIVEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
    throw validation_error("TRIVEC_TOL must be a positive number");
  }
  return kVerifyTol;
}

inline int cmd_invariants(const std::string& state_file, bool with_oracle, std::ostream& out) {
  const ThreeQubitState st = load_state(state_file);
  const TangleReport rep = tangle_report(st);
  const double tol = default_tolerance();
  double worst_ckw = 0.0;
  for (const double r : rep.ckw_residuals) worst_ckw = std::max(worst_ckw, std::abs(r));

  std::string body = "{\"tangles\":" + tangle_json(rep);
  double disagreement = 0.0;
  if (with_oracle) {
    const OracleReport orc = oracle_report(st);
    disagreement = std::max({std::abs(rep.tau_abc - orc.tau_abc),
                             std::abs(rep.tau_bc - orc.tau_bc),
                             std::abs(rep.tau_ac - orc.tau_ac),
                             std::abs(rep.tau_ab - orc.tau_ab),
                             std::abs(rep.tau_a_bc - orc.tau_a_bc),
                             std::abs(rep.tau_b_ca - orc.tau_b_ca),
                             std::abs(rep.tau_c_ab - orc.tau_c_ab)});
    body += ",\"oracle\":" + tangle_json(orc);
    body += ",\"max_disagreement\":" + jout::num(disagreement);
  }
  body += "}";
  out << body << "\n";
  if (worst_ckw > tol || disagreement > tol) return kExitVerification;
  return kExitOk;
}

inline int cmd_qvec(const std::string& state_file, int partition, std::ostream& out) {
  const ThreeQubitState st = load_state(state_file);
  const PVector p = pluecker_pvector(st, partition);
  const QVector q = to_qvector(p);
  const AlphaBeta ab = split(q);
  const VectorTriple t = extract_triple(st);
  const GaugedTriple g = fix_gauge(t);
  out << "{\"partition\":" << partition << ",\"p\":" << jout::cvec(p.v)
      << ",\"q\":" << jout::cvec(q.v) << ",\"alpha\":" << jout::cvec(ab.alpha)
      << ",\"beta\":" << jout::cvec(ab.beta) << ",\"A\":" << jout::cvec(t.A)
      << ",\"B\":" << jout::cvec(t.B) << ",\"C\":" << jout::cvec(t.C)
      << ",\"phase\":" << jout::num(g.phase) << "}\n";
  return kExitOk;
}

inline int cmd_evolve(const std::string& state_file, const std::optional<std::string>& ham_file,
                      const std::optional<std::string>& rot_file, double t,
                      const std::string& track, std::ostream& out) {
  const ThreeQubitState st = load_state(state_file);
  if (ham_file.has_value() == rot_file.has_value())
    throw validation_error("evolve needs exactly one of --ham or --rot");

  ThreeQubitState evolved = st;
  std::array<QVector, 3> qs{qvector(st, 1), qvector(st, 2), qvector(st, 3)};
  double residual = 0.0;
  Pair pair = Pair::bc;
  if (ham_file) {
    const PairHamiltonian ham = hamiltonian_from_json(load_json(*ham_file));
    pair = ham.pair();
    const EvolveResult ev = evolve_dual(st, ham, t);
    evolved = ev.state;
    qs = ev.qvectors;
    residual = ev.track_residual;
  } else {
    const RotationSpec spec = rotation_from_json(load_json(*rot_file));
    pair = spec.pair;
    const EvolveResult ev = rotate_dual(st, spec.pair, spec.plane_n, spec.plane_m, spec.angle);
    evolved = ev.state;
    qs = ev.qvectors;
    residual = ev.track_residual;
  }

  out << "{\"pair\":" << jout::str(name(pair)) << ",\"t\":" << jout::num(t);
  if (track == "state" || track == "both")
    out << ",\"state\":" << jout::cvec(evolved.amplitudes());
  if (track == "q" || track == "both")
    out << ",\"q\":[" << qvector_json(qs[0]) << "," << qvector_json(qs[1]) << ","
        << qvector_json(qs[2]) << "]";
  out << ",\"track_residual\":" << jout::num(residual) << "}\n";
  return kExitOk;
}

inline int cmd_recipe_run(const std::string& which, const std::optional<std::string>& input_file,
                          bool verify, const std::optional<std::string>& trace_file,
                          std::ostream& out) {
  Recipe recipe;
  const auto& builtins = builtin_recipes();
  if (const auto it = builtins.find(which); it != builtins.end()) {
    recipe = it->second;
  } else {
    recipe = recipe_from_json(load_json(which));
  }

  std::optional<ThreeQubitState> input;
  if (input_file) input = load_state(*input_file);
  else if (recipe.input) input = ThreeQubitState(*recipe.input);
  else throw validation_error("recipe has no declared input; pass --input");

  const RecipeTrace trace = run(recipe, *input, verify, default_tolerance());
  if (trace_file) write_file(*trace_file, trace_json(trace) + "\n");

  out << "{\"recipe\":" << jout::str(recipe.name)
      << ",\"steps\":" << (trace.records.size() - 1)
      << ",\"verified\":" << (verify ? "true" : "false") << ",\"final_state\":"
      << jout::cvec(trace.records.back().state.amplitudes());
  if (trace.final_fidelity) out << ",\"fidelity\":" << jout::num(*trace.final_fidelity);
  out << "}\n";
  return kExitOk;
}

inline int cmd_selftest(std::uint64_t seed, int count, std::ostream& out) {
  const SelftestSummary summary = run_selftest(seed, count);
  out << "{\"seed\":" << summary.seed << ",\"count\":" << summary.count << ",\"suites\":[";
  bool first = true;
  for (const SuiteResult& s : summary.suites) {
    if (!first) out << ",";
    first = false;
    out << "{\"name\":" << jout::str(s.name) << ",\"checks\":" << s.checks
        << ",\"worst_residual\":" << jout::num(s.worst_residual)
        << ",\"tolerance\":" << jout::num(s.tolerance)
        << ",\"pass\":" << (s.pass() ? "true" : "false") << "}";
  }
  out << "],\"failures\":[";
  first = true;
  for (const SuiteResult& s : summary.suites) {
    if (s.pass()) continue;
    if (!first) out << ",";
    first = false;
    out << jout::str(s.name);
  }
  out << "],\"all_pass\":" << (summary.all_pass() ? "true" : "false") << "}\n";
  return summary.all_pass() ? kExitOk : kExitVerification;
}

/// Argument-vector entry point; main() is a thin wrapper around this so
/// the whole surface is testable in-process.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"three-qubit entanglement toolkit"};
  app.require_subcommand(1);

  std::string state_file, track = "both", recipe_name;
  std::optional<std::string> ham_file, rot_file, input_file, trace_file;
  bool with_oracle = false, verify = false;
  int partition = 1;
  double t = 1.0;
  std::uint64_t seed = 42;
  int count = 1000;

  auto* inv = app.add_subcommand("invariants", "tangles and concurrences of a state");
  inv->add_option("state", state_file, "state JSON file")->required();
  inv->add_flag("--oracle", with_oracle, "also compute the density-matrix oracle");

  auto* qv = app.add_subcommand("qvec", "bivector coordinates of a state");
  qv->add_option("state", state_file, "state JSON file")->required();
  qv->add_option("--partition", partition, "qubit partition (1, 2 or 3)")
      ->check(CLI::Range(1, 3));

  auto* ev = app.add_subcommand("evolve", "evolve a state in both tracks");
  ev->add_option("state", state_file, "state JSON file")->required();
  ev->add_option("--ham", ham_file, "pair Hamiltonian JSON file");
  ev->add_option("--rot", rot_file, "single-plane rotation JSON file");
  ev->add_option("--t", t, "evolution time");
  ev->add_option("--track", track, "state | q | both")
      ->check(CLI::IsMember({"state", "q", "both"}));

  auto* rec = app.add_subcommand("recipe", "control sequences");
  auto* rec_run = rec->add_subcommand("run", "run a recipe");
  rec_run->add_option("recipe", recipe_name, "builtin name or recipe JSON file")->required();
  rec_run->add_option("--input", input_file, "input state JSON file");
  rec_run->add_flag("--verify", verify, "assert stored expectations");
  rec_run->add_option("--trace", trace_file, "write the per-step trace here");

  auto* st = app.add_subcommand("selftest", "run the invariant battery");
  st->add_option("--seed", seed, "random seed");
  st->add_option("--count", count, "number of random states")->check(CLI::NonNegativeNumber);

  try {
    std::vector<const char*> argv{"trivec"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());

    if (inv->parsed()) return cmd_invariants(state_file, with_oracle, out);
    if (qv->parsed()) return cmd_qvec(state_file, partition, out);
    if (ev->parsed()) return cmd_evolve(state_file, ham_file, rot_file, t, track, out);
    if (rec->parsed() && rec_run->parsed())
      return cmd_recipe_run(recipe_name, input_file, verify, trace_file, out);
    if (st->parsed()) return cmd_selftest(seed, count, out);
    err << "no subcommand given\n";
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const verification_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const consistency_error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace trivec::cli
