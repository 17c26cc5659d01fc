#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trivec/oracle.hpp"
#include "trivec/recipes.hpp"
#include "trivec/tangles.hpp"

namespace trivec {

using json = nlohmann::json;

// ---------- writing ----------
// Output JSON is assembled by hand so floats are always printed with 17
// significant digits (round-trip exact) and field order is fixed, making
// seeded runs byte-identical.

namespace jout {

inline std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

inline std::string num(int x) { return std::to_string(x); }

inline std::string pair(const cplx& z) { return "[" + num(z.real()) + "," + num(z.imag()) + "]"; }

template <typename Derived>
std::string cvec(const Eigen::MatrixBase<Derived>& v) {
  std::string s = "[";
  for (int n = 0; n < v.size(); ++n) {
    if (n) s += ",";
    s += pair(v[n]);
  }
  return s + "]";
}

template <typename Derived>
std::string rvec(const Eigen::MatrixBase<Derived>& v) {
  std::string s = "[";
  for (int n = 0; n < v.size(); ++n) {
    if (n) s += ",";
    s += num(double(v[n]));
  }
  return s + "]";
}

inline std::string str(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace jout

inline std::string state_json(const Vec8c& amps) {
  return "{\"amplitudes\":" + jout::cvec(amps) + "}";
}

inline std::string qvector_json(const QVector& q) {
  return "{\"partition\":" + std::to_string(q.partition) + ",\"q\":" + jout::cvec(q.v) + "}";
}

template <typename Report>
std::string tangle_json(const Report& r) {
  std::ostringstream os;
  os << "{\"tau_abc\":" << jout::num(r.tau_abc) << ",\"tau_bc\":" << jout::num(r.tau_bc)
     << ",\"tau_ac\":" << jout::num(r.tau_ac) << ",\"tau_ab\":" << jout::num(r.tau_ab)
     << ",\"tau_a_bc\":" << jout::num(r.tau_a_bc) << ",\"tau_b_ca\":" << jout::num(r.tau_b_ca)
     << ",\"tau_c_ab\":" << jout::num(r.tau_c_ab) << ",\"ckw_residuals\":["
     << jout::num(r.ckw_residuals[0]) << "," << jout::num(r.ckw_residuals[1]) << ","
     << jout::num(r.ckw_residuals[2]) << "]}";
  return os.str();
}

inline std::string trace_json(const RecipeTrace& trace) {
  std::ostringstream os;
  os << "{\"recipe\":" << jout::str(trace.name) << ",\"records\":[";
  bool first = true;
  for (const StepRecord& rec : trace.records) {
    if (!first) os << ",";
    first = false;
    os << "{\"step\":" << rec.step << ",\"state\":" << jout::cvec(rec.state.amplitudes())
       << ",\"q\":[" << qvector_json(rec.qvectors[0]) << "," << qvector_json(rec.qvectors[1])
       << "," << qvector_json(rec.qvectors[2]) << "],\"tangles\":" << tangle_json(rec.tangles)
       << "}";
  }
  os << "]";
  if (trace.final_fidelity) os << ",\"fidelity\":" << jout::num(*trace.final_fidelity);
  os << "}";
  return os.str();
}

// ---------- parsing ----------

namespace detail {

inline json parse_with_context(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // recover the line from the byte offset for a usable message
    std::size_t line = 1;
    for (std::size_t n = 0; n < e.byte && n < text.size(); ++n)
      if (text[n] == '\n') ++line;
    throw validation_error(origin + ":" + std::to_string(line) + ": " + e.what());
  }
}

inline cplx complex_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw validation_error(what + ": complex entries must be [re, im] pairs");
  const cplx z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw validation_error(what + ": non-finite entry");
  return z;
}

inline Pair pair_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "bc") return Pair::bc;
  if (s == "ca") return Pair::ca;
  if (s == "ab") return Pair::ab;
  throw validation_error("pair must be one of \"bc\", \"ca\", \"ab\"");
}

inline Qubit qubit_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "a") return Qubit::a;
  if (s == "b") return Qubit::b;
  if (s == "c") return Qubit::c;
  throw validation_error("qubit must be one of \"a\", \"b\", \"c\"");
}

}  // namespace detail

inline Vec8c amplitudes_from_json(const json& j) {
  if (!j.is_object() || !j.contains("amplitudes"))
    throw validation_error("state file must be an object with an \"amplitudes\" array");
  const json& arr = j["amplitudes"];
  if (!arr.is_array() || arr.size() != 8)
    throw validation_error("\"amplitudes\" must hold exactly 8 [re, im] pairs");
  Vec8c amps;
  for (int n = 0; n < 8; ++n) amps[n] = detail::complex_from(arr[n], "amplitudes");
  return amps;
}

inline ThreeQubitState state_from_json(const json& j) {
  return ThreeQubitState(amplitudes_from_json(j));
}

inline PairHamiltonian hamiltonian_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pair") || !j.contains("coeffs"))
    throw validation_error("hamiltonian file needs \"pair\" and \"coeffs\"");
  const Pair p = detail::pair_from(j["pair"]);
  std::map<std::string, double> coeffs;
  for (const auto& [key, value] : j["coeffs"].items()) {
    if (!value.is_number()) throw validation_error("coefficient of '" + key + "' must be a number");
    pauli_pair_op(key);  // validates the label
    coeffs[key] = value.get<double>();
  }
  return {p, coeffs};
}

struct RotationSpec {
  Pair pair;
  int plane_n, plane_m;
  double angle;
};

inline RotationSpec rotation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pair") || !j.contains("plane") || !j.contains("angle"))
    throw validation_error("rotation file needs \"pair\", \"plane\" and \"angle\"");
  const json& pl = j["plane"];
  if (!pl.is_array() || pl.size() != 2)
    throw validation_error("\"plane\" must be a pair of axis indices in 1..6");
  RotationSpec spec{detail::pair_from(j["pair"]), pl[0].get<int>(), pl[1].get<int>(),
                    j["angle"].get<double>()};
  if (spec.plane_n < 1 || spec.plane_n > 6 || spec.plane_m < 1 || spec.plane_m > 6 ||
      spec.plane_n == spec.plane_m)
    throw validation_error("\"plane\" must name two distinct axes in 1..6");
  if (!std::isfinite(spec.angle)) throw validation_error("rotation angle must be finite");
  return spec;
}

inline ControlStep step_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "coupling")
    return coupling_step(detail::pair_from(j.at("pair")), j.at("label").get<std::string>(),
                         j.at("half_angle").get<double>());
  if (kind == "local") {
    const std::string axis = j.at("axis").get<std::string>();
    if (axis.size() != 1) throw validation_error("axis must be a single letter x, y or z");
    return local_step(detail::qubit_from(j.at("qubit")), axis[0], j.at("angle").get<double>());
  }
  if (kind == "global_phase") return phase_step(j.at("phase").get<double>());
  throw validation_error("unknown step kind '" + kind + "'");
}

inline std::string step_json(const ControlStep& s) {
  switch (s.kind) {
    case StepKind::coupling:
      return "{\"kind\":\"coupling\",\"pair\":" + jout::str(name(s.pair)) +
             ",\"label\":" + jout::str(s.label) + ",\"half_angle\":" + jout::num(s.half_angle) +
             "}";
    case StepKind::local:
      return "{\"kind\":\"local\",\"qubit\":" + jout::str(name(s.qubit)) + ",\"axis\":" +
             jout::str(std::string(1, s.axis)) + ",\"angle\":" + jout::num(s.angle) + "}";
    default:
      return "{\"kind\":\"global_phase\",\"phase\":" + jout::num(s.phase) + "}";
  }
}

inline Recipe recipe_from_json(const json& j) {
  Recipe r;
  r.name = j.value("name", "unnamed");
  if (!j.contains("steps") || !j["steps"].is_array())
    throw validation_error("recipe file needs a \"steps\" array");
  for (const json& js : j["steps"]) r.steps.push_back(step_from_json(js));
  if (j.contains("input")) r.input = amplitudes_from_json(json{{"amplitudes", j["input"]}});
  if (j.contains("target")) r.target = amplitudes_from_json(json{{"amplitudes", j["target"]}});
  if (j.contains("expect")) {
    for (const json& je : j["expect"]) {
      Expectation e;
      const int step = je.at("step").get<int>();
      if (step < 1 || step > int(r.steps.size()))
        throw validation_error("expectation refers to step " + std::to_string(step) +
                               " outside the recipe");
      if (je.contains("state")) {
        e.state = amplitudes_from_json(json{{"amplitudes", je["state"]}});
        e.up_to_phase = je.value("up_to_phase", false);
      }
      if (je.contains("qvecs"))
        for (const json& jq : je["qvecs"]) {
          const int s = jq.at("partition").get<int>();
          if (s < 1 || s > 3) throw validation_error("q-vector partition must be 1, 2 or 3");
          const json& arr = jq.at("q");
          if (!arr.is_array() || arr.size() != 6)
            throw validation_error("\"q\" must hold exactly 6 [re, im] pairs");
          Vec6c v;
          for (int n = 0; n < 6; ++n) v[n] = detail::complex_from(arr[n], "q");
          e.qvectors.push_back({s, v});
        }
      if (je.contains("tangles"))
        for (const auto& [key, value] : je["tangles"].items())
          e.tangles[key] = value.get<double>();
      r.expect[step] = e;
    }
  }
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json load_json(const std::string& path) {
  return detail::parse_with_context(read_file(path), path);
}

inline ThreeQubitState load_state(const std::string& path) {
  return state_from_json(load_json(path));
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << contents;
}

}  // namespace trivec
