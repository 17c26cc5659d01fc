#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trivec/so6.hpp"
#include "trivec/tangles.hpp"

namespace trivec {

enum class StepKind { coupling, local, global_phase };

/// One declarative control operation.
///   coupling:     U = exp(i * half_angle * sigma_label) on the ordered pair
///   local:        U = exp(i * angle * sigma_axis) on one qubit
///   global_phase: multiply the state by exp(i * phase)
struct ControlStep {
  StepKind kind;
  Pair pair = Pair::bc;
  std::string label;
  double half_angle = 0.0;
  Qubit qubit = Qubit::a;
  char axis = 'x';
  double angle = 0.0;
  double phase = 0.0;
};

inline ControlStep coupling_step(Pair pair, const std::string& label, double half_angle) {
  ControlStep s;
  s.kind = StepKind::coupling;
  s.pair = pair;
  s.label = label;
  s.half_angle = half_angle;
  return s;
}

inline ControlStep local_step(Qubit qubit, char axis, double angle) {
  ControlStep s;
  s.kind = StepKind::local;
  s.qubit = qubit;
  s.axis = axis;
  s.angle = angle;
  return s;
}

inline ControlStep phase_step(double phase) {
  ControlStep s;
  s.kind = StepKind::global_phase;
  s.phase = phase;
  return s;
}

inline void validate(const ControlStep& s) {
  if (!std::isfinite(s.half_angle) || !std::isfinite(s.angle) || !std::isfinite(s.phase))
    throw validation_error("control step angles must be finite");
  if (s.kind == StepKind::coupling) pauli_pair_op(s.label);  // throws on bad label
  if (s.kind == StepKind::local) pauli(s.axis);
}

/// exp(i*theta*sigma) in closed form; any Pauli word squares to identity.
inline Mat4c coupling_unitary(const std::string& label, double half_angle) {
  return std::cos(half_angle) * Mat4c::Identity() +
         kI * std::sin(half_angle) * pauli_pair_op(label);
}

inline Mat2c local_unitary(char axis, double angle) {
  return std::cos(angle) * Mat2c::Identity() + kI * std::sin(angle) * pauli(axis);
}

/// Full 8x8 operator of one step (phase steps included as scalar factors).
inline Mat8c step_operator(const ControlStep& s) {
  switch (s.kind) {
    case StepKind::coupling: return embed_pair(coupling_unitary(s.label, s.half_angle), s.pair);
    case StepKind::local: return embed_single(local_unitary(s.axis, s.angle), s.qubit);
    default: return Mat8c(std::exp(cplx(0.0, s.phase)) * Mat8c::Identity());
  }
}

/// The pair whose ordered slots start with the given qubit, used to route
/// single-qubit steps through the pair machinery: a->ab, b->bc, c->ca.
inline Pair leading_pair(Qubit q) {
  switch (q) {
    case Qubit::a: return Pair::ab;
    case Qubit::b: return Pair::bc;
    default: return Pair::ca;
  }
}

/// Stored per-step expectation. Any field may be absent.
struct Expectation {
  std::optional<Vec8c> state;  // exact amplitudes (global phase fixed)
  bool up_to_phase = false;    // compare |<expected|actual>|^2 instead
  std::vector<QVector> qvectors;
  std::map<std::string, double> tangles;  // keyed by TangleReport field name
};

struct Recipe {
  std::string name;
  std::optional<Vec8c> input;  // declared input amplitudes
  std::vector<ControlStep> steps;
  std::map<int, Expectation> expect;  // 1-based step index
  std::optional<Vec8c> target;
};

struct StepRecord {
  int step;  // 0 = input
  ThreeQubitState state;
  std::array<QVector, 3> qvectors;
  TangleReport tangles;
};

struct RecipeTrace {
  std::string name;
  std::vector<StepRecord> records;
  std::optional<double> final_fidelity;
};

inline constexpr double kVerifyTol = 1e-9;

namespace detail {

inline StepRecord make_record(int step, const ThreeQubitState& st) {
  return {step, st, {qvector(st, 1), qvector(st, 2), qvector(st, 3)}, tangle_report(st)};
}

inline double tangle_by_name(const TangleReport& r, const std::string& key) {
  if (key == "tau_abc") return r.tau_abc;
  if (key == "tau_bc") return r.tau_bc;
  if (key == "tau_ac") return r.tau_ac;
  if (key == "tau_ab") return r.tau_ab;
  if (key == "tau_a_bc") return r.tau_a_bc;
  if (key == "tau_b_ca") return r.tau_b_ca;
  if (key == "tau_c_ab") return r.tau_c_ab;
  throw validation_error("unknown tangle name '" + key + "'");
}

inline double fidelity(const Vec8c& x, const Vec8c& y) { return std::norm(x.dot(y)); }

inline void check_expectation(const Recipe& r, int step, const Expectation& e,
                              const StepRecord& rec, double tol) {
  const auto fail = [&](const std::string& what, double residual) {
    throw verification_error("recipe '" + r.name + "' step " + std::to_string(step) + ": " + what +
                             " off by " + std::to_string(residual));
  };
  if (e.state) {
    if (e.up_to_phase) {
      const double infidelity = 1.0 - fidelity(*e.state, rec.state.amplitudes());
      if (infidelity > tol) fail("state (up to phase)", infidelity);
    } else {
      const double d = max_abs(Vec8c(rec.state.amplitudes() - *e.state));
      if (d > tol) fail("state amplitudes", d);
    }
  }
  for (const QVector& q : e.qvectors) {
    const double d = max_abs(Vec6c(rec.qvectors[q.partition - 1].v - q.v));
    if (d > tol) fail("q-vector, partition " + std::to_string(q.partition), d);
  }
  for (const auto& [key, want] : e.tangles) {
    const double d = std::abs(tangle_by_name(rec.tangles, key) - want);
    if (d > tol) fail(key, d);
  }
}

}  // namespace detail

/// Run a recipe in both tracks. Coupling and local steps go through the
/// dual evolution (the pair's partition is propagated as an orthogonal
/// rotation and checked against the evolved state); with verify on, every
/// stored expectation is asserted at the given tolerance.
inline RecipeTrace run(const Recipe& recipe, const ThreeQubitState& input, bool verify,
                       double tol = kVerifyTol) {
  for (const ControlStep& s : recipe.steps) validate(s);
  if (verify && recipe.input) {
    const double d = max_abs(Vec8c(input.amplitudes() - *recipe.input));
    if (d > tol)
      throw verification_error("recipe '" + recipe.name +
                               "': input differs from the declared input by " + std::to_string(d));
  }

  RecipeTrace trace;
  trace.name = recipe.name;
  trace.records.push_back(detail::make_record(0, input));

  ThreeQubitState st = input;
  int step = 0;
  for (const ControlStep& s : recipe.steps) {
    ++step;
    switch (s.kind) {
      case StepKind::coupling: {
        // time-1 evolution under H = -half_angle * sigma_label
        const PairHamiltonian h(s.pair, Mat4c(-s.half_angle * pauli_pair_op(s.label)));
        const EvolveResult ev = evolve_dual(st, h, 1.0);
        st = ev.state;
        trace.records.push_back({step, st, ev.qvectors, tangle_report(st)});
        break;
      }
      case StepKind::local: {
        const Pair p = leading_pair(s.qubit);
        const std::string label = std::string(1, s.axis) + "I";
        const PairHamiltonian h(p, Mat4c(-s.angle * pauli_pair_op(label)));
        const EvolveResult ev = evolve_dual(st, h, 1.0);
        st = ev.state;
        trace.records.push_back({step, st, ev.qvectors, tangle_report(st)});
        break;
      }
      case StepKind::global_phase: {
        st = ThreeQubitState(Vec8c(std::exp(cplx(0.0, s.phase)) * st.amplitudes()));
        trace.records.push_back(detail::make_record(step, st));
        break;
      }
    }
    if (verify) {
      const auto it = recipe.expect.find(step);
      if (it != recipe.expect.end())
        detail::check_expectation(recipe, step, it->second, trace.records.back(), tol);
    }
  }

  if (recipe.target) {
    trace.final_fidelity = detail::fidelity(*recipe.target, st.amplitudes());
    if (verify && 1.0 - *trace.final_fidelity > tol)
      throw verification_error("recipe '" + recipe.name + "': final fidelity " +
                               std::to_string(*trace.final_fidelity));
  }
  return trace;
}

// ---- the three canonical sequences with their expectation tables ----

namespace detail {

inline Vec8c amps(std::initializer_list<cplx> values) {
  Vec8c v;
  int n = 0;
  for (const cplx z : values) v[n++] = z;
  return v;
}

inline QVector qv(int partition, std::initializer_list<cplx> values, double denom) {
  Vec6c v;
  int n = 0;
  for (const cplx z : values) v[n++] = z / denom;
  return {partition, v};
}

}  // namespace detail

/// |W> -> |GHZ>: two couplings on (b,c), one on (c,a), x-rotations on all
/// three qubits, a z-rotation and a global phase. Every intermediate is
/// pinned; three-tangle grows 0 -> 4/9 -> 8/9 -> 1 as the two-tangles are
/// absorbed.
inline Recipe make_w_to_ghz() {
  using detail::amps;
  using detail::qv;
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const double cs = std::cos(M_PI / 8), sn = std::sin(M_PI / 8);
  const double xi = std::atan(1.0 / (2.0 * s2));

  Recipe r;
  r.name = "w_to_ghz";
  r.input = w_state().amplitudes();
  r.steps = {coupling_step(Pair::bc, "xy", M_PI / 8),
             coupling_step(Pair::bc, "yx", M_PI / 8),
             coupling_step(Pair::ca, "yx", xi / 2),
             local_step(Qubit::a, 'x', M_PI / 4),
             local_step(Qubit::b, 'x', M_PI / 4),
             local_step(Qubit::c, 'x', M_PI / 4),
             local_step(Qubit::a, 'z', M_PI / 4),
             phase_step(-3 * M_PI / 4)};

  Expectation e1;
  e1.state = amps({0, (cs - sn) / s3, (cs + sn) / s3, 0, cs / s3, 0, 0, -sn / s3});
  e1.qvectors = {qv(1, {0, -1, 0, 1, s2 * kI, 0}, 3 * s2)};
  e1.tangles = {{"tau_abc", 4.0 / 9}, {"tau_ac", 0.0}, {"tau_ab", 4.0 / 9}, {"tau_a_bc", 8.0 / 9}};
  r.expect[1] = e1;

  Expectation e2;
  e2.state = amps({0, s2 / s6, s2 / s6, 0, 1 / s6, 0, 0, -1 / s6});
  e2.qvectors = {qv(1, {0, -1, 0, 0, kI, 0}, 3.0),
                 qv(2, {0, -2 * s2, 0, 1, 3.0 * kI, 0}, 6 * s2),
                 qv(3, {kI, -3, 0, 0, 2 * s2 * kI, 0}, 6 * s2)};
  e2.tangles = {{"tau_abc", 8.0 / 9}, {"tau_bc", 1.0 / 9},  {"tau_ac", 0.0},
                {"tau_ab", 0.0},      {"tau_a_bc", 8.0 / 9}, {"tau_b_ca", 1.0},
                {"tau_c_ab", 1.0}};
  r.expect[2] = e2;

  Expectation e3;
  e3.state = amps({0, 0.5, 0.5, 0, 0.5, 0, 0, -0.5});
  e3.qvectors = {qv(1, {0, -1, 0, 0, kI, 0}, 2 * s2), qv(2, {0, -1, 0, 0, kI, 0}, 2 * s2),
                 qv(3, {0, -1, 0, 0, kI, 0}, 2 * s2)};
  e3.tangles = {{"tau_abc", 1.0}, {"tau_bc", 0.0},    {"tau_ac", 0.0},    {"tau_ab", 0.0},
                {"tau_a_bc", 1.0}, {"tau_b_ca", 1.0}, {"tau_c_ab", 1.0}};
  r.expect[3] = e3;

  Expectation e6;  // after the three x-rotations
  e6.state = amps({kI / s2, 0, 0, 0, 0, 0, 0, -1 / s2});
  e6.qvectors = {qv(1, {0, 0, 1, 0, 0, -kI}, 2 * s2), qv(2, {0, 0, 1, 0, 0, -kI}, 2 * s2),
                 qv(3, {0, 0, 1, 0, 0, -kI}, 2 * s2)};
  r.expect[6] = e6;

  Expectation e7;
  e7.state = amps({std::exp(cplx(0, 3 * M_PI / 4)) / s2, 0, 0, 0, 0, 0, 0,
                   std::exp(cplx(0, 3 * M_PI / 4)) / s2});
  r.expect[7] = e7;

  Expectation e8;
  e8.state = amps({1 / s2, 0, 0, 0, 0, 0, 0, 1 / s2});
  e8.tangles = {{"tau_abc", 1.0}, {"tau_bc", 0.0}, {"tau_ac", 0.0}, {"tau_ab", 0.0}};
  r.expect[8] = e8;

  r.target = e8.state;
  return r;
}

/// Biseparable -> |GHZ>: one (a,b) coupling then local a-rotations.
inline Recipe make_bs_to_ghz() {
  using detail::amps;
  using detail::qv;
  const double s2 = std::sqrt(2.0);

  Recipe r;
  r.name = "bs_to_ghz";
  r.input = bs_state().amplitudes();
  r.steps = {coupling_step(Pair::ab, "xz", M_PI / 4), local_step(Qubit::a, 'x', -M_PI / 4),
             local_step(Qubit::a, 'z', 3 * M_PI / 4), phase_step(-3 * M_PI / 4)};

  Expectation e1;
  e1.state = amps({0.5, 0, 0, 0.5, 0.5 * kI, 0, 0, -0.5 * kI});
  e1.qvectors = {qv(1, {0, 0, 1, 0, 0, -kI}, 2 * s2), qv(2, {0, 0, 1, 0, -kI, 0}, 2 * s2),
                 qv(3, {0, 1, 0, 0, 0, -kI}, 2 * s2)};
  e1.tangles = {{"tau_abc", 1.0}, {"tau_bc", 0.0},    {"tau_ac", 0.0},    {"tau_ab", 0.0},
                {"tau_a_bc", 1.0}, {"tau_b_ca", 1.0}, {"tau_c_ab", 1.0}};
  r.expect[1] = e1;

  Expectation e2;
  e2.state = amps({1 / s2, 0, 0, 0, 0, 0, 0, -kI / s2});
  r.expect[2] = e2;

  Expectation e3;
  e3.state = amps({std::exp(cplx(0, 3 * M_PI / 4)) / s2, 0, 0, 0, 0, 0, 0,
                   std::exp(cplx(0, 3 * M_PI / 4)) / s2});
  r.expect[3] = e3;

  Expectation e4;
  e4.state = amps({1 / s2, 0, 0, 0, 0, 0, 0, 1 / s2});
  r.expect[4] = e4;

  r.target = e4.state;
  return r;
}

/// |W> -> biseparable: the first two steps of w_to_ghz, then the (c,a)
/// coupling with the complementary angle, and a final flip of qubit b
/// (realized as exp(i pi/2 sigma_x) times a -pi/2 global phase).
inline Recipe make_w_to_bs() {
  using detail::amps;
  using detail::qv;
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  const double xi = std::atan(1.0 / (2.0 * s2));
  const double zeta = -(M_PI / 2 - xi);

  Recipe r;
  r.name = "w_to_bs";
  r.input = w_state().amplitudes();
  r.steps = {coupling_step(Pair::bc, "xy", M_PI / 8), coupling_step(Pair::bc, "yx", M_PI / 8),
             coupling_step(Pair::ca, "yx", zeta / 2), local_step(Qubit::b, 'x', M_PI / 2),
             phase_step(-M_PI / 2)};

  Expectation e2;
  e2.state = amps({0, s2 / s6, s2 / s6, 0, 1 / s6, 0, 0, -1 / s6});
  e2.qvectors = {qv(2, {0, -2 * s2, 0, 1, 3.0 * kI, 0}, 6 * s2)};
  r.expect[2] = e2;

  Expectation e3;
  e3.state = amps({0, 1 / s2, 1 / s2, 0, 0, 0, 0, 0});
  e3.tangles = {{"tau_abc", 0.0}, {"tau_bc", 1.0},    {"tau_ac", 0.0},    {"tau_ab", 0.0},
                {"tau_a_bc", 0.0}, {"tau_b_ca", 1.0}, {"tau_c_ab", 1.0}};
  r.expect[3] = e3;

  Expectation e5;
  e5.state = amps({1 / s2, 0, 0, 1 / s2, 0, 0, 0, 0});
  r.expect[5] = e5;

  r.target = e5.state;
  return r;
}

inline const std::map<std::string, Recipe>& builtin_recipes() {
  static const std::map<std::string, Recipe> recipes{
      {"w_to_ghz", make_w_to_ghz()},
      {"bs_to_ghz", make_bs_to_ghz()},
      {"w_to_bs", make_w_to_bs()}};
  return recipes;
}

}  // namespace trivec
