#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace trivec;
using namespace testutil;

namespace {

Mat8c kron3(const Mat2c& a, const Mat2c& b, const Mat2c& c) {
  Mat8c out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          for (int r3 = 0; r3 < 2; ++r3)
            for (int c3 = 0; c3 < 2; ++c3)
              out(4 * r1 + 2 * r2 + r3, 4 * c1 + 2 * c2 + c3) = a(r1, c1) * b(r2, c2) * c(r3, c3);
  return out;
}

// Independent embedding of exp(i theta sigma_u (x) sigma_v) on named qubits.
Mat8c raw_coupling(char u, Qubit qu, char v, Qubit qv, double theta) {
  Mat2c ops[3] = {Mat2c::Identity(), Mat2c::Identity(), Mat2c::Identity()};
  ops[static_cast<int>(qu)] = pauli(u);
  ops[static_cast<int>(qv)] = pauli(v);
  const Mat8c word = kron3(ops[0], ops[1], ops[2]);
  return std::cos(theta) * Mat8c::Identity() + kI * std::sin(theta) * word;
}

Mat8c raw_local(char u, Qubit q, double theta) {
  Mat2c ops[3] = {Mat2c::Identity(), Mat2c::Identity(), Mat2c::Identity()};
  ops[static_cast<int>(q)] = pauli(u);
  const Mat8c word = kron3(ops[0], ops[1], ops[2]);
  return std::cos(theta) * Mat8c::Identity() + kI * std::sin(theta) * word;
}

}  // namespace

TEST_CASE("all three builtin recipes verify against their stored expectations") {
  for (const auto& [nm, recipe] : builtin_recipes()) {
    const RecipeTrace trace = run(recipe, ThreeQubitState(*recipe.input), true);
    REQUIRE(trace.final_fidelity.has_value());
    CHECK(*trace.final_fidelity >= 1.0 - 1e-9);
    INFO(nm);
  }
}

TEST_CASE("w_to_ghz walks through the published intermediates") {
  const Recipe& recipe = builtin_recipes().at("w_to_ghz");
  const RecipeTrace trace = run(recipe, w_state(), true);
  REQUIRE(trace.records.size() == 9);

  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  // step 2: both couplings done
  CHECK(dist(trace.records[2].state.amplitudes(),
             amps8({0, s2 / s6, s2 / s6, 0, 1 / s6, 0, 0, -1 / s6})) < 1e-14);
  // step 3: the (c,a) coupling equalizes all four amplitudes
  CHECK(dist(trace.records[3].state.amplitudes(),
             amps8({0, 0.5, 0.5, 0, 0.5, 0, 0, -0.5})) < 1e-14);
  // final state
  CHECK(dist(trace.records[8].state.amplitudes(),
             amps8({1 / s2, 0, 0, 0, 0, 0, 0, 1 / s2})) < 1e-14);

  // entanglement bookkeeping: each coupling converts one two-tangle into
  // three-tangle while the one-vs-rest concurrence stands still
  const TangleReport w = trace.records[0].tangles;
  const TangleReport w1 = trace.records[1].tangles;
  const TangleReport w2 = trace.records[2].tangles;
  CHECK(std::abs(w1.tau_ac) < 1e-9);
  CHECK(std::abs(w1.tau_abc - (w.tau_abc + w.tau_ac)) < 1e-9);
  CHECK(std::abs(w2.tau_ab) < 1e-9);
  CHECK(std::abs(w2.tau_abc - (w1.tau_abc + w1.tau_ab)) < 1e-9);
  CHECK(std::abs(w.tau_a_bc - w1.tau_a_bc) < 1e-9);
  CHECK(std::abs(w.tau_a_bc - w2.tau_a_bc) < 1e-9);
}

TEST_CASE("bs_to_ghz reaches the plain GHZ state") {
  const Recipe& recipe = builtin_recipes().at("bs_to_ghz");
  const RecipeTrace trace = run(recipe, bs_state(), true);
  const double s2 = std::sqrt(2.0);
  CHECK(dist(trace.records.back().state.amplitudes(),
             amps8({1 / s2, 0, 0, 0, 0, 0, 0, 1 / s2})) < 1e-14);
  CHECK(*trace.final_fidelity >= 1.0 - 1e-12);
  // the coupling boosts the three-tangle to its maximum in one shot
  CHECK(std::abs(trace.records[1].tangles.tau_abc - 1.0) < 1e-12);
}

TEST_CASE("w_to_bs factors qubit a out and flips back to the canonical form") {
  const Recipe& recipe = builtin_recipes().at("w_to_bs");
  const RecipeTrace trace = run(recipe, w_state(), true);
  const double s2 = std::sqrt(2.0);
  CHECK(dist(trace.records[3].state.amplitudes(), amps8({0, 1 / s2, 1 / s2, 0, 0, 0, 0, 0})) <
        1e-14);
  CHECK(dist(trace.records.back().state.amplitudes(), bs_state().amplitudes()) < 1e-14);
}

TEST_CASE("composed step operators equal the closed-form products") {
  const double xi = std::atan(1.0 / (2.0 * std::sqrt(2.0)));
  const double zeta = -(M_PI / 2 - xi);

  const auto compose = [](const Recipe& r) {
    Mat8c u = Mat8c::Identity();
    for (const ControlStep& s : r.steps) u = step_operator(s) * u;
    return u;
  };

  const Mat8c w_to_ghz = compose(builtin_recipes().at("w_to_ghz"));
  const Mat8c closed_w =
      std::exp(cplx(0, -3 * M_PI / 4)) * raw_local('z', Qubit::a, M_PI / 4) *
      raw_local('x', Qubit::a, M_PI / 4) * raw_local('x', Qubit::b, M_PI / 4) *
      raw_local('x', Qubit::c, M_PI / 4) * raw_coupling('y', Qubit::c, 'x', Qubit::a, xi / 2) *
      raw_coupling('y', Qubit::b, 'x', Qubit::c, M_PI / 8) *
      raw_coupling('x', Qubit::b, 'y', Qubit::c, M_PI / 8);
  CHECK(max_abs(Mat8c(w_to_ghz - closed_w)) < 1e-10);

  const Mat8c bs_to_ghz = compose(builtin_recipes().at("bs_to_ghz"));
  const Mat8c closed_bs =
      std::exp(cplx(0, -3 * M_PI / 4)) * raw_local('z', Qubit::a, 3 * M_PI / 4) *
      raw_local('x', Qubit::a, -M_PI / 4) * raw_coupling('x', Qubit::a, 'z', Qubit::b, M_PI / 4);
  CHECK(max_abs(Mat8c(bs_to_ghz - closed_bs)) < 1e-10);

  const Mat8c w_to_bs = compose(builtin_recipes().at("w_to_bs"));
  const Mat8c closed_wbs =
      std::exp(cplx(0, -M_PI / 2)) * raw_local('x', Qubit::b, M_PI / 2) *
      raw_coupling('y', Qubit::c, 'x', Qubit::a, zeta / 2) *
      raw_coupling('y', Qubit::b, 'x', Qubit::c, M_PI / 8) *
      raw_coupling('x', Qubit::b, 'y', Qubit::c, M_PI / 8);
  CHECK(max_abs(Mat8c(w_to_bs - closed_wbs)) < 1e-10);
}

TEST_CASE("per-step q-vectors stay on both tracks") {
  const Recipe& recipe = builtin_recipes().at("w_to_ghz");
  const RecipeTrace trace = run(recipe, w_state(), false);
  for (const StepRecord& rec : trace.records)
    for (int s = 1; s <= 3; ++s)
      CHECK(dist(rec.qvectors[s - 1].v, qvector(rec.state, s).v) < 1e-9);
}

TEST_CASE("empty recipe leaves the input unchanged") {
  Recipe nothing;
  nothing.name = "noop";
  const RecipeTrace trace = run(nothing, w_state(), false);
  CHECK(trace.records.size() == 1);
  CHECK(trace.records[0].state.amplitudes() == w_state().amplitudes());
  CHECK(!trace.final_fidelity.has_value());
}

TEST_CASE("verification failures name the step and quantity") {
  Recipe tampered = builtin_recipes().at("w_to_ghz");
  tampered.expect[2].tangles["tau_abc"] = 0.5;
  try {
    run(tampered, w_state(), true);
    FAIL("expected a verification error");
  } catch (const verification_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("step 2") != std::string::npos);
    CHECK(msg.find("tau_abc") != std::string::npos);
  }

  // wrong input is rejected up front when verifying
  CHECK_THROWS_AS(run(builtin_recipes().at("w_to_ghz"), ghz_state(), true), verification_error);
  // but accepted silently when not verifying
  CHECK_NOTHROW(run(builtin_recipes().at("w_to_ghz"), ghz_state(), false));
}

TEST_CASE("steps validate their fields") {
  CHECK_THROWS_AS(validate(coupling_step(Pair::bc, "qq", 0.1)), validation_error);
  CHECK_THROWS_AS(validate(local_step(Qubit::a, 'w', 0.1)), validation_error);
  CHECK_THROWS_AS(
      validate(coupling_step(Pair::bc, "xy", std::numeric_limits<double>::infinity())),
      validation_error);
}
