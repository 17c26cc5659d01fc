#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace trivec;
using namespace testutil;

namespace {

ThreeQubitState w2_by_running_steps() {
  const Mat4c u1 = std::cos(M_PI / 8) * Mat4c::Identity() +
                   kI * std::sin(M_PI / 8) * pauli_pair_op("xy");
  const Mat4c u2 = std::cos(M_PI / 8) * Mat4c::Identity() +
                   kI * std::sin(M_PI / 8) * pauli_pair_op("yx");
  return apply_unitary(apply_unitary(w_state(), u1, Pair::bc), u2, Pair::bc);
}

}  // namespace

TEST_CASE("tangle tables of the named states") {
  const TangleReport w = tangle_report(w_state());
  CHECK(std::abs(w.tau_abc) < 1e-12);
  for (const double t : {w.tau_bc, w.tau_ac, w.tau_ab}) CHECK(std::abs(t - 4.0 / 9) < 1e-12);
  for (const double t : {w.tau_a_bc, w.tau_b_ca, w.tau_c_ab}) CHECK(std::abs(t - 8.0 / 9) < 1e-12);

  const TangleReport ghz = tangle_report(ghz_state());
  CHECK(std::abs(ghz.tau_abc - 1.0) < 1e-12);
  for (const double t : {ghz.tau_bc, ghz.tau_ac, ghz.tau_ab}) CHECK(std::abs(t) < 1e-12);
  for (const double t : {ghz.tau_a_bc, ghz.tau_b_ca, ghz.tau_c_ab})
    CHECK(std::abs(t - 1.0) < 1e-12);

  const TangleReport bs = tangle_report(bs_state());
  CHECK(std::abs(bs.tau_abc) < 1e-12);
  CHECK(std::abs(bs.tau_bc - 1.0) < 1e-12);
  CHECK(std::abs(bs.tau_ac) < 1e-12);
  CHECK(std::abs(bs.tau_ab) < 1e-12);
  CHECK(std::abs(bs.tau_a_bc) < 1e-12);
  CHECK(std::abs(bs.tau_b_ca - 1.0) < 1e-12);
  CHECK(std::abs(bs.tau_c_ab - 1.0) < 1e-12);
}

TEST_CASE("tangle table of the intermediate reached after two couplings") {
  const TangleReport r = tangle_report(w2_by_running_steps());
  CHECK(std::abs(r.tau_abc - 8.0 / 9) < 1e-12);
  CHECK(std::abs(r.tau_bc - 1.0 / 9) < 1e-12);
  CHECK(std::abs(r.tau_ac) < 1e-12);
  CHECK(std::abs(r.tau_ab) < 1e-12);
  CHECK(std::abs(r.tau_a_bc - 8.0 / 9) < 1e-12);
  CHECK(std::abs(r.tau_b_ca - 1.0) < 1e-12);
  CHECK(std::abs(r.tau_c_ab - 1.0) < 1e-12);
}

TEST_CASE("three_tangle agrees between its three routes by construction") {
  RandomStream rng(79);
  for (int n = 0; n < 50; ++n) {
    const ThreeQubitState st = random_state(rng);
    CHECK_NOTHROW(three_tangle(st));
  }
  // a deliberately inconsistent triple trips the cross-check
  VectorTriple bad{Vec3c(1, 0, 0), Vec3c(0, 0.5, 0), Vec3c(1, 0, 0)};
  CHECK_THROWS_AS(three_tangle(bad), consistency_error);
}

TEST_CASE("real-part identity residuals") {
  const TangleReport ghz = tangle_report(ghz_state());
  const Vec3d rg = real_part_identity(fix_gauge(extract_triple(ghz_state())), ghz);
  CHECK(max_abs(rg) < 1e-12);

  // the degenerate gauge still satisfies it for the fully symmetric state:
  // 8 AR.AR = 8/18 = 4/9 = 0 + 4/9
  const TangleReport w = tangle_report(w_state());
  const Vec3d rw = real_part_identity(fix_gauge(extract_triple(w_state())), w);
  CHECK(max_abs(rw) < 1e-12);

  RandomStream rng(83);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const ThreeQubitState st = random_state(rng);
    worst = std::max(worst,
                     max_abs(Vec3d(real_part_identity(fix_gauge(extract_triple(st)),
                                                      tangle_report(st)))));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("gauged three-tangle equals the invariant form") {
  RandomStream rng(89);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const ThreeQubitState st = random_state(rng);
    const GaugedTriple g = fix_gauge(extract_triple(st));
    if (g.degenerate) continue;
    const double gauged = 8.0 * (g.AR.squaredNorm() - g.AI.squaredNorm());
    worst = std::max(worst, std::abs(gauged - three_tangle(st)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("monogamy holds on random states") {
  RandomStream rng(97);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const TangleReport r = tangle_report(random_state(rng));
    for (const double c : r.ckw_residuals) worst = std::max(worst, std::abs(c));
    for (const double t : {r.tau_abc, r.tau_bc, r.tau_ac, r.tau_ab, r.tau_a_bc, r.tau_b_ca,
                           r.tau_c_ab}) {
      CHECK(t >= -1e-10);
      CHECK(t <= 1.0 + 1e-10);
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("one-vs-rest concurrence is blind to pair-internal unitaries") {
  RandomStream rng(101);
  double worst = 0.0;
  for (int n = 0; n < 60; ++n) {
    const ThreeQubitState st = random_state(rng);
    const double before = concurrences(st)[0];
    const ThreeQubitState moved = apply_unitary(st, random_su4(rng), Pair::bc);
    worst = std::max(worst, std::abs(concurrences(moved)[0] - before));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("measures clamp round-off but reject genuine negatives") {
  const TangleReport product = tangle_report(basis_state(0, 0, 0));
  CHECK(product.tau_abc == 0.0);
  CHECK(product.tau_bc == 0.0);
  CHECK(product.tau_a_bc == 0.0);
}
