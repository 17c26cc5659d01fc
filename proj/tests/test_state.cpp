#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace trivec;
using namespace testutil;

TEST_CASE("state construction validates norm and finiteness") {
  Vec8c amps = Vec8c::Zero();
  amps[0] = 0.5;
  CHECK_THROWS_AS(ThreeQubitState(amps), validation_error);
  amps[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ThreeQubitState(amps), validation_error);
  amps[0] = 2.0;
  CHECK_THROWS_AS(ThreeQubitState(amps), validation_error);
  CHECK(normalize(amps).amplitudes()[0] == cplx(1.0, 0.0));
  CHECK_THROWS_AS(normalize(Vec8c(Vec8c::Zero())), validation_error);
}

TEST_CASE("partition matrix of basis and GHZ states") {
  const PartitionMatrix basis = partition_matrix(basis_state(0, 0, 0), 1);
  CHECK(basis.c0() == Vec4c(1, 0, 0, 0));
  CHECK(basis.c1() == Vec4c(0, 0, 0, 0));

  const cplx g = std::exp(cplx(0.0, -M_PI / 4)) / std::sqrt(2.0);
  const PartitionMatrix ghz = partition_matrix(ghz_state(), 1);
  CHECK(dist(ghz.c0(), Vec4c(g, 0, 0, 0)) < 1e-15);
  CHECK(dist(ghz.c1(), Vec4c(0, 0, 0, g)) < 1e-15);
}

// Independent oracle: place each amplitude by the cyclic role map
// (column = isolated qubit, rows = remaining pair in cyclic order) and
// compare against the library's arrangement.
static Mat42c brute_force_partition(const Vec8c& amps, int s) {
  Mat42c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const cplx v = amps[4 * i + 2 * j + k];
        if (s == 1) m(2 * j + k, i) = v;
        if (s == 2) m(2 * k + i, j) = v;
        if (s == 3) m(2 * i + j, k) = v;
      }
  return m;
}

TEST_CASE("partition 2 collects j-slices under (k,i) row order") {
  const double r = 1.0 / std::sqrt(3.0);
  const PartitionMatrix pm = partition_matrix(w_state(), 2);
  CHECK(dist(pm.c0(), Vec4c(0, r, r, 0)) < 1e-15);
  CHECK(dist(pm.c1(), Vec4c(r, 0, 0, 0)) < 1e-15);
  CHECK(dist(pm.m, brute_force_partition(w_state().amplitudes(), 2)) == 0.0);
}

TEST_CASE("partition matrices match the index-permutation oracle and round-trip") {
  RandomStream rng(11);
  for (int n = 0; n < 50; ++n) {
    const ThreeQubitState st = random_state(rng);
    for (int s = 1; s <= 3; ++s) {
      const PartitionMatrix pm = partition_matrix(st, s);
      CHECK(dist(pm.m, brute_force_partition(st.amplitudes(), s)) == 0.0);
      CHECK(interleave(pm) == st.amplitudes());
    }
  }
  CHECK_THROWS_AS(partition_matrix(w_state(), 4), validation_error);
}

TEST_CASE("apply_unitary rejects bad operators and preserves states under identity") {
  const ThreeQubitState st = w_state();
  CHECK(apply_unitary(st, Mat2c(Mat2c::Identity()), Qubit::b).amplitudes() == st.amplitudes());
  CHECK(apply_unitary(st, Mat4c(Mat4c::Identity()), Pair::ca).amplitudes() == st.amplitudes());
  Mat2c bad = Mat2c::Identity();
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(apply_unitary(st, bad, Qubit::a), validation_error);
  Mat4c bad4 = Mat4c::Identity();
  bad4(3, 3) = cplx(0.0, 0.5);
  CHECK_THROWS_AS(apply_unitary(st, bad4, Pair::bc), validation_error);
}

TEST_CASE("bit flip on qubit b") {
  Vec8c amps = Vec8c::Zero();
  amps[1] = amps[2] = 1.0 / std::sqrt(2.0);  // (|001> + |010>)/sqrt(2)
  const ThreeQubitState st(amps);
  const ThreeQubitState flipped = apply_unitary(st, pauli('x'), Qubit::b);
  Vec8c want = Vec8c::Zero();
  want[3] = want[0] = 1.0 / std::sqrt(2.0);  // (|011> + |000>)/sqrt(2)
  CHECK(dist(flipped.amplitudes(), want) < 1e-15);
}

TEST_CASE("xy coupling on (b,c) turns W into the first control intermediate") {
  const double cs = std::cos(M_PI / 8), sn = std::sin(M_PI / 8), r3 = std::sqrt(3.0);
  const Mat4c u = std::cos(M_PI / 8) * Mat4c::Identity() +
                  kI * std::sin(M_PI / 8) * pauli_pair_op("xy");
  const ThreeQubitState out = apply_unitary(w_state(), u, Pair::bc);
  const Vec8c want =
      amps8({0, (cs - sn) / r3, (cs + sn) / r3, 0, cs / r3, 0, 0, -sn / r3});
  CHECK(dist(out.amplitudes(), want) < 1e-15);
}

TEST_CASE("norm preservation under 1000 random unitaries") {
  RandomStream rng(17);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const ThreeQubitState st = random_state(rng);
    const ThreeQubitState moved = (n % 2 == 0)
        ? apply_unitary(st, random_su2(rng), static_cast<Qubit>(n % 3))
        : apply_unitary(st, random_su4(rng), static_cast<Pair>(n % 3));
    worst = std::max(worst, std::abs(moved.amplitudes().norm() - 1.0));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("embedded operators equal the partition-matrix route") {
  RandomStream rng(23);
  for (int n = 0; n < 20; ++n) {
    const ThreeQubitState st = random_state(rng);
    const Mat2c u2 = random_su2(rng);
    const Mat4c u4 = random_su4(rng);
    for (int q = 0; q < 3; ++q) {
      const Vec8c via_embed = embed_single(u2, static_cast<Qubit>(q)) * st.amplitudes();
      CHECK(dist(via_embed, apply_unitary(st, u2, static_cast<Qubit>(q)).amplitudes()) < 1e-15);
    }
    for (int p = 0; p < 3; ++p) {
      const Vec8c via_embed = embed_pair(u4, static_cast<Pair>(p)) * st.amplitudes();
      CHECK(dist(via_embed, apply_unitary(st, u4, static_cast<Pair>(p)).amplitudes()) < 1e-15);
    }
  }
}

TEST_CASE("reduced densities of the named states") {
  const Mat2c rho000 = reduced_density(basis_state(0, 0, 0), Subsystem::a).matrix;
  CHECK(dist(rho000, Mat2c((Mat2c() << 1, 0, 0, 0).finished())) < 1e-15);

  const Mat2c rho_ghz = reduced_density(ghz_state(), Subsystem::a).matrix;
  CHECK(dist(rho_ghz, Mat2c(0.5 * Mat2c::Identity())) < 1e-15);

  const Mat2c rho_w = reduced_density(w_state(), Subsystem::a).matrix;
  CHECK(dist(rho_w, Mat2c((Mat2c() << 2.0 / 3, 0, 0, 1.0 / 3).finished())) < 1e-15);
}

TEST_CASE("reduced densities are Hermitian unit-trace PSD with matching spectra") {
  RandomStream rng(29);
  for (int n = 0; n < 100; ++n) {
    const ThreeQubitState st = random_state(rng);
    const Mat2c ra = reduced_density(st, Subsystem::a).matrix;
    const Mat4c rbc = reduced_density(st, Subsystem::bc).matrix;
    CHECK(dist(ra, Mat2c(ra.adjoint())) < 1e-12);
    CHECK(dist(rbc, Mat4c(rbc.adjoint())) < 1e-12);
    CHECK(std::abs(ra.trace().real() - 1.0) < 1e-12);
    CHECK(std::abs(rbc.trace().real() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat2c> ea(ra);
    Eigen::SelfAdjointEigenSolver<Mat4c> ebc(rbc);
    CHECK(ebc.eigenvalues().minCoeff() > -1e-10);
    // Schmidt duality: the pair marginal carries the single-qubit spectrum
    CHECK(std::abs(ea.eigenvalues()[1] - ebc.eigenvalues()[3]) < 1e-10);
    CHECK(std::abs(ea.eigenvalues()[0] - ebc.eigenvalues()[2]) < 1e-10);
    CHECK(std::abs(ebc.eigenvalues()[1]) < 1e-10);
    CHECK(std::abs(ebc.eigenvalues()[0]) < 1e-10);
  }
}

TEST_CASE("bloch vectors of basis and W states") {
  CHECK(dist(bloch_vector(basis_state(0, 0, 0), Qubit::a), Vec3d(0, 0, 1)) < 1e-15);
  CHECK(dist(bloch_vector(basis_state(1, 0, 0), Qubit::a), Vec3d(0, 0, -1)) < 1e-15);
  CHECK(dist(bloch_vector(w_state(), Qubit::a), Vec3d(0, 0, 1.0 / 3)) < 1e-15);
}

TEST_CASE("random states are normalized and seed-reproducible") {
  RandomStream a(99), b(99);
  for (int n = 0; n < 10; ++n) {
    const ThreeQubitState sa = random_state(a);
    CHECK(std::abs(sa.amplitudes().norm() - 1.0) < 1e-12);
    CHECK(sa.amplitudes() == random_state(b).amplitudes());
  }
}
