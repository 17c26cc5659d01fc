#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trivec/oracle.hpp"
#include "trivec/recipes.hpp"
#include "trivec/so6.hpp"
#include "trivec/tangles.hpp"

// The invariant battery behind `trivec selftest`: every structural
// identity the library relies on, checked on seeded random inputs with a
// per-suite tolerance and the worst observed residual reported.

namespace trivec {

struct SuiteResult {
  std::string name;
  std::uint64_t checks;
  double worst_residual;
  double tolerance;
  bool pass() const { return worst_residual <= tolerance; }
};

struct SelftestSummary {
  std::uint64_t seed;
  int count;
  std::vector<SuiteResult> suites;
  bool all_pass() const {
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }
};

namespace selftest_detail {

struct Tracker {
  std::uint64_t checks = 0;
  double worst = 0.0;
  void add(double residual) {
    ++checks;
    if (residual > worst) worst = residual;
  }
};

inline Mat4c random_traceless_hermitian(RandomStream& rng) {
  Mat4c a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = cplx(rng.normal(), rng.normal());
  Mat4c h = (a + a.adjoint()) / 2.0;
  h -= (h.trace() / 4.0) * Mat4c::Identity();
  return h;
}

inline Mat2c random_su2(RandomStream& rng) {
  const Vec3d axis = rng.unit_vector3();
  const double theta = rng.uniform() * 2.0 * M_PI;
  const Mat2c h = axis[0] * pauli('x') + axis[1] * pauli('y') + axis[2] * pauli('z');
  return expm_unitary(h, theta);
}

/// Adjoint SO(3) image of a single-qubit unitary: R_{nk} = Tr(s_n u s_k u+)/2.
inline Mat3d adjoint_rotation(const Mat2c& u) {
  const char ax[3] = {'x', 'y', 'z'};
  Mat3d r;
  for (int n = 0; n < 3; ++n)
    for (int k = 0; k < 3; ++k)
      r(n, k) = (pauli(ax[n]) * u * pauli(ax[k]) * u.adjoint()).trace().real() / 2.0;
  return r;
}

}  // namespace selftest_detail

/// Plucker relation p^T Omega p = 0 and its q-space image q.q = 0, all
/// partitions.
inline SuiteResult suite_bivector_quadric(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    for (int s = 1; s <= 3; ++s) {
      const PVector p = pluecker_pvector(st, s);
      tr.add(std::abs(pluecker_residual(p.v)));
      const QVector q = to_qvector(p);
      tr.add(std::abs(bilinear_dot(q.v, q.v)));
    }
  }
  return {"bivector_quadric", tr.checks, tr.worst, 1e-10};
}

/// Cyclic inter-partition relations and the equal-dot chain
/// alpha(s).alpha(s) = -beta(s).beta(s), identical across partitions.
inline SuiteResult suite_inter_partition(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    const AlphaBeta q1 = split(qvector(st, 1));
    const AlphaBeta q2 = split(qvector(st, 2));
    const AlphaBeta q3 = split(qvector(st, 3));
    tr.add(max_abs(Vec3c(q1.beta + kI * q2.alpha)));
    tr.add(max_abs(Vec3c(q2.beta + kI * q3.alpha)));
    tr.add(max_abs(Vec3c(q3.beta + kI * q1.alpha)));
    const cplx aa = bilinear_dot(q1.alpha, q1.alpha);
    for (const AlphaBeta* ab : {&q1, &q2, &q3}) {
      tr.add(std::abs(bilinear_dot(ab->alpha, ab->alpha) - aa));
      tr.add(std::abs(bilinear_dot(ab->beta, ab->beta) + aa));
    }
  }
  return {"inter_partition", tr.checks, tr.worst, 1e-9};
}

/// (U_pq x)^T Omega (U_pq y) = x.y and <x|x> preservation for random
/// complex 6-vectors (not necessarily decomposable).
inline SuiteResult suite_form_transfer(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    Vec6c x, y;
    for (int k = 0; k < 6; ++k) {
      x[k] = cplx(rng.normal(), rng.normal());
      y[k] = cplx(rng.normal(), rng.normal());
    }
    const Vec6c px = u_pq() * x, py = u_pq() * y;
    tr.add(std::abs(bilinear_dot(Vec6c(omega() * px), py) - bilinear_dot(x, y)));
    tr.add(std::abs(px.squaredNorm() - x.squaredNorm()));
  }
  return {"form_transfer", tr.checks, tr.worst, 1e-12};
}

/// Lift identities: H~^T Omega + Omega H~ = 0, Hermiticity, and
/// -i U_pq+ H~ U_pq real antisymmetric and equal to 2f.
inline SuiteResult suite_lift_identity(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  const Pair pairs[3] = {Pair::bc, Pair::ca, Pair::ab};
  for (int n = 0; n < count; ++n) {
    const PairHamiltonian ham(pairs[n % 3], selftest_detail::random_traceless_hermitian(rng));
    const Mat6c ht = lift(ham).matrix;
    tr.add(max_abs(Mat6c(ht.transpose() * omega() + omega() * ht)));
    tr.add(max_abs(Mat6c(ht - ht.adjoint())));
    const Mat6c gen = -kI * u_pq().adjoint() * ht * u_pq();
    tr.add(max_abs(Mat6c(gen - gen.real().cast<cplx>())));
    tr.add(max_abs(Mat6d(gen.real() - 2.0 * ham.f())));
  }
  return {"lift_identity", tr.checks, tr.worst, 1e-12};
}

/// Monogamy residuals along both the bivector and density-matrix routes.
inline SuiteResult suite_ckw(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    for (const double r : tangle_report(st).ckw_residuals) tr.add(std::abs(r));
    for (const double r : oracle_report(st).ckw_residuals) tr.add(std::abs(r));
  }
  return {"ckw", tr.checks, tr.worst, 1e-9};
}

/// All seven measures against the density-matrix oracle.
inline SuiteResult suite_oracle_equivalence(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    const TangleReport a = tangle_report(st);
    const OracleReport b = oracle_report(st);
    tr.add(std::abs(a.tau_abc - b.tau_abc));
    tr.add(std::abs(a.tau_bc - b.tau_bc));
    tr.add(std::abs(a.tau_ac - b.tau_ac));
    tr.add(std::abs(a.tau_ab - b.tau_ab));
    tr.add(std::abs(a.tau_a_bc - b.tau_a_bc));
    tr.add(std::abs(a.tau_b_ca - b.tau_b_ca));
    tr.add(std::abs(a.tau_c_ab - b.tau_c_ab));
  }
  return {"oracle_equivalence", tr.checks, tr.worst, 1e-8};
}

/// End-to-end isomorphism: evolving the state and rotating the q-vector
/// commute, for random (state, pair, Hamiltonian, t) tuples.
inline SuiteResult suite_dual_track(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  const Pair pairs[3] = {Pair::bc, Pair::ca, Pair::ab};
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    const PairHamiltonian ham(pairs[n % 3], selftest_detail::random_traceless_hermitian(rng));
    const double t = rng.uniform();
    tr.add(evolve_dual(st, ham, t).track_residual);
  }
  return {"dual_track", tr.checks, tr.worst, 1e-9};
}

/// Structure constants across all 105 generator pairs, matched against
/// the canonical so(6) basis under t_{nm} <-> 2 I_{nm}, plus the double
/// cover: exp(pi t_{nm}) = -1 while exp(2 pi I_{nm}) = 1.
inline SuiteResult suite_commutation_table(RandomStream&, int) {
  selftest_detail::Tracker tr;
  const GeneratorTable& g = generator_table(Pair::bc);
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m)
      for (int k = 2; k <= 6; ++k)
        for (int p = 1; p < k; ++p) {
          const Mat4c lhs = g.t(n, m) * g.t(k, p) - g.t(k, p) * g.t(n, m);
          const Mat6d il = so6_basis(n, m) * so6_basis(k, p) - so6_basis(k, p) * so6_basis(n, m);
          // expand both sides in the delta pattern and compare coefficients
          const auto d = [](int u, int v) { return u == v ? 1.0 : 0.0; };
          const Mat4c rhs_t = 2.0 * (d(m, p) * g.t(n, k) + d(n, k) * g.t(m, p) -
                                     d(m, k) * g.t(n, p) - d(n, p) * g.t(m, k));
          const Mat6d rhs_i = d(m, p) * so6_basis(n, k) + d(n, k) * so6_basis(m, p) -
                              d(m, k) * so6_basis(n, p) - d(n, p) * so6_basis(m, k);
          tr.add(max_abs(Mat4c(lhs - rhs_t)));
          tr.add(max_abs(Mat6d(il - rhs_i)));
        }
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) {
      // X = 2 pi I_nm: the rotation closes but its preimage exp(pi t_nm) = -1
      const Mat4c u = so6_to_su4(Mat6d(2.0 * M_PI * so6_basis(n, m)), Pair::bc);
      tr.add(max_abs(Mat4c(u + Mat4c::Identity())));
      tr.add(max_abs(Mat6d(expm_real(Mat6d(2.0 * M_PI * so6_basis(n, m))) - Mat6d::Identity())));
    }
  return {"commutation_table", tr.checks, tr.worst, 1e-12};
}

/// A, B, C move under local unitaries exactly like the matching Bloch
/// vectors: same orthogonal matrix, extracted independently from the
/// unitary's adjoint action.
inline SuiteResult suite_bloch_mimicry(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    const Mat2c u = selftest_detail::random_su2(rng);
    const Mat3d rot = selftest_detail::adjoint_rotation(u);
    tr.add(max_abs(Mat3d(rot * rot.transpose() - Mat3d::Identity())));
    const Qubit qubits[3] = {Qubit::a, Qubit::b, Qubit::c};
    for (const Qubit q : qubits) {
      const ThreeQubitState moved = apply_unitary(st, u, q);
      const VectorTriple before = extract_triple(st);
      const VectorTriple after = extract_triple(moved);
      const Vec3c own_before = q == Qubit::a ? before.A : (q == Qubit::b ? before.B : before.C);
      const Vec3c own_after = q == Qubit::a ? after.A : (q == Qubit::b ? after.B : after.C);
      tr.add(max_abs(Vec3c(own_after - rot * own_before)));
      tr.add(max_abs(Vec3d(bloch_vector(moved, q) - rot * bloch_vector(st, q))));
    }
  }
  return {"bloch_mimicry", tr.checks, tr.worst, 1e-9};
}

/// Norm preservation and spectator invariance under local unitaries, and
/// partial-trace consistency (matching marginal spectra).
inline SuiteResult suite_state_core(RandomStream& rng, int count) {
  selftest_detail::Tracker tr;
  for (int n = 0; n < count; ++n) {
    const ThreeQubitState st = random_state(rng);
    const Mat2c u = selftest_detail::random_su2(rng);
    const ThreeQubitState moved = apply_unitary(st, u, Qubit::a);
    tr.add(std::abs(moved.amplitudes().norm() - 1.0));
    // spectator invariance: B and C untouched by operations on qubit a
    const VectorTriple before = extract_triple(st);
    const VectorTriple after = extract_triple(moved);
    tr.add(max_abs(Vec3c(after.B - before.B)));
    tr.add(max_abs(Vec3c(after.C - before.C)));
    // marginal spectra agree across the cut
    const Mat2c ra = reduced_density(st, Subsystem::a).matrix;
    const Mat4c rbc = reduced_density(st, Subsystem::bc).matrix;
    Eigen::SelfAdjointEigenSolver<Mat2c> ea(ra);
    Eigen::SelfAdjointEigenSolver<Mat4c> ebc(rbc);
    tr.add(std::abs(ebc.eigenvalues()[3] - ea.eigenvalues()[1]));
    tr.add(std::abs(ebc.eigenvalues()[2] - ea.eigenvalues()[0]));
    tr.add(std::abs(ebc.eigenvalues()[1]) + std::abs(ebc.eigenvalues()[0]));
    tr.add(std::abs(rbc.trace().real() - 1.0));
  }
  return {"state_core", tr.checks, tr.worst, 1e-10};
}

inline SelftestSummary run_selftest(std::uint64_t seed, int count) {
  RandomStream rng(seed);
  SelftestSummary summary;
  summary.seed = seed;
  summary.count = count;
  const int dual = (count + 4) / 5;  // 200 tuples at the default 1000
  summary.suites = {suite_bivector_quadric(rng, count),
                    suite_inter_partition(rng, count),
                    suite_form_transfer(rng, count),
                    suite_lift_identity(rng, count),
                    suite_ckw(rng, count),
                    suite_oracle_equivalence(rng, count),
                    suite_dual_track(rng, dual),
                    suite_commutation_table(rng, count),
                    suite_bloch_mimicry(rng, std::min(count, 100)),
                    suite_state_core(rng, count)};
  return summary;
}

}  // namespace trivec
