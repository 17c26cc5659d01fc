#pragma once

#include <algorithm>
#include <array>

#include "trivec/state.hpp"

// Brute-force entanglement measures from reduced density matrices.
// Deliberately shares nothing with the bivector stack beyond the state
// representation itself, so agreement between the two is meaningful.

namespace trivec {

/// Squared one-vs-rest concurrence, 4 det(rho_cut).
inline double oracle_concurrence_one_vs_rest(const ThreeQubitState& state, Qubit cut) {
  const Mat2c rho = reduced_density(state, static_cast<Subsystem>(cut)).matrix;
  const cplx det = rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0);
  return std::max(0.0, 4.0 * det.real());
}

/// Wootters squared concurrence of one pair marginal,
/// C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of
/// the eigenvalues of rho (sy x sy) rho* (sy x sy).
///
/// For a pure three-qubit state rho = M M^dagger with M the 4x2 partition
/// matrix of the complement qubit, so rho rho~ has rank <= 2: two of the
/// l_i are exactly zero and the other two are eigenvalues of the 2x2
/// matrix conj(S) S, S = M^T (sy x sy) M. Evaluating them there avoids
/// the ~sqrt(eps) noise a dense nonsymmetric eigensolve puts on the zero
/// eigenvalues.
inline double oracle_two_tangle(const ThreeQubitState& state, Pair pair) {
  const Mat42c m = partition_matrix(state, partition_of(pair)).m;
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();  // sy x sy is real
  yy(0, 3) = -1; yy(1, 2) = 1; yy(2, 1) = 1; yy(3, 0) = -1;
  const Eigen::Matrix2cd flip = m.transpose() * yy * m;  // symmetric
  const Eigen::Matrix2cd nmat = flip.conjugate() * flip;
  const double tr = nmat.trace().real();
  const double det = (nmat(0, 0) * nmat(1, 1) - nmat(0, 1) * nmat(1, 0)).real();
  // eigenvalues of nmat are real >= 0; solve the quadratic directly
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  std::array<double, 4> lam{std::sqrt(std::max(0.0, (tr + disc) / 2.0)),
                            std::sqrt(std::max(0.0, (tr - disc) / 2.0)), 0.0, 0.0};
  std::sort(lam.begin(), lam.end(), std::greater<>());
  const double conc = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
  return conc * conc;
}

/// Three-tangle as four times the modulus of the degree-4 hyperdeterminant
/// of the 2x2x2 amplitude tensor.
inline double oracle_three_tangle(const ThreeQubitState& state) {
  const auto c = [&](int i, int j, int k) { return state.amp(i, j, k); };
  const cplx d1 = c(0, 0, 0) * c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 1) +
                  c(0, 0, 1) * c(0, 0, 1) * c(1, 1, 0) * c(1, 1, 0) +
                  c(0, 1, 0) * c(0, 1, 0) * c(1, 0, 1) * c(1, 0, 1) +
                  c(1, 0, 0) * c(1, 0, 0) * c(0, 1, 1) * c(0, 1, 1);
  const cplx d2 = c(0, 0, 0) * c(1, 1, 1) * c(0, 1, 1) * c(1, 0, 0) +
                  c(0, 0, 0) * c(1, 1, 1) * c(1, 0, 1) * c(0, 1, 0) +
                  c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 0) * c(0, 0, 1) +
                  c(0, 1, 1) * c(1, 0, 0) * c(1, 0, 1) * c(0, 1, 0) +
                  c(0, 1, 1) * c(1, 0, 0) * c(1, 1, 0) * c(0, 0, 1) +
                  c(1, 0, 1) * c(0, 1, 0) * c(1, 1, 0) * c(0, 0, 1);
  const cplx d3 = c(0, 0, 0) * c(1, 1, 0) * c(1, 0, 1) * c(0, 1, 1) +
                  c(1, 1, 1) * c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

/// Same seven measures as TangleReport, density-matrix route only.
struct OracleReport {
  double tau_abc;
  double tau_bc, tau_ac, tau_ab;
  double tau_a_bc, tau_b_ca, tau_c_ab;
  std::array<double, 3> ckw_residuals;
};

inline OracleReport oracle_report(const ThreeQubitState& state) {
  OracleReport r;
  r.tau_abc = oracle_three_tangle(state);
  r.tau_bc = oracle_two_tangle(state, Pair::bc);
  r.tau_ac = oracle_two_tangle(state, Pair::ca);
  r.tau_ab = oracle_two_tangle(state, Pair::ab);
  r.tau_a_bc = oracle_concurrence_one_vs_rest(state, Qubit::a);
  r.tau_b_ca = oracle_concurrence_one_vs_rest(state, Qubit::b);
  r.tau_c_ab = oracle_concurrence_one_vs_rest(state, Qubit::c);
  r.ckw_residuals = {r.tau_abc - (r.tau_a_bc - r.tau_ac - r.tau_ab),
                     r.tau_abc - (r.tau_b_ca - r.tau_ab - r.tau_bc),
                     r.tau_abc - (r.tau_c_ab - r.tau_ac - r.tau_bc)};
  return r;
}

}  // namespace trivec
