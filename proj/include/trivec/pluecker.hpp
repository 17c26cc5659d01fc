#pragma once

#include <array>
#include <utility>

#include "trivec/state.hpp"

namespace trivec {

/// Row pairs (r, r') of the six independent bivector components, in the
/// fixed order (12, 13, 14, 23, 24, 34). Zero-based.
inline constexpr std::array<std::pair<int, int>, 6> kBivectorSlots{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// The symmetric quadric form: six anti-diagonal entries, +1 at
/// (1,6),(6,1),(3,4),(4,3) and -1 at (2,5),(5,2). This is the unique
/// anti-diagonal sign pattern for which every decomposable bivector
/// satisfies p^T Omega p = 0 with the component order above.
inline const Mat6d& omega() {
  static const Mat6d w = [] {
    Mat6d m = Mat6d::Zero();
    m(0, 5) = m(5, 0) = 1.0;
    m(2, 3) = m(3, 2) = 1.0;
    m(1, 4) = m(4, 1) = -1.0;
    return m;
  }();
  return w;
}

/// Change of variables q = U_pq^dagger p. Unitary and satisfies
/// U_pq^T Omega U_pq = 1, which turns the quadric form into the plain
/// bilinear dot product; both properties are unit-tested.
inline const Mat6c& u_pq() {
  static const Mat6c u = [] {
    Mat6c m;
    const double r = 1.0 / std::sqrt(2.0);
    m << kI, 1, 0, 0, 0, 0,
         0, 0, 0, -1, kI, 0,
         0, 0, -kI, 0, 0, 1,
         0, 0, kI, 0, 0, 1,
         0, 0, 0, 1, kI, 0,
         -kI, 1, 0, 0, 0, 0;
    return Mat6c(r * m);
  }();
  return u;
}

/// Magic Bell basis transform on a qubit pair; rows are the bras of the
/// phased Bell states, so conjugation turns SU(2)xSU(2) into SO(4).
inline const Mat4c& u_bell() {
  static const Mat4c u = [] {
    Mat4c m;
    const double r = 1.0 / std::sqrt(2.0);
    m << 0, kI, kI, 0,
         0, -1, 1, 0,
         kI, 0, 0, -kI,
         1, 0, 0, 1;
    return Mat4c(r * m);
  }();
  return u;
}

/// Antisymmetric 4x4 matrix of 2x2 row minors of one partition matrix.
struct PlueckerMatrix {
  int partition;
  Mat4c entries;
};

/// The six independent minors in kBivectorSlots order.
struct PVector {
  int partition;
  Vec6c v;
};

/// Plucker vector after the U_pq change of variables. Satisfies the
/// unconjugated q.q = 0.
struct QVector {
  int partition;
  Vec6c v;
};

inline PVector pluecker_pvector(const ThreeQubitState& state, int s) {
  const Mat42c m = partition_matrix(state, s).m;
  Vec6c p;
  for (int n = 0; n < 6; ++n) {
    const auto [r, rp] = kBivectorSlots[n];
    p[n] = m(r, 0) * m(rp, 1) - m(r, 1) * m(rp, 0);
  }
  return {s, p};
}

inline PlueckerMatrix pluecker_matrix(const ThreeQubitState& state, int s) {
  const PVector p = pluecker_pvector(state, s);
  Mat4c full = Mat4c::Zero();
  for (int n = 0; n < 6; ++n) {
    const auto [r, rp] = kBivectorSlots[n];
    full(r, rp) = p.v[n];
    full(rp, r) = -p.v[n];
  }
  return {s, full};
}

/// Residual of the decomposability constraint p^T Omega p.
inline cplx pluecker_residual(const Vec6c& p) {
  return bilinear_dot(Vec6c(omega() * p), p);
}

inline constexpr double kPlueckerTol = 1e-8;

inline QVector to_qvector(const PVector& p) {
  if (std::abs(pluecker_residual(p.v)) > kPlueckerTol)
    throw validation_error("not a decomposable bivector: p^T Omega p != 0");
  return {p.partition, Vec6c(u_pq().adjoint() * p.v)};
}

inline QVector qvector(const ThreeQubitState& state, int s) {
  return to_qvector(pluecker_pvector(state, s));
}

/// Partition-1 bivector components in the Bell basis:
/// P_B = U_B P U_B^T, flattened in kBivectorSlots order. Its unconjugated
/// self-dot is a local invariant; four times its modulus is the
/// three-tangle, and it equals 2 B.B identically.
inline Vec6c bell_basis_pvector(const ThreeQubitState& state) {
  const Mat4c pb = u_bell() * pluecker_matrix(state, 1).entries * u_bell().transpose();
  Vec6c out;
  for (int n = 0; n < 6; ++n) {
    const auto [r, rp] = kBivectorSlots[n];
    out[n] = pb(r, rp);
  }
  return out;
}

}  // namespace trivec
