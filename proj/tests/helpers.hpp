#pragma once

#include <string>

#include "trivec/trivec.hpp"

#ifndef TRIVEC_FIXTURE_DIR
#define TRIVEC_FIXTURE_DIR "fixtures"
#endif

namespace testutil {

using namespace trivec;

inline std::string fixture(const std::string& name) {
  return std::string(TRIVEC_FIXTURE_DIR) + "/" + name;
}

template <typename Derived>
double dist(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Vec8c amps8(std::initializer_list<cplx> values) {
  Vec8c v;
  int n = 0;
  for (const cplx z : values) v[n++] = z;
  return v;
}

inline Vec6c vec6(std::initializer_list<cplx> values, double denom = 1.0) {
  Vec6c v;
  int n = 0;
  for (const cplx z : values) v[n++] = z / denom;
  return v;
}

inline Vec3c vec3(std::initializer_list<cplx> values, double denom = 1.0) {
  Vec3c v;
  int n = 0;
  for (const cplx z : values) v[n++] = z / denom;
  return v;
}

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
  return expm_unitary(Mat2c(axis[0] * pauli('x') + axis[1] * pauli('y') + axis[2] * pauli('z')),
                      theta);
}

inline Mat4c random_su4(RandomStream& rng) {
  return expm_unitary(random_traceless_hermitian(rng), rng.uniform() * 2.0);
}

/// Random unit-determinant 2x2 complex matrix; generically non-unitary.
inline Mat2c random_sl2c(RandomStream& rng) {
  Mat2c g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = cplx(rng.normal(), rng.normal());
  const cplx det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  return g / std::sqrt(det);
}

/// Adjoint SO(3) image of a single-qubit unitary.
inline Mat3d adjoint_rotation(const Mat2c& u) {
  const char ax[3] = {'x', 'y', 'z'};
  Mat3d r;
  for (int n = 0; n < 3; ++n)
    for (int k = 0; k < 3; ++k)
      r(n, k) = (pauli(ax[n]) * u * pauli(ax[k]) * u.adjoint()).trace().real() / 2.0;
  return r;
}

}  // namespace testutil
