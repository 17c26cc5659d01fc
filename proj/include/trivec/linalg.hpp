#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace trivec {

using cplx = std::complex<double>;

using Vec3c = Eigen::Vector3cd;
using Vec4c = Eigen::Vector4cd;
using Vec6c = Eigen::Matrix<cplx, 6, 1>;
using Vec8c = Eigen::Matrix<cplx, 8, 1>;
using Vec3d = Eigen::Vector3d;

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat6c = Eigen::Matrix<cplx, 6, 6>;
using Mat8c = Eigen::Matrix<cplx, 8, 8>;
using Mat42c = Eigen::Matrix<cplx, 4, 2>;
using Mat3d = Eigen::Matrix3d;
using Mat6d = Eigen::Matrix<double, 6, 6>;

inline constexpr cplx kI{0.0, 1.0};

/// Input failed a precondition (bad norm, non-unitary operator, malformed file).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two internal routes that must agree did not; indicates a convention bug.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stored expectation failed during a verified run.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

inline bool is_unitary(const Mat2c& u, double tol) {
  return max_abs(Mat2c(u.adjoint() * u - Mat2c::Identity())) <= tol;
}

inline bool is_unitary(const Mat4c& u, double tol) {
  return max_abs(Mat4c(u.adjoint() * u - Mat4c::Identity())) <= tol;
}

inline bool is_hermitian(const Mat4c& h, double tol) {
  return max_abs(Mat4c(h - h.adjoint())) <= tol;
}

/// exp(-i*h*t) for Hermitian h, through the eigendecomposition.
inline Mat4c expm_unitary(const Mat4c& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(h);
  Vec4c phases;
  for (int k = 0; k < 4; ++k) phases[k] = std::exp(cplx(0.0, -es.eigenvalues()[k] * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat2c expm_unitary(const Mat2c& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat2c> es(h);
  Eigen::Vector2cd phases;
  for (int k = 0; k < 2; ++k) phases[k] = std::exp(cplx(0.0, -es.eigenvalues()[k] * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(m) for a real 6x6 matrix (Pade + scaling-and-squaring).
inline Mat6d expm_real(const Mat6d& m) { return m.exp(); }

/// Unconjugated bilinear dot x.y.
template <typename Derived>
cplx bilinear_dot(const Eigen::MatrixBase<Derived>& x, const Eigen::MatrixBase<Derived>& y) {
  return (x.transpose() * y)(0, 0);
}

/// Deterministic random stream: doubles are derived from raw mt19937_64
/// output, so sequences do not depend on the standard library's
/// distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  Vec3d unit_vector3() {
    Vec3d v{normal(), normal(), normal()};
    return v / v.norm();
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace trivec
