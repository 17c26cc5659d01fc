#pragma once

#include "trivec/pluecker.hpp"

namespace trivec {

/// Halves of a q-vector: alpha = (q1,q2,q3), beta = (q4,q5,q6).
/// alpha.alpha = -beta.beta since q.q = 0.
struct AlphaBeta {
  int partition;
  Vec3c alpha;
  Vec3c beta;
};

inline AlphaBeta split(const QVector& q) {
  return {q.partition, q.v.head<3>(), q.v.tail<3>()};
}

/// The three complex 3-vectors carrying all bivector information:
/// A = alpha(3), B = alpha(1), C = alpha(2). Local unitaries on qubit a
/// rotate A exactly like that qubit's Bloch vector, and likewise for B/b
/// and C/c. A.A = B.B = C.C.
struct VectorTriple {
  Vec3c A;
  Vec3c B;
  Vec3c C;
};

inline constexpr double kInterPartitionTol = 1e-9;

/// Computes all three partitions and cross-checks the cyclic relations
/// beta(1) = -i alpha(2), beta(2) = -i alpha(3), beta(3) = -i alpha(1)
/// before returning; a violation means a convention bug upstream.
inline VectorTriple extract_triple(const ThreeQubitState& state) {
  const AlphaBeta q1 = split(qvector(state, 1));
  const AlphaBeta q2 = split(qvector(state, 2));
  const AlphaBeta q3 = split(qvector(state, 3));
  const double res = std::max({max_abs(Vec3c(q1.beta + kI * q2.alpha)),
                               max_abs(Vec3c(q2.beta + kI * q3.alpha)),
                               max_abs(Vec3c(q3.beta + kI * q1.alpha))});
  if (res > kInterPartitionTol)
    throw consistency_error("inter-partition relations violated, residual " + std::to_string(res));
  return {q3.alpha, q1.alpha, q2.alpha};
}

/// Gauge-fixed triple: a global phase phi is chosen so that the real and
/// imaginary parts of e^{2i phi} A are orthogonal with the real part
/// dominant; the same phase orthogonalizes B and C automatically.
struct GaugedTriple {
  double phase;
  Vec3d AR, AI, BR, BI, CR, CI;
  /// True when |A.A| vanished and phi = 0 was taken by convention; the
  /// dominance condition |AR| >= |AI| is not guaranteed then.
  bool degenerate;
};

inline constexpr double kGaugeDegenerateTol = 1e-12;

inline GaugedTriple fix_gauge(const VectorTriple& t) {
  const cplx aa = bilinear_dot(t.A, t.A);
  double phi = 0.0;
  bool degenerate = true;
  if (std::abs(aa) >= kGaugeDegenerateTol) {
    degenerate = false;
    phi = -std::arg(aa) / 4.0;  // arg in (-pi, pi]
    const cplx g = std::exp(cplx(0.0, 2.0 * phi));
    const Vec3c ga = g * t.A;
    if (ga.imag().norm() > ga.real().norm()) phi += M_PI / 4.0;
  }
  const cplx g = std::exp(cplx(0.0, 2.0 * phi));
  const Vec3c ga = g * t.A, gb = g * t.B, gc = g * t.C;
  return {phi, ga.real(), ga.imag(), gb.real(), gb.imag(),
          gc.real(), gc.imag(), degenerate};
}

}  // namespace trivec
