#pragma once

#include <array>
#include <string>

#include "trivec/linalg.hpp"

namespace trivec {

enum class Qubit { a = 0, b = 1, c = 2 };
enum class Pair { bc = 0, ca = 1, ab = 2 };
enum class Subsystem { a, b, c, bc, ca, ab };

inline const char* name(Qubit q) { return q == Qubit::a ? "a" : (q == Qubit::b ? "b" : "c"); }
inline const char* name(Pair p) { return p == Pair::bc ? "bc" : (p == Pair::ca ? "ca" : "ab"); }

/// Partition s isolates one qubit from the remaining ordered pair:
/// 1 = a(bc), 2 = b(ca), 3 = c(ab).
inline int partition_of(Qubit q) { return static_cast<int>(q) + 1; }
inline int partition_of(Pair p) { return static_cast<int>(p) + 1; }
inline Pair pair_of_partition(int s) { return static_cast<Pair>(s - 1); }

inline constexpr double kNormTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;

/// Pure three-qubit state. Amplitudes are indexed by the basis label
/// (i,j,k) at linear position 4i+2j+k, qubit a most significant.
/// Global phase is significant data and is never canonicalized away.
class ThreeQubitState {
 public:
  explicit ThreeQubitState(const Vec8c& amplitudes) : amps_(amplitudes) {
    if (!all_finite(amps_)) throw validation_error("state amplitudes must be finite");
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTol)
      throw validation_error("state is not normalized: |psi|^2 = " + std::to_string(n2));
  }

  const Vec8c& amplitudes() const { return amps_; }
  cplx amp(int i, int j, int k) const { return amps_[4 * i + 2 * j + k]; }

  bool operator==(const ThreeQubitState& o) const { return amps_ == o.amps_; }

 private:
  Vec8c amps_;
};

/// Scale to unit norm. Never called implicitly by the library.
inline ThreeQubitState normalize(const Vec8c& amplitudes) {
  if (!all_finite(amplitudes)) throw validation_error("state amplitudes must be finite");
  const double n = amplitudes.norm();
  if (n == 0.0) throw validation_error("cannot normalize the zero vector");
  return ThreeQubitState(Vec8c(amplitudes / n));
}

namespace detail {

/// Row/column placement of amplitude (i,j,k) in the 4x2 matrix of
/// partition s. The column is the isolated qubit's index; the row runs
/// over the remaining pair in cyclic order:
///   s=1: col i, row 2j+k    (pair bc)
///   s=2: col j, row 2k+i    (pair ca)
///   s=3: col k, row 2i+j    (pair ab)
inline void partition_slot(int s, int i, int j, int k, int& row, int& col) {
  switch (s) {
    case 1: row = 2 * j + k; col = i; break;
    case 2: row = 2 * k + i; col = j; break;
    default: row = 2 * i + j; col = k; break;
  }
}

inline void check_partition_id(int s) {
  if (s < 1 || s > 3) throw validation_error("partition id must be 1, 2 or 3");
}

}  // namespace detail

/// The 4x2 rearrangement (c0, c1) of the amplitudes for one partition.
struct PartitionMatrix {
  int partition;
  Mat42c m;

  Vec4c c0() const { return m.col(0); }
  Vec4c c1() const { return m.col(1); }
};

inline PartitionMatrix partition_matrix(const ThreeQubitState& state, int s) {
  detail::check_partition_id(s);
  Mat42c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int row = 0, col = 0;
        detail::partition_slot(s, i, j, k, row, col);
        m(row, col) = state.amp(i, j, k);
      }
  return {s, m};
}

/// Inverse of partition_matrix: re-interleave a 4x2 arrangement into the
/// linear amplitude order. Lossless for every partition.
inline Vec8c interleave(const PartitionMatrix& pm) {
  Vec8c amps;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int row = 0, col = 0;
        detail::partition_slot(pm.partition, i, j, k, row, col);
        amps[4 * i + 2 * j + k] = pm.m(row, col);
      }
  return amps;
}

/// Apply a local 2x2 operator to one qubit without any unitarity or
/// normalization checks. Exists so determinant-one non-unitary operators
/// (SL(2,C) boosts) can be exercised; the checked path is apply_unitary.
inline Vec8c apply_local_operator(const Vec8c& amps, const Mat2c& g, Qubit q) {
  const int s = partition_of(q);
  PartitionMatrix pm{s, Mat42c::Zero()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int row = 0, col = 0;
        detail::partition_slot(s, i, j, k, row, col);
        pm.m(row, col) = amps[4 * i + 2 * j + k];
      }
  pm.m = Mat42c(pm.m * g.transpose());
  return interleave(pm);
}

/// Apply a 4x4 operator to an ordered qubit pair, unchecked.
inline Vec8c apply_pair_operator(const Vec8c& amps, const Mat4c& g, Pair p) {
  const int s = partition_of(p);
  PartitionMatrix pm{s, Mat42c::Zero()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int row = 0, col = 0;
        detail::partition_slot(s, i, j, k, row, col);
        pm.m(row, col) = amps[4 * i + 2 * j + k];
      }
  pm.m = Mat42c(g * pm.m);
  return interleave(pm);
}

inline ThreeQubitState apply_unitary(const ThreeQubitState& state, const Mat2c& u, Qubit q) {
  if (!is_unitary(u, kUnitaryTol)) throw validation_error("2x2 operator is not unitary");
  return ThreeQubitState(apply_local_operator(state.amplitudes(), u, q));
}

inline ThreeQubitState apply_unitary(const ThreeQubitState& state, const Mat4c& u, Pair p) {
  if (!is_unitary(u, kUnitaryTol)) throw validation_error("4x4 operator is not unitary");
  return ThreeQubitState(apply_pair_operator(state.amplitudes(), u, p));
}

/// Full 8x8 embedding of a pair operator (identity on the third qubit).
inline Mat8c embed_pair(const Mat4c& u, Pair p) {
  const int s = partition_of(p);
  Mat8c big = Mat8c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int row = 0, col = 0;
        detail::partition_slot(s, i, j, k, row, col);
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
              int row2 = 0, col2 = 0;
              detail::partition_slot(s, i2, j2, k2, row2, col2);
              if (col2 == col) big(4 * i2 + 2 * j2 + k2, 4 * i + 2 * j + k) = u(row2, row);
            }
      }
  return big;
}

inline Mat8c embed_single(const Mat2c& u, Qubit q) {
  Mat8c big = Mat8c::Zero();
  for (int n = 0; n < 8; ++n)
    for (int n2 = 0; n2 < 8; ++n2) {
      const int bit = 2 - static_cast<int>(q);
      if ((n & ~(1 << bit)) != (n2 & ~(1 << bit))) continue;
      big(n2, n) = u((n2 >> bit) & 1, (n >> bit) & 1);
    }
  return big;
}

/// Reduced density matrix; Hermitian with unit trace. Pair subsystems use
/// the same row order as the matching partition matrix.
struct ReducedDensity {
  Subsystem subsystem;
  Eigen::MatrixXcd matrix;
};

inline ReducedDensity reduced_density(const ThreeQubitState& state, Subsystem sub) {
  switch (sub) {
    case Subsystem::a:
    case Subsystem::b:
    case Subsystem::c: {
      const int s = static_cast<int>(sub) + 1;
      const Mat42c m = partition_matrix(state, s).m;
      // rho[x,y] = sum_row m(row,x) conj(m(row,y))
      Mat2c rho = (m.adjoint() * m).transpose();
      return {sub, rho};
    }
    default: {
      const int s = static_cast<int>(sub) - 2;  // complement qubit's partition
      const Mat42c m = partition_matrix(state, s).m;
      Mat4c rho = m * m.adjoint();
      return {sub, rho};
    }
  }
}

/// Bloch vector m_n = Tr(rho sigma_n) of a single qubit.
inline Vec3d bloch_vector(const ThreeQubitState& state, Qubit q) {
  const Mat2c rho = reduced_density(state, static_cast<Subsystem>(q)).matrix;
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), rho(0, 0).real() - rho(1, 1).real()};
}

/// 16 seeded standard normals -> 8 complex amplitudes -> normalize.
inline ThreeQubitState random_state(RandomStream& rng) {
  Vec8c amps;
  for (int n = 0; n < 8; ++n) {
    const double re = rng.normal();
    const double im = rng.normal();
    amps[n] = cplx(re, im);
  }
  return normalize(amps);
}

// ---- named states ----

inline ThreeQubitState basis_state(int i, int j, int k) {
  Vec8c amps = Vec8c::Zero();
  amps[4 * i + 2 * j + k] = 1.0;
  return ThreeQubitState(amps);
}

inline ThreeQubitState w_state() {
  Vec8c amps = Vec8c::Zero();
  const double v = 1.0 / std::sqrt(3.0);
  amps[1] = amps[2] = amps[4] = v;
  return ThreeQubitState(amps);
}

/// GHZ with the e^{-i pi/4} phase that makes its A, B, C vectors real.
inline ThreeQubitState ghz_state() {
  Vec8c amps = Vec8c::Zero();
  const cplx g = std::exp(cplx(0.0, -M_PI / 4)) / std::sqrt(2.0);
  amps[0] = amps[7] = g;
  return ThreeQubitState(amps);
}

/// (|000> + |111>)/sqrt(2), no extra phase.
inline ThreeQubitState ghz_state_plain() {
  Vec8c amps = Vec8c::Zero();
  amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
  return ThreeQubitState(amps);
}

/// Biseparable |0> (x) (|00> + |11>)/sqrt(2).
inline ThreeQubitState bs_state() {
  Vec8c amps = Vec8c::Zero();
  amps[0] = amps[3] = 1.0 / std::sqrt(2.0);
  return ThreeQubitState(amps);
}

}  // namespace trivec
