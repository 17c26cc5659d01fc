#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trivec/pluecker.hpp"
#include "trivec/state.hpp"

namespace trivec {

// ---- Pauli building blocks on an ordered qubit pair ----

inline const Mat2c& pauli(char axis) {
  static const Mat2c x = (Mat2c() << 0, 1, 1, 0).finished();
  static const Mat2c y = (Mat2c() << 0, -kI, kI, 0).finished();
  static const Mat2c z = (Mat2c() << 1, 0, 0, -1).finished();
  static const Mat2c id = Mat2c::Identity();
  switch (axis) {
    case 'x': return x;
    case 'y': return y;
    case 'z': return z;
    case 'I': return id;
    default: throw validation_error(std::string("unknown Pauli axis '") + axis + "'");
  }
}

/// The 15 two-letter labels: first letter acts on the first qubit of the
/// ordered pair, second on the second. "xI" is a single-qubit term.
inline const std::array<std::string, 15>& pauli_pair_labels() {
  static const std::array<std::string, 15> labels{
      "xI", "yI", "zI", "Ix", "Iy", "Iz",
      "xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz"};
  return labels;
}

inline Mat4c pauli_pair_op(const std::string& label) {
  if (label.size() != 2) throw validation_error("pair operator label must have two letters");
  Mat4c out;
  const Mat2c& f = pauli(label[0]);
  const Mat2c& s = pauli(label[1]);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = f(r, c) * s;
  return out;
}

/// One Hermitian basis element tau_{n,m} tagged with its pair and label.
struct PauliPairOp {
  Pair pair;
  std::string label;
  Mat4c matrix;
};

/// Antisymmetric 6x6 arrangement of the 15 su(4) generators for one
/// ordered pair. t_{n,m} = i tau_{n,m} obey
///   [t_{nm}, t_{kp}] = 2(d_{mp} t_{nk} + d_{nk} t_{mp}
///                       - d_{mk} t_{np} - d_{np} t_{mk}),
/// the structure constants of so(6) under t_{nm} <-> 2 I_{nm}.
class GeneratorTable {
 public:
  explicit GeneratorTable(Pair pair) : pair_(pair) {
    build_from_clifford();
    check_commutation();
    compare_against_explicit_table();
  }

  Pair pair() const { return pair_; }

  /// Hermitian tau_{n,m}; 1-based indices, antisymmetric in (n, m).
  Mat4c tau(int n, int m) const {
    if (n == m) return Mat4c::Zero();
    if (n > m) return -kI * t_[index(n, m)];
    return kI * t_[index(m, n)];
  }

  /// Skew t_{n,m} = i tau_{n,m}.
  Mat4c t(int n, int m) const {
    if (n == m) return Mat4c::Zero();
    if (n > m) return t_[index(n, m)];
    return -t_[index(m, n)];
  }

  const std::string& label(int n, int m) const { return labels_[index(std::max(n, m), std::min(n, m))]; }

  PauliPairOp op(int n, int m) const { return {pair_, label(n, m), tau(n, m)}; }

  /// Cells where the Clifford products differ from the directly
  /// transcribed table. Empty: the two constructions agree everywhere
  /// (in particular t(5,2) is -i yy, the product e5 e2, not yx).
  const std::vector<std::pair<int, int>>& construction_disagreements() const {
    return disagreements_;
  }

 private:
  static int index(int n, int m) {  // n > m, both 1-based
    return (n - 1) * (n - 2) / 2 + (m - 1);
  }

  void build_from_clifford() {
    // First-grade elements: five anticommuting skew matrices with
    // e_i e_j + e_j e_i = -2 delta_{ij}.
    std::array<Mat4c, 6> e;
    e[1] = -kI * pauli_pair_op("xz");
    e[2] = -kI * pauli_pair_op("yz");
    e[3] = -kI * pauli_pair_op("zz");
    e[4] = -kI * pauli_pair_op("Iy");
    e[5] = kI * pauli_pair_op("Ix");
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        const Mat4c anti = e[i] * e[j] + e[j] * e[i];
        const Mat4c want = (i == j) ? Mat4c(-2.0 * Mat4c::Identity()) : Mat4c(Mat4c::Zero());
        if (max_abs(Mat4c(anti - want)) > 1e-14)
          throw consistency_error("Clifford generators fail the anticommutation relations");
      }
    // t_{6i} = e_i, t_{nm} = e_n e_m for n < 6.
    for (int n = 2; n <= 6; ++n)
      for (int m = 1; m < n; ++m)
        t_[index(n, m)] = (n == 6) ? e[m] : Mat4c(e[n] * e[m]);
    assign_labels();
  }

  void assign_labels() {
    for (int n = 2; n <= 6; ++n)
      for (int m = 1; m < n; ++m) {
        const Mat4c h = tau(n, m);
        for (const auto& lab : pauli_pair_labels()) {
          const Mat4c basis = pauli_pair_op(lab);
          const double overlap = (h * basis).trace().real() / 4.0;
          if (std::abs(std::abs(overlap) - 1.0) < 1e-12) {
            labels_[index(n, m)] = (overlap > 0 ? "" : "-") + lab;
            break;
          }
        }
      }
  }

  void check_commutation() {
    for (int n = 2; n <= 6; ++n)
      for (int m = 1; m < n; ++m)
        for (int k = 2; k <= 6; ++k)
          for (int p = 1; p < k; ++p) {
            const Mat4c lhs = t(n, m) * t(k, p) - t(k, p) * t(n, m);
            const auto d = [](int u, int v) { return u == v ? 1.0 : 0.0; };
            const Mat4c rhs = 2.0 * (d(m, p) * t(n, k) + d(n, k) * t(m, p) -
                                     d(m, k) * t(n, p) - d(n, p) * t(m, k));
            if (max_abs(Mat4c(lhs - rhs)) > 1e-13)
              throw consistency_error("generator table violates the so(6) structure constants");
          }
  }

  void compare_against_explicit_table() {
    // Direct transcription of the displayed generator matrix, for
    // cross-checking the Clifford products cell by cell.
    static const std::map<std::pair<int, int>, std::pair<int, std::string>> explicit_table{
        {{2, 1}, {+1, "zI"}}, {{3, 1}, {-1, "yI"}}, {{3, 2}, {+1, "xI"}},
        {{4, 1}, {-1, "xx"}}, {{4, 2}, {-1, "yx"}}, {{4, 3}, {-1, "zx"}},
        {{5, 1}, {-1, "xy"}}, {{5, 2}, {-1, "yy"}}, {{5, 3}, {-1, "zy"}},
        {{5, 4}, {+1, "Iz"}}, {{6, 1}, {-1, "xz"}}, {{6, 2}, {-1, "yz"}},
        {{6, 3}, {-1, "zz"}}, {{6, 4}, {-1, "Iy"}}, {{6, 5}, {+1, "Ix"}}};
    for (const auto& [nm, entry] : explicit_table) {
      const Mat4c want = double(entry.first) * pauli_pair_op(entry.second);
      if (max_abs(Mat4c(tau(nm.first, nm.second) - want)) > 1e-14)
        disagreements_.push_back(nm);
    }
  }

  Pair pair_;
  std::array<Mat4c, 15> t_;
  std::array<std::string, 15> labels_;
  std::vector<std::pair<int, int>> disagreements_;
};

inline const GeneratorTable& generator_table(Pair pair) {
  static const GeneratorTable bc(Pair::bc);
  static const GeneratorTable ca(Pair::ca);
  static const GeneratorTable ab(Pair::ab);
  switch (pair) {
    case Pair::bc: return bc;
    case Pair::ca: return ca;
    default: return ab;
  }
}

inline GeneratorTable build_generator_table(Pair pair) { return GeneratorTable(pair); }

// ---- pair Hamiltonians and their antisymmetric coefficient matrices ----

/// Hermitian 4x4 operator on an ordered pair together with its expansion
/// H = sum_{m<n} f_{nm} tau_{nm}; f is real antisymmetric, an so(6)
/// element. A traceful part only shifts the global phase and is stripped.
class PairHamiltonian {
 public:
  PairHamiltonian(Pair pair, const Mat4c& h) : pair_(pair), h_(h) {
    if (!is_hermitian(h, 1e-10)) throw validation_error("pair Hamiltonian must be Hermitian");
    const cplx tr = h_.trace();
    trace_stripped_ = std::abs(tr) > 1e-12;
    if (trace_stripped_) h_ -= (tr / 4.0) * Mat4c::Identity();
    const GeneratorTable& g = generator_table(pair_);
    f_.setZero();
    for (int n = 2; n <= 6; ++n)
      for (int m = 1; m < n; ++m) {
        const double fnm = (h_ * g.tau(n, m)).trace().real() / 4.0;
        f_(n - 1, m - 1) = fnm;
        f_(m - 1, n - 1) = -fnm;
      }
  }

  /// Build from generator labels, H = sum coeffs[label] * sigma_label.
  PairHamiltonian(Pair pair, const std::map<std::string, double>& coeffs)
      : PairHamiltonian(pair, assemble(coeffs)) {}

  Pair pair() const { return pair_; }
  const Mat4c& matrix() const { return h_; }
  const Mat6d& f() const { return f_; }
  bool trace_was_stripped() const { return trace_stripped_; }

 private:
  static Mat4c assemble(const std::map<std::string, double>& coeffs) {
    Mat4c h = Mat4c::Zero();
    for (const auto& [label, value] : coeffs) h += value * pauli_pair_op(label);
    return h;
  }

  Pair pair_;
  Mat4c h_;
  Mat6d f_;
  bool trace_stripped_;
};

// ---- the 6x6 lift driving bivector components ----

/// 6x6 matrix H~ with i d/dt p = H~ p induced on the six row minors by
/// i d/dt c_{0,1} = H c_{0,1}. Hermitian for Hermitian H; for traceless H
/// it satisfies H~^T Omega + Omega H~ = 0 and Tr H~ = 3 Tr H = 0, and
/// -i U_pq^dagger H~ U_pq is real antisymmetric (equal to 2f).
struct LiftedHamiltonian {
  Mat6c matrix;
};

inline LiftedHamiltonian lift(const PairHamiltonian& ham) {
  const Mat4c& h = ham.matrix();
  Mat6c m;
  m << h(0, 0) + h(1, 1), h(1, 2), h(1, 3), -h(0, 2), -h(0, 3), 0,
       h(2, 1), h(0, 0) + h(2, 2), h(2, 3), h(0, 1), 0, -h(0, 3),
       h(3, 1), h(3, 2), h(0, 0) + h(3, 3), 0, h(0, 1), h(0, 2),
       -h(2, 0), h(1, 0), 0, h(1, 1) + h(2, 2), h(2, 3), -h(1, 3),
       -h(3, 0), 0, h(1, 0), h(3, 2), h(1, 1) + h(3, 3), h(1, 2),
       0, -h(3, 0), h(2, 0), -h(3, 1), h(2, 1), h(2, 2) + h(3, 3);
  return {m};
}

// ---- dual-track evolution ----

inline constexpr double kDualTrackTol = 1e-8;

struct EvolveResult {
  ThreeQubitState state;           // exp(-iHt) applied on the pair
  std::array<QVector, 3> qvectors; // the pair's partition propagated by exp(2ft)
  double track_residual;           // propagated vs recomputed, that partition
};

inline EvolveResult evolve_dual(const ThreeQubitState& state, const PairHamiltonian& ham,
                                double t) {
  const Mat4c u = expm_unitary(ham.matrix(), t);
  const ThreeQubitState evolved = apply_unitary(state, u, ham.pair());

  const int s = partition_of(ham.pair());
  const Mat6d rot = expm_real(Mat6d(2.0 * t * ham.f()));
  const Vec6c propagated = rot * qvector(state, s).v;
  const double residual = max_abs(Vec6c(propagated - qvector(evolved, s).v));
  if (residual > kDualTrackTol)
    throw consistency_error("state-space and q-space tracks disagree: residual " +
                            std::to_string(residual));

  std::array<QVector, 3> qs{qvector(evolved, 1), qvector(evolved, 2), qvector(evolved, 3)};
  qs[s - 1] = QVector{s, propagated};
  return {evolved, qs, residual};
}

// ---- explicit so(6) <-> su(4) correspondence ----

/// Canonical so(6) basis element: (I_nm)_{nm} = -1, (I_nm)_{mn} = +1.
inline Mat6d so6_basis(int n, int m) {
  Mat6d out = Mat6d::Zero();
  if (n == m) return out;
  out(n - 1, m - 1) = -1.0;
  out(m - 1, n - 1) = 1.0;
  return out;
}

/// Rotation exp(angle * I_nm) in the (n,m) coordinate plane.
inline Mat6d so6_rotation(int n, int m, double angle) {
  Mat6d r = Mat6d::Identity();
  const double cs = std::cos(angle), sn = std::sin(angle);
  r(n - 1, n - 1) = cs;
  r(m - 1, m - 1) = cs;
  r(n - 1, m - 1) = -sn;
  r(m - 1, n - 1) = sn;
  return r;
}

/// The SU(4) preimage of exp(X): writing X = sum_{n>m} x_nm I_nm, returns
/// exp(1/2 sum x_nm t_nm). Double-valued globally (exp(2 pi I_nm) = 1 but
/// exp(pi t_nm) = -1); this picks the continuous branch through identity.
inline Mat4c so6_to_su4(const Mat6d& x, Pair pair) {
  if (max_abs(Mat6d(x + x.transpose())) > 1e-12)
    throw validation_error("so(6) coefficient matrix must be antisymmetric");
  const GeneratorTable& g = generator_table(pair);
  Mat4c k = Mat4c::Zero();
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) k += 0.5 * x(m - 1, n - 1) * g.tau(n, m);
  // U = exp(i k) with k Hermitian
  return expm_unitary(k, -1.0);
}

/// Single-plane rotation applied on both tracks: the SU(4) preimage on
/// the state, the plane rotation on the pair's partition q-vector.
inline EvolveResult rotate_dual(const ThreeQubitState& state, Pair pair, int n, int m,
                                double angle) {
  const Mat4c u = so6_to_su4(Mat6d(angle * so6_basis(n, m)), pair);
  const ThreeQubitState evolved = apply_unitary(state, u, pair);
  const int s = partition_of(pair);
  const Vec6c propagated = so6_rotation(n, m, angle) * qvector(state, s).v;
  const double residual = max_abs(Vec6c(propagated - qvector(evolved, s).v));
  if (residual > kDualTrackTol)
    throw consistency_error("state-space and q-space tracks disagree: residual " +
                            std::to_string(residual));
  std::array<QVector, 3> qs{qvector(evolved, 1), qvector(evolved, 2), qvector(evolved, 3)};
  qs[s - 1] = QVector{s, propagated};
  return {evolved, qs, residual};
}

}  // namespace trivec
