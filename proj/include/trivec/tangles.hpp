#pragma once

#include <array>

#include "trivec/abc.hpp"

namespace trivec {

inline constexpr double kTangleClampTol = 1e-12;
inline constexpr double kTripleAgreementTol = 1e-10;
inline constexpr double kGaugedAgreementTol = 1e-9;

namespace detail {

inline double clamp_tangle(double v, const char* what) {
  if (v < -kTangleClampTol)
    throw consistency_error(std::string(what) + " is negative beyond round-off: " + std::to_string(v));
  return v < 0.0 ? 0.0 : v;
}

}  // namespace detail

/// Genuine tripartite entanglement, 8|A.A|; A, B and C must agree.
inline double three_tangle(const VectorTriple& t) {
  const double ta = 8.0 * std::abs(bilinear_dot(t.A, t.A));
  const double tb = 8.0 * std::abs(bilinear_dot(t.B, t.B));
  const double tc = 8.0 * std::abs(bilinear_dot(t.C, t.C));
  if (std::abs(ta - tb) > kTripleAgreementTol || std::abs(ta - tc) > kTripleAgreementTol)
    throw consistency_error("three-tangle disagrees between A, B, C routes");
  return ta;
}

inline double three_tangle(const ThreeQubitState& state) {
  return three_tangle(extract_triple(state));
}

/// Squared one-vs-rest concurrences (tau_a(bc), tau_b(ca), tau_c(ab)):
/// 4(B*.B + C*.C) and cyclic.
inline std::array<double, 3> concurrences(const VectorTriple& t) {
  const double ha = t.A.squaredNorm();
  const double hb = t.B.squaredNorm();
  const double hc = t.C.squaredNorm();
  return {detail::clamp_tangle(4.0 * (hb + hc), "tau_a(bc)"),
          detail::clamp_tangle(4.0 * (hc + ha), "tau_b(ca)"),
          detail::clamp_tangle(4.0 * (ha + hb), "tau_c(ab)")};
}

inline std::array<double, 3> concurrences(const ThreeQubitState& state) {
  return concurrences(extract_triple(state));
}

/// Two-tangles (tau_(bc), tau_(ac), tau_(ab)) in the gauge-invariant form
/// 4(A.A* - |A.A|) and cyclic. The analogous gauged form is 8 AI.AI; the
/// two agree because AI.AI = (A.A* - |A.A|)/2 once AR.AI = 0, which fixes
/// the coefficient at 4.
inline std::array<double, 3> two_tangles(const VectorTriple& t) {
  const auto one = [](const Vec3c& x, const char* what) {
    return detail::clamp_tangle(4.0 * (x.squaredNorm() - std::abs(bilinear_dot(x, x))), what);
  };
  const std::array<double, 3> out{one(t.A, "tau_(bc)"), one(t.B, "tau_(ac)"),
                                  one(t.C, "tau_(ab)")};
  const GaugedTriple g = fix_gauge(t);
  if (!g.degenerate) {
    const double res = std::max({std::abs(out[0] - 8.0 * g.AI.squaredNorm()),
                                 std::abs(out[1] - 8.0 * g.BI.squaredNorm()),
                                 std::abs(out[2] - 8.0 * g.CI.squaredNorm())});
    if (res > kGaugedAgreementTol)
      throw consistency_error("gauge-invariant and gauged two-tangles disagree");
  }
  return out;
}

inline std::array<double, 3> two_tangles(const ThreeQubitState& state) {
  return two_tangles(extract_triple(state));
}

/// All seven measures plus the monogamy residuals, which vanish
/// identically for pure states: tau_abc = tau_x(yz) - tau_(xy) - tau_(xz).
struct TangleReport {
  double tau_abc;
  double tau_bc, tau_ac, tau_ab;
  double tau_a_bc, tau_b_ca, tau_c_ab;
  std::array<double, 3> ckw_residuals;
};

inline TangleReport tangle_report(const ThreeQubitState& state) {
  const VectorTriple t = extract_triple(state);
  const double t3 = detail::clamp_tangle(three_tangle(t), "tau_abc");
  const auto two = two_tangles(t);
  const auto one = concurrences(t);
  return {t3,
          two[0],
          two[1],
          two[2],
          one[0],
          one[1],
          one[2],
          {t3 - (one[0] - two[1] - two[2]),
           t3 - (one[1] - two[2] - two[0]),
           t3 - (one[2] - two[1] - two[0])}};
}

/// Residuals of 8 AR.AR = tau_abc + tau_(bc) and its cyclic partners.
/// Diagnostic only; meaningful when the gauge is non-degenerate.
inline Vec3d real_part_identity(const GaugedTriple& g, const TangleReport& r) {
  return {8.0 * g.AR.squaredNorm() - (r.tau_abc + r.tau_bc),
          8.0 * g.BR.squaredNorm() - (r.tau_abc + r.tau_ac),
          8.0 * g.CR.squaredNorm() - (r.tau_abc + r.tau_ab)};
}

}  // namespace trivec
