#pragma once

#include <array>
#include <vector>

#include "mukai_lab/hilbert.hpp"
#include "mukai_lab/mukai.hpp"

namespace mukai_lab {

// Values of theta_{F^r} on the ordered basis {1, C, Sigma, omega} of the
// span Omega, plus the bookkeeping classes driving the rank recursion.
struct ThetaTable {
  long r = 0;
  long n = 0;
  std::array<HilbClass, 4> values;  // order: 1, C, Sigma, omega
  HilbClass xi_c1;                  // c1(xi_r), defined for r >= 2
  HilbClass push_c1_omega;          // rho_*[c1(F^r) omega]_3, r >= 2
};

enum class OmegaBasisIndex { one = 0, c = 1, sigma = 2, omega = 3 };

struct IsometryReport {
  long r = 0;
  long n = 0;
  bool integral = false;
  bool gram_preserved = false;
  Int disc_vperp_omega;  // |disc| of v_r-perp intersect Omega
  Int disc_lambda_r;     // |disc| of Lambda_r
  bool surjective = false;
};

// beta_r = v_r - 2(n-1) C; self-pairing -2(n-1), perpendicular to v_r.
MukaiElement beta_r(const SurfaceModel& s, long r, long n);

// Basis {1 - (r-1) C, r C + omega} of Lambda_r = {x + yC + z omega :
// (r-1)x + y - rz = 0}; Gram [[0,-1],[-1,0]].
std::pair<MukaiElement, MukaiElement> lambda_r_basis(const SurfaceModel& s,
                                                     long r);

// theta_{F^1}(alpha) = -sigma(alpha^1) + alpha^0 (Sigma1 + n C1 - T).
HilbClass theta1(const SurfaceModel& s, long n, const MukaiElement& alpha);

// The full rank-two family formula, defined on every alpha.
HilbClass theta2_family(const SurfaceModel& s, long n,
                        const MukaiElement& alpha);

// The reduced rank-two formula; requires <alpha, v_2> = 0, where it agrees
// with theta2_family.
HilbClass theta2(const SurfaceModel& s, long n, const MukaiElement& alpha);

// Closed form for r >= 3: split alpha's Omega part as c beta_r + (x + yC +
// z omega), then x (C1 - (r-2) Sigma1) - y Sigma1 + z (r Sigma1 - C1) + c T.
// The transcendental part maps by -sigma in every rank.
HilbClass theta_r_closed(const SurfaceModel& s, long r, long n,
                         const MukaiElement& alpha);

// Rank dispatch (family-map semantics: defined on all alpha).
HilbClass theta_apply(const SurfaceModel& s, long r, long n,
                      const MukaiElement& alpha);

// Rational-linear extension: theta(alpha / d) = theta(alpha) / d.
HilbClass theta_apply_scaled(const SurfaceModel& s, long r, long n,
                             const MukaiElement& numerator, const Int& denom);

// Tables for r = 2 .. r_max built by the rank recursion from the rank-two
// seeds; the internal checkpoints (c1(xi_3), vanishing of c1(xi_r) and the
// push-forward values from rank four on) are enforced and raise
// RECURSION_MISMATCH on violation.
std::vector<ThetaTable> build_theta_recursive(const SurfaceModel& s, long n,
                                              long r_max);

// Certify that theta_r is an integral isometry of v_r-perp onto the
// Beauville lattice: integrality, exact Gram preservation on
// {beta_r} + Lambda_r basis (+ a transcendental sample when present), and
// the discriminant counts |disc| = 2(n-1) and 1 forcing index one.
IsometryReport verify_isometry(const SurfaceModel& s, long r, long n);

}  // namespace mukai_lab
