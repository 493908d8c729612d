#pragma once

#include <vector>

#include "mukai_lab/mukai.hpp"

namespace mukai_lab {

// Class in H^2(S^[n]; Z) = sigma(H^2(S; Z)) + Z T, with an optional common
// denominator `scale` for rational intermediates (integral classes have
// scale == 1; the class is (pic, trans, t) / scale, gcd-reduced).
struct HilbClass {
  IntVec pic;    // coordinates over the images of the Picard basis
  IntVec trans;  // images of the transcendental basis; empty means zero
  Int t;         // coefficient of T
  Int scale = 1;

  bool is_integral() const { return scale == 1; }
  bool is_zero() const;
  // Divide out gcd(pic, trans, t, scale), make scale positive.
  void reduce();

  friend bool operator==(const HilbClass&, const HilbClass&) = default;
};

HilbClass operator+(const HilbClass&, const HilbClass&);
HilbClass operator-(const HilbClass&, const HilbClass&);
HilbClass operator*(const Int&, const HilbClass&);
HilbClass operator*(const Rat&, const HilbClass&);

// Zero class shaped for the surface model.
HilbClass hilb_zero(const SurfaceModel& s);
// The classes sigma(basis_i) and T.
HilbClass hilb_pic_basis(const SurfaceModel& s, std::size_t i);
HilbClass hilb_t(const SurfaceModel& s);

// sigma: H^2(S) -> H^2(S^[n]), t = 0. alpha must be a pure H^2 class
// (a0 = a2 = 0). Requires n >= 2.
HilbClass sigma_embed(const SurfaceModel& s, long n, const MukaiElement& alpha);

// Beauville form: intersection form on the sigma-block, orthogonal to T,
// B(T, T) = -2(n-1). Integral inputs; requires n >= 2.
Int beauville_pair(const SurfaceModel& s, long n, const HilbClass& b,
                   const HilbClass& c);
// Same form on possibly non-integral classes.
Rat beauville_pair_rat(const SurfaceModel& s, long n, const HilbClass& b,
                       const HilbClass& c);

// L = (n-1) C1 - T.
HilbClass class_L(const SurfaceModel& s, long n);

// (2n)! / (n! 2^n), exact; equals (2n-1)!!.
Int fujiki_lambda(long n);

// fujiki_lambda(n) * B(beta, beta)^n.
Int fujiki_eval(const SurfaceModel& s, long n, const HilbClass& beta);

}  // namespace mukai_lab
