#pragma once

#include "mukai_lab/hilbert.hpp"
#include "mukai_lab/mukai.hpp"

namespace mukai_lab {

// Mukai element with exact rational entries (iota output: denominators
// divide v0).
struct RationalMukaiElement {
  Rat a0;
  std::vector<Rat> c1;
  std::vector<Rat> trans;
  Rat a2;
};

// iota_v(alpha) = alpha + (v1 . alpha / v0) omega; lands in v-perp.
// alpha is a pure H^2 class (a0 = a2 = 0).
RationalMukaiElement iota(const SurfaceModel& s, const MukaiElement& v,
                          const MukaiElement& alpha);

// mu_v = -theta_v . iota_v, evaluated on the normalized representative of v
// (v1 must be a numerical section). Result may carry a scale denominator
// dividing v0.
HilbClass mu(const SurfaceModel& s, const MukaiElement& v,
             const MukaiElement& alpha);

// q_v(alpha) = fujiki_lambda(n) B(mu_v(alpha))^n where 2n = d(v); for
// d(v) = 0 the empty product convention q = 1 applies.
Rat q_eval(const SurfaceModel& s, const MukaiElement& v,
           const MukaiElement& alpha);

}  // namespace mukai_lab
