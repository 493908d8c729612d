#include "mukai_lab/donaldson.hpp"

#include "mukai_lab/theta.hpp"

namespace mukai_lab {

namespace {

void check_h2(const MukaiElement& alpha) {
  if (alpha.a0 != 0 || alpha.a2 != 0)
    fail(Err::bad_input, "expected a pure H^2 class (a0 = a2 = 0)");
}

Int h2_dot_v1(const SurfaceModel& s, const MukaiElement& v,
              const MukaiElement& alpha) {
  // v1 . alpha1, including the transcendental block when both carry one.
  MukaiElement v1{0, v.c1, v.trans, 0};
  return mukai_pairing(s, v1, alpha);
}

}  // namespace

RationalMukaiElement iota(const SurfaceModel& s, const MukaiElement& v,
                          const MukaiElement& alpha) {
  check_h2(alpha);
  if (v.a0 == 0) fail(Err::zero_rank, "iota needs v0 != 0");
  RationalMukaiElement out;
  out.a0 = 0;
  out.c1.assign(alpha.c1.size(), Rat(0));
  for (std::size_t i = 0; i < alpha.c1.size(); ++i) out.c1[i] = Rat(alpha.c1[i]);
  out.trans.assign(alpha.trans.size(), Rat(0));
  for (std::size_t i = 0; i < alpha.trans.size(); ++i)
    out.trans[i] = Rat(alpha.trans[i]);
  out.a2 = Rat(h2_dot_v1(s, v, alpha), v.a0);
  out.a2.canonicalize();
  return out;
}

HilbClass mu(const SurfaceModel& s, const MukaiElement& v,
             const MukaiElement& alpha) {
  check_h2(alpha);
  if (v.a0 == 0) fail(Err::zero_rank, "mu needs v0 != 0");
  MukaiElement w = normalize(s, v);  // canonical representative
  long r = w.a0.get_si();
  Int d = dim_moduli(s, w);
  if (d < 4) fail(Err::n_too_small, "mu needs d(v) >= 4 (n >= 2)");
  long n = Int(d / 2).get_si();
  // iota_w(alpha) = alpha + (w1.alpha / w0) omega; clear the denominator and
  // extend theta rationally.
  Int dot = h2_dot_v1(s, w, alpha);
  MukaiElement numerator = w.a0 * alpha;
  numerator.a2 = dot;
  HilbClass th = theta_apply_scaled(s, r, n, numerator, w.a0);
  return Int(-1) * th;
}

Rat q_eval(const SurfaceModel& s, const MukaiElement& v,
           const MukaiElement& alpha) {
  check_h2(alpha);
  if (v.a0 == 0) fail(Err::zero_rank, "q_v needs v0 != 0");
  Int d = dim_moduli(s, normalize(s, v));
  if (d == 0) return Rat(1);  // single reduced point, empty product
  if (d < 4) fail(Err::n_too_small, "q_v needs d(v) = 0 or d(v) >= 4");
  long n = Int(d / 2).get_si();
  HilbClass m = mu(s, v, alpha);
  Rat b = beauville_pair_rat(s, n, m, m);
  Rat pow(1);
  for (long i = 0; i < n; ++i) pow *= b;
  Rat out = Rat(fujiki_lambda(n)) * pow;
  out.canonicalize();
  return out;
}

}  // namespace mukai_lab
