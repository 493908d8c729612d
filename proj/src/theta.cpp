#include "mukai_lab/theta.hpp"

namespace mukai_lab {

namespace {

void require_model(const SurfaceModel& s) {
  if (!s.is_elliptic_rank2())
    fail(Err::invalid_surface,
         "theta formulas need the rank-two elliptic model");
}

void check_n(long n) {
  if (n < 2) fail(Err::n_too_small, "theta needs n >= 2");
}

HilbClass neg_sigma_trans(const SurfaceModel& s, const MukaiElement& alpha) {
  HilbClass h = hilb_zero(s);
  for (std::size_t i = 0; i < alpha.trans.size(); ++i)
    h.trans[i] = -alpha.trans[i];
  return h;
}

// Convenience classes C1, Sigma1, T.
struct Basis {
  HilbClass c1, sigma1, t;
  explicit Basis(const SurfaceModel& s)
      : c1(hilb_pic_basis(s, *s.c_index)),
        sigma1(hilb_pic_basis(s, *s.sigma_index)),
        t(hilb_t(s)) {}
};

}  // namespace

MukaiElement beta_r(const SurfaceModel& s, long r, long n) {
  MukaiElement v = canonical_vr(s, r, n);
  v.c1[*s.c_index] -= 2 * Int(n - 1);
  return v;
}

std::pair<MukaiElement, MukaiElement> lambda_r_basis(const SurfaceModel& s,
                                                     long r) {
  require_model(s);
  if (r < 1) fail(Err::rank_range, "rank must be positive");
  MukaiElement u1{1, IntVec(2), {}, 0};
  u1.c1[*s.c_index] = -(Int(r) - 1);
  MukaiElement u2{0, IntVec(2), {}, 1};
  u2.c1[*s.c_index] = r;
  return {u1, u2};
}

HilbClass theta1(const SurfaceModel& s, long n, const MukaiElement& alpha) {
  require_model(s);
  check_n(n);
  Basis b(s);
  HilbClass out = neg_sigma_trans(s, alpha);
  for (std::size_t i = 0; i < alpha.c1.size(); ++i) out.pic[i] -= alpha.c1[i];
  out = out + alpha.a0 * (b.sigma1 + Int(n) * b.c1 - b.t);
  return out;
}

HilbClass theta2_family(const SurfaceModel& s, long n,
                        const MukaiElement& alpha) {
  require_model(s);
  check_n(n);
  Basis b(s);
  Int p_sigma = c1_dot_sigma(s, alpha);
  Int p_c = c1_dot_c(s, alpha);
  HilbClass out = neg_sigma_trans(s, alpha);
  for (std::size_t i = 0; i < alpha.c1.size(); ++i) out.pic[i] -= alpha.c1[i];
  Int nn = n;
  Int coef_c1 = (nn - 2) * alpha.a0 + (nn - 2) * p_sigma +
                (nn * nn - 3 * nn + 3) * p_c - (2 * nn - 3) * alpha.a2;
  Int coef_sigma1 = p_sigma + (nn - 1) * p_c - 2 * alpha.a2;
  Int coef_t = alpha.a0 + p_sigma + (nn - 1) * p_c - 2 * alpha.a2;
  return out - coef_c1 * b.c1 - coef_sigma1 * b.sigma1 + coef_t * b.t;
}

HilbClass theta2(const SurfaceModel& s, long n, const MukaiElement& alpha) {
  require_model(s);
  check_n(n);
  if (mukai_pairing(s, alpha, canonical_vr(s, 2, n)) != 0)
    fail(Err::not_perpendicular, "alpha is not perpendicular to v_2");
  Basis b(s);
  Int p_sigma = c1_dot_sigma(s, alpha);
  Int p_c = c1_dot_c(s, alpha);
  HilbClass out = neg_sigma_trans(s, alpha);
  for (std::size_t i = 0; i < alpha.c1.size(); ++i) out.pic[i] -= alpha.c1[i];
  Int nn = n;
  Int coef_c1 = (nn - 1) * p_c - alpha.a2;
  Int coef_sigma1 = p_sigma + (nn - 1) * p_c - 2 * alpha.a2;
  return out - coef_c1 * b.c1 - coef_sigma1 * b.sigma1 + p_c * b.t;
}

HilbClass theta_r_closed(const SurfaceModel& s, long r, long n,
                         const MukaiElement& alpha) {
  require_model(s);
  check_n(n);
  if (r < 3) fail(Err::rank_range, "closed form is stated for r >= 3");
  Basis b(s);
  // beta_r is the only basis vector with a Sigma component, so its
  // coefficient is the Sigma coordinate of alpha.
  Int c = alpha.c1[*s.sigma_index];
  MukaiElement res = alpha - c * beta_r(s, r, n);
  if (res.c1[*s.sigma_index] != 0)
    fail(Err::decomposition_failed, "Omega decomposition failed");
  const Int& x = res.a0;
  const Int& y = res.c1[*s.c_index];
  const Int& z = res.a2;
  HilbClass out = neg_sigma_trans(s, alpha);
  out = out + x * (b.c1 - Int(r - 2) * b.sigma1) - y * b.sigma1 +
        z * (Int(r) * b.sigma1 - b.c1) + c * b.t;
  return out;
}

HilbClass theta_apply(const SurfaceModel& s, long r, long n,
                      const MukaiElement& alpha) {
  if (r < 1) fail(Err::rank_range, "rank must be positive");
  if (r == 1) return theta1(s, n, alpha);
  if (r == 2) return theta2_family(s, n, alpha);
  return theta_r_closed(s, r, n, alpha);
}

HilbClass theta_apply_scaled(const SurfaceModel& s, long r, long n,
                             const MukaiElement& numerator, const Int& denom) {
  if (denom == 0) fail(Err::bad_input, "zero denominator");
  HilbClass h = theta_apply(s, r, n, numerator);
  h.scale *= denom;
  h.reduce();
  return h;
}

std::vector<ThetaTable> build_theta_recursive(const SurfaceModel& s, long n,
                                              long r_max) {
  require_model(s);
  check_n(n);
  if (r_max < 2) fail(Err::rank_range, "recursion starts at r = 2");
  Basis b(s);
  const Int nn = n;

  auto mismatch = [&](long r, const char* what) {
    fail(Err::recursion_mismatch,
         std::string("recursion checkpoint failed at r = ") +
             std::to_string(r) + ": " + what);
  };

  std::vector<ThetaTable> tables;
  tables.reserve(static_cast<std::size_t>(r_max - 1));

  // Rank-two seed: basis values from the family formula, c1(xi_2) from the
  // rank-one map via the pushforward identity (rho_*[c1(F^1) omega]_3 = 0),
  // and the printed seed for rho_*[c1(F^2) omega]_3.
  ThetaTable t2;
  t2.r = 2;
  t2.n = n;
  MukaiElement one{1, IntVec(2), {}, 0};
  MukaiElement c_el{0, IntVec(2), {}, 0};
  c_el.c1[*s.c_index] = 1;
  MukaiElement sigma_el{0, IntVec(2), {}, 0};
  sigma_el.c1[*s.sigma_index] = 1;
  MukaiElement omega_el{0, IntVec(2), {}, 1};
  const std::array<MukaiElement, 4> omega_basis{one, c_el, sigma_el, omega_el};
  for (int i = 0; i < 4; ++i)
    t2.values[static_cast<std::size_t>(i)] =
        theta2_family(s, n, omega_basis[static_cast<std::size_t>(i)]);
  t2.xi_c1 = Int(-1) * (theta1(s, n, one) + Int(2) * theta1(s, n, c_el));
  if (t2.xi_c1 != Int(-(nn - 2)) * b.c1 - b.sigma1 + b.t)
    mismatch(2, "c1(xi_2) differs from its seed value");
  t2.push_c1_omega =
      Int(-(2 * nn - 3)) * b.c1 - Int(2) * b.sigma1 + Int(2) * b.t;
  tables.push_back(t2);

  for (long r = 2; r < r_max; ++r) {
    const ThetaTable& cur = tables.back();
    // e^{2C} = 1 + 2C since C^2 = 0.
    HilbClass theta_e2c = cur.values[0] + Int(2) * cur.values[1];
    HilbClass xi = Int(-1) * theta_e2c + cur.push_c1_omega;

    ThetaTable next;
    next.r = r + 1;
    next.n = n;
    next.xi_c1 = xi;
    next.values[0] = theta_e2c + Int(r + 1) * xi + b.sigma1;
    next.values[1] = cur.values[1] + xi;
    next.values[2] = cur.values[2] + Int(2) * cur.values[3] -
                     Int(Int(r) * Int(r) + Int(r) + 2 - nn) * xi - b.sigma1;
    next.values[3] = cur.values[3] - Int(r) * xi + b.sigma1;
    next.push_c1_omega = cur.push_c1_omega + Int(r) * xi - b.sigma1;

    if (next.r == 3) {
      if (xi != Int(nn - 1) * b.c1 - b.t)
        mismatch(3, "c1(xi_3) != (n-1) C1 - T");
    } else {
      if (!xi.is_zero()) mismatch(next.r, "c1(xi_r) != 0");
    }
    if (next.r >= 4 &&
        next.push_c1_omega != b.c1 - Int(next.r) * b.sigma1)
      mismatch(next.r, "pushforward != C1 - r Sigma1");
    tables.push_back(std::move(next));
  }
  return tables;
}

IsometryReport verify_isometry(const SurfaceModel& s, long r, long n) {
  require_model(s);
  check_n(n);
  if (r < 1) fail(Err::rank_range, "rank must be positive");
  IsometryReport rep;
  rep.r = r;
  rep.n = n;

  // Integral basis of v_r-perp intersect Omega: {beta_r} + Lambda_r basis.
  MukaiElement beta = beta_r(s, r, n);
  auto [u1, u2] = lambda_r_basis(s, r);
  std::vector<MukaiElement> basis{beta, u1, u2};
  // Mixed sample: the transcendental block acts by -sigma.
  if (s.trans_gram) {
    for (std::size_t i = 0; i < s.trans_rank(); ++i) {
      MukaiElement tr{0, IntVec(s.picard_rank()), IntVec(s.trans_rank()), 0};
      tr.trans[i] = 1;
      basis.push_back(tr);
    }
  }

  std::vector<HilbClass> images;
  images.reserve(basis.size());
  rep.integral = true;
  for (const MukaiElement& alpha : basis) {
    HilbClass img = theta_apply(s, r, n, alpha);
    if (!img.is_integral()) rep.integral = false;
    images.push_back(std::move(img));
  }

  rep.gram_preserved = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Int lhs = mukai_pairing(s, basis[i], basis[j]);
      Rat rhs = beauville_pair_rat(s, n, images[i], images[j]);
      if (Rat(lhs) != rhs) rep.gram_preserved = false;
    }

  QuadLattice block = mukai_block_lattice(s, false);
  std::vector<IntVec> omega_basis_coords{
      mukai_coords(s, beta, false), mukai_coords(s, u1, false),
      mukai_coords(s, u2, false)};
  Int disc = determinant(gram_of(block, omega_basis_coords));
  rep.disc_vperp_omega = disc < 0 ? Int(-disc) : disc;
  Int disc_l = determinant(
      gram_of(block, {mukai_coords(s, u1, false), mukai_coords(s, u2, false)}));
  rep.disc_lambda_r = disc_l < 0 ? Int(-disc_l) : disc_l;

  rep.surjective = rep.integral && rep.gram_preserved &&
                   rep.disc_vperp_omega == 2 * Int(n - 1) &&
                   rep.disc_lambda_r == 1;
  return rep;
}

}  // namespace mukai_lab
