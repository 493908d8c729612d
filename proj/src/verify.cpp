#include "mukai_lab/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mukai_lab/donaldson.hpp"
#include "mukai_lab/hilbert.hpp"
#include "mukai_lab/theta.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mukai_lab {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<WallClass> brute_force_walls(const Rat& k) {
  if (k <= 0) fail(Err::nonpositive_k, "k must be positive");
  Int half;  // ceil(k/2)
  mpz_cdiv_q(half.get_mpz_t(), k.get_num().get_mpz_t(),
             Int(2 * k.get_den()).get_mpz_t());
  std::vector<WallClass> out;
  for (Int x = 1; x <= half; ++x)
    for (Int y = x - half; y < x; ++y) {
      Int g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      if (g != 1) continue;
      Int l2 = 2 * x * (y - x);
      if (!(l2 < 0 && Rat(-l2) <= k)) continue;
      // Perpendicular ray b/a = 2 - y/x lies in the open cone iff y < 0.
      if (y >= 0) continue;
      out.push_back({x, y, l2});
    }
  return out;
}

namespace {

std::string fmt_rn(long r, long n) {
  std::ostringstream os;
  os << "(r=" << r << ", n=" << n << ")";
  return os.str();
}

MukaiElement random_element(SplitMix64& rng, const SurfaceModel& s, long span) {
  MukaiElement v;
  v.a0 = rng.range(-span, span);
  v.c1 = IntVec(s.picard_rank());
  for (Int& c : v.c1) c = rng.range(-span, span);
  v.a2 = rng.range(-span, span);
  return v;
}

}  // namespace

CheckResult check_theta_isometry(const CheckOptions& opt) {
  CheckResult res{"theta isometry certificate", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  const long rmax = opt.r_max, nmax = opt.n_max;
  const long cells = rmax * (nmax - 1);
  std::vector<std::string> fails(static_cast<std::size_t>(cells));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long idx = 0; idx < cells; ++idx) {
    long r = 1 + idx / (nmax - 1);
    long n = 2 + idx % (nmax - 1);
    IsometryReport rep = verify_isometry(s, r, n);
    bool ok = rep.integral && rep.gram_preserved && rep.surjective &&
              rep.disc_vperp_omega == 2 * Int(n - 1) && rep.disc_lambda_r == 1;
    if (!ok) fails[static_cast<std::size_t>(idx)] = fmt_rn(r, n);
  }
  for (const std::string& f : fails)
    if (!f.empty()) {
      res.pass = false;
      res.detail = "first failing cell " + f;
      return res;
    }
  std::ostringstream os;
  os << "all flags true, |disc| = 2(n-1) and 1, over r <= " << rmax
     << ", n <= " << nmax;
  res.detail = os.str();
  return res;
}

CheckResult check_theta_recursion(const CheckOptions& opt) {
  CheckResult res{"theta rank recursion vs closed form", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  MukaiElement one{1, IntVec(2), {}, 0};
  MukaiElement c_el{0, IntVec(2), {}, 0};
  c_el.c1[*s.c_index] = 1;
  MukaiElement sigma_el{0, IntVec(2), {}, 0};
  sigma_el.c1[*s.sigma_index] = 1;
  MukaiElement omega_el{0, IntVec(2), {}, 1};
  const std::array<MukaiElement, 4> basis{one, c_el, sigma_el, omega_el};
  for (long n = 2; n <= opt.recursion_n_max; ++n) {
    std::vector<ThetaTable> tables;
    try {
      // Internal checkpoints (c1(xi_3), c1(xi_r) = 0 and the pushforward
      // values for r >= 4) are enforced inside the builder.
      tables = build_theta_recursive(s, n, opt.recursion_r_max);
    } catch (const DomainError& e) {
      res.pass = false;
      res.detail = std::string("recursion checkpoint: ") + e.what();
      return res;
    }
    for (const ThetaTable& t : tables) {
      if (t.r < 3) continue;
      for (std::size_t i = 0; i < 4; ++i) {
        if (t.values[i] != theta_r_closed(s, t.r, n, basis[i])) {
          res.pass = false;
          res.detail = "table/closed-form mismatch at " + fmt_rn(t.r, n);
          return res;
        }
      }
      // The recursive image of beta_r must be T.
      HilbClass img = hilb_zero(s);
      MukaiElement beta = beta_r(s, t.r, n);
      img = img + beta.a0 * t.values[0] + beta.c1[*s.c_index] * t.values[1] +
            beta.c1[*s.sigma_index] * t.values[2] + beta.a2 * t.values[3];
      if (img != hilb_t(s)) {
        res.pass = false;
        res.detail = "recursive theta(beta_r) != T at " + fmt_rn(t.r, n);
        return res;
      }
    }
  }
  std::ostringstream os;
  os << "tables match the closed form and all checkpoints for 3 <= r <= "
     << opt.recursion_r_max << ", 2 <= n <= " << opt.recursion_n_max;
  res.detail = os.str();
  return res;
}

CheckResult check_wall_enumeration(const CheckOptions& opt) {
  CheckResult res{"wall enumeration vs brute force", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  // Integer, half-integer and third-integer samples up to k_max.
  std::vector<Rat> ks;
  for (long m = 1; m <= opt.k_max; ++m) ks.emplace_back(m);
  for (long m = 1; m <= 2 * opt.k_max; m += 2) ks.emplace_back(Rat(m, 2));
  for (long m = 1; m <= 3 * opt.k_max; ++m)
    if (m % 3 != 0) ks.emplace_back(Rat(m, 3));
  for (const Rat& k : ks) {
    auto fast = enumerate_walls(s, k);
    auto serial = enumerate_walls_serial(s, k);
    auto oracle = brute_force_walls(k);
    if (fast != oracle || serial != oracle) {
      res.pass = false;
      std::ostringstream os;
      os << "mismatch at k = " << k;
      res.detail = os.str();
      return res;
    }
  }
  if (!enumerate_walls(s, 1).empty() || !enumerate_walls(s, 2).empty()) {
    res.pass = false;
    res.detail = "k in {1,2} should give no walls";
    return res;
  }
  auto k4 = enumerate_walls(s, 4);
  if (k4.size() != 1 || k4[0].x != 1 || k4[0].y != -1) {
    res.pass = false;
    res.detail = "k = 4 should give exactly the Sigma - C wall";
    return res;
  }
  std::ostringstream os;
  os << ks.size() << " values of k <= " << opt.k_max
     << " agree with the box-scan oracle (parallel and serial kernels)";
  res.detail = os.str();
  return res;
}

CheckResult check_suitability_criterion(const CheckOptions& opt) {
  CheckResult res{"suitability criterion b/a >= k+1", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  const long kmax = std::min<long>(50, opt.k_max);
  long counterexamples = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : counterexamples)
#endif
  for (long k = 1; k <= kmax; ++k) {
    auto walls = enumerate_walls_serial(s, Rat(k));
    for (long a = 1; a <= 20; ++a)
      for (long b = 2 * a + 1; b <= 60 * a; ++b) {
        if (Rat(b, a) < k + 1) continue;
        Polarization h{a, b};
        bool suitable = true;
        for (const WallClass& w : walls)
          if (wall_dot(w, h) <= 0) {
            suitable = false;
            break;
          }
        if (!suitable) ++counterexamples;
      }
  }
  if (counterexamples > 0) {
    res.pass = false;
    std::ostringstream os;
    os << counterexamples << " grid points violate the criterion";
    res.detail = os.str();
    return res;
  }
  std::ostringstream os;
  os << "no counterexample on the (a, b) grid for k <= " << kmax;
  res.detail = os.str();
  return res;
}

CheckResult check_twist_invariance(const CheckOptions& opt) {
  (void)opt;
  CheckResult res{"twist equivalence preserves pairing and |v|", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  SplitMix64 rng(0x5eed0001);
  for (int trial = 0; trial < 500; ++trial) {
    MukaiElement v = random_element(rng, s, 9);
    MukaiElement w = random_element(rng, s, 9);
    IntVec xi(2);
    xi[0] = rng.range(-6, 6);
    xi[1] = rng.range(-6, 6);
    MukaiElement tv = twist(s, v, xi), tw = twist(s, w, xi);
    if (mukai_pairing(s, tv, tw) != mukai_pairing(s, v, w) ||
        wall_bound(s, tv) != wall_bound(s, v)) {
      res.pass = false;
      res.detail = "failure at trial " + std::to_string(trial);
      return res;
    }
  }
  res.detail = "500 random (v, w, xi) preserved exactly";
  return res;
}

CheckResult check_discriminant_identity(const CheckOptions& opt) {
  (void)opt;
  CheckResult res{"r^3 Delta / 2 = |v|", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  SplitMix64 rng(0x5eed0002);
  for (int trial = 0; trial < 200; ++trial) {
    ChernData cd;
    cd.r = rng.range(1, 6);
    cd.c1 = IntVec(2);
    cd.c1[0] = rng.range(-10, 10);
    cd.c1[1] = rng.range(-10, 10);
    cd.c2 = rng.range(-50, 50);
    Rat lhs = Rat(cd.r * cd.r * cd.r) * delta_discriminant(s, cd) / 2;
    lhs.canonicalize();
    if (lhs != wall_bound(s, v_from_chern(s, cd))) {
      res.pass = false;
      res.detail = "failure at trial " + std::to_string(trial);
      return res;
    }
  }
  res.detail = "200 random Chern data sets, exact rational equality";
  return res;
}

CheckResult check_donaldson_closed_form(const CheckOptions& opt) {
  (void)opt;
  CheckResult res{"Donaldson polynomial closed form", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  const Int lambda_expected[] = {1, 3, 15, 105, 945, 10395};
  for (long n = 1; n <= 6; ++n) {
    Int dfact = 1;  // (2n-1)!!
    for (long m = 1; m <= 2 * n - 1; m += 2) dfact *= m;
    if (fujiki_lambda(n) != lambda_expected[n - 1] ||
        fujiki_lambda(n) != dfact) {
      res.pass = false;
      res.detail = "Fujiki constant wrong at n = " + std::to_string(n);
      return res;
    }
  }
  SplitMix64 rng(0x5eed0003);
  for (long r = 1; r <= 6; ++r)
    for (long n = 2; n <= 6; ++n) {
      MukaiElement v = canonical_vr(s, r, n);
      for (int trial = 0; trial < 100; ++trial) {
        MukaiElement alpha{0, IntVec(2), {}, 0};
        alpha.c1[0] = rng.range(-8, 8);
        alpha.c1[1] = rng.range(-8, 8);
        Rat q_sq(picard_pair(s, alpha.c1, alpha.c1));
        Rat expected(1);
        for (long i = 0; i < n; ++i) expected *= q_sq;
        expected *= Rat(fujiki_lambda(n));
        expected.canonicalize();
        if (q_eval(s, v, alpha) != expected) {
          res.pass = false;
          res.detail = "q_v mismatch at " + fmt_rn(r, n);
          return res;
        }
      }
    }
  res.detail =
      "lambda_1..6 = 1,3,15,105,945,10395; q_v = lambda_n (alpha.alpha)^n on "
      "100 random alpha per (r, n), r <= 6, n <= 6";
  return res;
}

CheckResult check_beauville_lattice(const CheckOptions& opt) {
  CheckResult res{"Beauville lattice of S^[n]", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  SplitMix64 rng(0x5eed0004);
  for (long n = 2; n <= opt.n_max; ++n) {
    HilbClass t = hilb_t(s);
    if (beauville_pair(s, n, t, t) != -2 * Int(n - 1)) {
      res.pass = false;
      res.detail = "B(T, T) wrong at n = " + std::to_string(n);
      return res;
    }
    HilbClass l = class_L(s, n);
    if (beauville_pair(s, n, l, l) != -2 * Int(n - 1)) {
      res.pass = false;
      res.detail = "B(L, L) wrong at n = " + std::to_string(n);
      return res;
    }
    for (int trial = 0; trial < 50; ++trial) {
      MukaiElement a{0, IntVec(2), {}, 0};
      a.c1[0] = rng.range(-9, 9);
      a.c1[1] = rng.range(-9, 9);
      MukaiElement b{0, IntVec(2), {}, 0};
      b.c1[0] = rng.range(-9, 9);
      b.c1[1] = rng.range(-9, 9);
      HilbClass sa = sigma_embed(s, n, a), sb = sigma_embed(s, n, b);
      if (beauville_pair(s, n, sa, t) != 0 ||
          beauville_pair(s, n, sa, sb) != mukai_pairing(s, a, b)) {
        res.pass = false;
        res.detail = "sigma block failure at n = " + std::to_string(n);
        return res;
      }
    }
  }
  std::ostringstream os;
  os << "B(T) = -2(n-1), orthogonal split, sigma isometry, B(L) = -2(n-1) "
        "for n <= "
     << opt.n_max;
  res.detail = os.str();
  return res;
}

CheckResult check_perpendicularity(const CheckOptions& opt) {
  CheckResult res{"perpendicularity plumbing", true, ""};
  const SurfaceModel s = SurfaceModel::elliptic_k3();
  SplitMix64 rng(0x5eed0005);
  for (long r = 1; r <= opt.r_max; ++r)
    for (long n = 2; n <= opt.n_max; ++n) {
      MukaiElement v = canonical_vr(s, r, n);
      MukaiElement beta = beta_r(s, r, n);
      auto [u1, u2] = lambda_r_basis(s, r);
      bool ok = mukai_pairing(s, beta, v) == 0 &&
                mukai_pairing(s, u1, v) == 0 && mukai_pairing(s, u2, v) == 0 &&
                mukai_pairing(s, u1, beta) == 0 &&
                mukai_pairing(s, u2, beta) == 0;
      for (int trial = 0; ok && trial < 20; ++trial) {
        MukaiElement alpha{0, IntVec(2), {}, 0};
        alpha.c1[0] = rng.range(-9, 9);
        alpha.c1[1] = rng.range(-9, 9);
        RationalMukaiElement io = iota(s, v, alpha);
        // <v, iota(alpha)> = v1.alpha1 - v0 a2(iota) (a0(iota) = 0).
        Rat lhs = Rat(picard_pair(s, v.c1, alpha.c1)) - Rat(v.a0) * io.a2;
        lhs.canonicalize();
        ok = lhs == 0;
      }
      if (!ok) {
        res.pass = false;
        res.detail = "failure at " + fmt_rn(r, n);
        return res;
      }
    }
  std::ostringstream os;
  os << "iota lands in v-perp; beta_r and Lambda_r perpendicular to v_r over "
        "r <= "
     << opt.r_max << ", n <= " << opt.n_max;
  res.detail = os.str();
  return res;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& opt) {
  return {check_theta_isometry(opt),      check_theta_recursion(opt),
          check_wall_enumeration(opt),    check_suitability_criterion(opt),
          check_twist_invariance(opt),    check_discriminant_identity(opt),
          check_donaldson_closed_form(opt), check_beauville_lattice(opt),
          check_perpendicularity(opt)};
}

}  // namespace mukai_lab
