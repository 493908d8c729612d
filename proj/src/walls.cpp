#include "mukai_lab/walls.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mukai_lab {

namespace {

void require_elliptic(const SurfaceModel& s) {
  if (!s.is_elliptic_rank2())
    fail(Err::invalid_surface,
         "wall arithmetic needs the rank-two elliptic model");
}

void require_ample(const Polarization& h) {
  if (!h.is_ample()) fail(Err::not_ample, "polarization is not ample");
}

// The perpendicular of L = x Sigma + y C is the ray b/a = 2 - y/x; it meets
// the open cone {a > 0, b > 2a} exactly when y < 0.
bool perp_meets_cone(const Int& /*x*/, const Int& y) { return y < 0; }

// Walls for one value of x: primitive (x, y) with 0 < 2x(x - y) <= k,
// cone-filtered, in increasing y.
void walls_for_x(const Int& x, const Rat& k, std::vector<WallClass>& out) {
  // 2x(x - y) <= k  <=>  x - y <= k / (2x): y >= x - floor(k / 2x).
  Int span;  // floor(k / (2x))
  mpz_fdiv_q(span.get_mpz_t(), k.get_num().get_mpz_t(),
             Int(2 * x * k.get_den()).get_mpz_t());
  for (Int y = x - span; y < x; ++y) {
    if (!perp_meets_cone(x, y)) continue;
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g != 1) continue;
    out.push_back({x, y, 2 * x * (y - x)});
  }
}

}  // namespace

Int wall_dot(const WallClass& w, const Polarization& h) {
  return w.x * h.b + (w.y - 2 * w.x) * h.a;
}

std::vector<WallClass> enumerate_walls_serial(const SurfaceModel& s,
                                              const Rat& k) {
  require_elliptic(s);
  if (k <= 0) fail(Err::nonpositive_k, "k must be positive");
  // 2x(x - y) <= k with x - y >= 1 forces x <= k/2.
  Int x_max = Int(k.get_num() / (2 * k.get_den()));
  std::vector<WallClass> out;
  for (Int x = 1; x <= x_max; ++x) walls_for_x(x, k, out);
  return out;  // already sorted by (x, y)
}

std::vector<WallClass> enumerate_walls(const SurfaceModel& s, const Rat& k) {
  require_elliptic(s);
  if (k <= 0) fail(Err::nonpositive_k, "k must be positive");
  Int x_max = Int(k.get_num() / (2 * k.get_den()));
  if (x_max > (1 << 22))
    fail(Err::bad_input, "k too large for wall enumeration");
  const long nx = x_max.get_si();
  std::vector<std::vector<WallClass>> per_x(static_cast<std::size_t>(nx));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long i = 0; i < nx; ++i)
    walls_for_x(Int(i + 1), k, per_x[static_cast<std::size_t>(i)]);
  std::vector<WallClass> out;
  for (auto& chunk : per_x)
    out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

bool is_k_generic(const SurfaceModel& s, const Polarization& h, const Rat& k) {
  require_ample(h);
  for (const WallClass& w : enumerate_walls(s, k))
    if (wall_dot(w, h) == 0) return false;
  return true;
}

bool is_k_suitable(const SurfaceModel& s, const Polarization& h, const Rat& k) {
  require_ample(h);
  // On the x > 0 representatives L.C = x > 0, so the sign condition is
  // L.H > 0; testing these suffices since L and -L define the same wall.
  for (const WallClass& w : enumerate_walls(s, k))
    if (wall_dot(w, h) <= 0) return false;
  return true;
}

bool suitable_by_criterion(const Polarization& h, const Rat& k) {
  require_ample(h);
  return Rat(h.b, h.a) >= k + 1;
}

std::vector<int> chamber_signature(const SurfaceModel& s, const Polarization& h,
                                   const Rat& k) {
  require_ample(h);
  std::vector<int> signs;
  for (const WallClass& w : enumerate_walls(s, k)) {
    int sg = sgn(wall_dot(w, h));
    if (sg == 0) fail(Err::on_wall, "polarization lies on a k-wall");
    signs.push_back(sg);
  }
  return signs;
}

std::vector<WallClass> separating_walls(const SurfaceModel& s,
                                        const Polarization& h0,
                                        const Polarization& h1, const Rat& k) {
  std::vector<int> s0 = chamber_signature(s, h0, k);
  std::vector<int> s1 = chamber_signature(s, h1, k);
  std::vector<WallClass> walls = enumerate_walls(s, k);
  std::vector<WallClass> out;
  for (std::size_t i = 0; i < walls.size(); ++i)
    if (s0[i] != s1[i]) out.push_back(walls[i]);
  return out;
}

bool wall_bound_check(const SurfaceModel& s, const MukaiElement& v,
                      const IntVec& xi) {
  Int xi_sq = picard_pair(s, xi, xi);
  return xi_sq <= 0 && Rat(-xi_sq) <= wall_bound(s, v);
}

std::optional<WallClass> destabilizer_to_wall(const SurfaceModel& s,
                                              const MukaiElement& v,
                                              const Int& r_a,
                                              const IntVec& c1_a,
                                              const Polarization& h) {
  require_elliptic(s);
  require_ample(h);
  if (r_a <= 0 || r_a >= v.a0)
    fail(Err::rank_range, "subsheaf rank must satisfy 0 < rA < v0");
  const std::size_t rho = s.picard_rank();
  if (c1_a.size() != rho)
    fail(Err::dimension_mismatch, "c1(A) length does not match Picard rank");
  IntVec xi(rho);
  bool zero = true;
  for (std::size_t i = 0; i < rho; ++i) {
    xi[i] = v.a0 * c1_a[i] - r_a * v.c1[i];
    if (xi[i] != 0) zero = false;
  }
  if (zero) return std::nullopt;
  Int x = xi[*s.sigma_index], y = xi[*s.c_index];
  WallClass raw{x, y, 0};
  if (wall_dot(raw, h) != 0) return std::nullopt;
  if (picard_pair(s, xi, xi) >= 0) return std::nullopt;
  if (!wall_bound_check(s, v, xi)) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  if (x < 0) {
    x = -x;
    y = -y;
  }
  return WallClass{x, y, 2 * x * (y - x)};
}

}  // namespace mukai_lab
