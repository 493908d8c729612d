#pragma once

#include <optional>
#include <vector>

#include "mukai_lab/mukai.hpp"

namespace mukai_lab {

// Ample class H = a Sigma + b C on the rank-two elliptic model.
// Ample cone: a > 0 and b > 2a (from H.C > 0 and H.Sigma > 0), open.
struct Polarization {
  Int a, b;
  bool is_ample() const { return a > 0 && b > 2 * a; }

  friend bool operator==(const Polarization&, const Polarization&) = default;
};

// Primitive class L = x Sigma + y C with x > 0 and -k <= L^2 < 0 whose
// perpendicular line meets the open ample cone. L^2 = 2x(y - x).
struct WallClass {
  Int x, y;
  Int l_squared;

  friend bool operator==(const WallClass&, const WallClass&) = default;
};

// L . H for H = a Sigma + b C: x b + (y - 2x) a.
Int wall_dot(const WallClass& w, const Polarization& h);

// All k-wall classes meeting the ample cone, sorted by (x, y).
// The default entry point runs the x-ranges in parallel when OpenMP is
// enabled; enumerate_walls_serial is the reference kernel with the same
// contract, kept for testing and benchmarking.
std::vector<WallClass> enumerate_walls(const SurfaceModel& s, const Rat& k);
std::vector<WallClass> enumerate_walls_serial(const SurfaceModel& s,
                                              const Rat& k);

// H avoids every k-wall.
bool is_k_generic(const SurfaceModel& s, const Polarization& h, const Rat& k);

// H is k-generic and sign(L.H) = sign(L.C) on every wall class; on the
// normalized representatives (x > 0, so L.C > 0) this is L.H > 0.
bool is_k_suitable(const SurfaceModel& s, const Polarization& h, const Rat& k);

// The sufficient criterion b/a >= k + 1 (exact rational comparison).
bool suitable_by_criterion(const Polarization& h, const Rat& k);

// Signs of L.H over enumerate_walls(s, k), canonical order. +1 / -1 entries.
std::vector<int> chamber_signature(const SurfaceModel& s,
                                   const Polarization& h, const Rat& k);

// Wall classes whose sign differs between H0 and H1.
std::vector<WallClass> separating_walls(const SurfaceModel& s,
                                        const Polarization& h0,
                                        const Polarization& h1, const Rat& k);

// -|v| <= xi^2 <= 0 (the numerical constraint a destabilizer satisfies).
bool wall_bound_check(const SurfaceModel& s, const MukaiElement& v,
                      const IntVec& xi);

// xi = v0 c1(A) - rA v1; when xi.H = 0 and the bound holds, the primitive
// wall class proportional to xi. Requires 0 < rA < v0.
std::optional<WallClass> destabilizer_to_wall(const SurfaceModel& s,
                                              const MukaiElement& v,
                                              const Int& r_a, const IntVec& c1_a,
                                              const Polarization& h);

// SVG picture of the (a, b) quadrant: cone boundary plus wall rays.
std::string walls_svg(const std::vector<WallClass>& walls, const Rat& k);

}  // namespace mukai_lab
