#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mukai_lab/lattice.hpp"

namespace mukai_lab {

// A K3 surface, described by the lattice data the computations need: the
// Picard block, optionally two designated classes (the section Sigma and the
// elliptic fiber C), and an optional transcendental block.
struct SurfaceModel {
  IntMat picard_gram;
  std::optional<std::size_t> sigma_index;
  std::optional<std::size_t> c_index;
  std::optional<IntMat> trans_gram;

  void validate() const;

  std::size_t picard_rank() const { return picard_gram.rows(); }
  std::size_t trans_rank() const {
    return trans_gram ? trans_gram->rows() : 0;
  }
  bool has_section_data() const {
    return sigma_index.has_value() && c_index.has_value();
  }
  // The rank-two elliptic model the wall/theta machinery is stated for.
  bool is_elliptic_rank2() const {
    return picard_rank() == 2 && has_section_data();
  }

  // Built-in surface "elliptic-k3": Pic = Z Sigma + Z C,
  // gram [[-2,1],[1,0]], sigma=0, c=1.
  static SurfaceModel elliptic_k3();
};

// Element of the Mukai lattice, split as degree-0 part, H^2 part (Picard
// coordinates plus optional transcendental coordinates) and the coefficient
// of the fundamental class omega.
struct MukaiElement {
  Int a0;
  IntVec c1;     // Picard coordinates
  IntVec trans;  // transcendental coordinates; empty means zero
  Int a2;

  friend bool operator==(const MukaiElement&, const MukaiElement&) = default;
};

MukaiElement operator+(const MukaiElement&, const MukaiElement&);
MukaiElement operator-(const MukaiElement&, const MukaiElement&);
MukaiElement operator*(const Int&, const MukaiElement&);

struct ChernData {
  Int r;      // rank, >= 1
  IntVec c1;  // Picard coordinates
  Int c2;
};

// Intersection pairing on the Picard block.
Int picard_pair(const SurfaceModel& s, const IntVec& u, const IntVec& v);

// <alpha, beta> = alpha^1 . beta^1 - alpha^0 beta^2 - alpha^2 beta^0.
Int mukai_pairing(const SurfaceModel& s, const MukaiElement& a,
                  const MukaiElement& b);

// d(v) = 2 + <v, v>.
Int dim_moduli(const SurfaceModel& s, const MukaiElement& v);

// chi = a0 + a2.
Int chi(const MukaiElement& v);

// |v| = (v0)^2 <v,v> / 4 + (v0)^4 / 2, exact rational.
Rat wall_bound(const SurfaceModel& s, const MukaiElement& v);

// w = ch(xi) . v with ch(xi) = 1 + xi + (xi^2/2) omega.
MukaiElement twist(const SurfaceModel& s, const MukaiElement& v,
                   const IntVec& xi);

// v . ch([(1 - chi(v)) C]); requires v^1 . C = 1, result has chi = 1.
MukaiElement normalize(const SurfaceModel& s, const MukaiElement& v);

// v_r = r + Sigma + (n - r^2 + r) C + (1 - r) omega.
MukaiElement canonical_vr(const SurfaceModel& s, long r, long n);

// max(d + 1 - chi(v), 0).
Int brill_noether_codim(const MukaiElement& v, const Int& d);

// Delta = c2 - (r-1)/(2r) c1^2, exact rational.
Rat delta_discriminant(const SurfaceModel& s, const ChernData& cd);

// v = (r, c1, chi - r) with chi = 2r + c1^2/2 - c2 (Riemann-Roch on a K3).
MukaiElement v_from_chern(const SurfaceModel& s, const ChernData& cd);

// v^1 . C for the designated fiber class.
Int c1_dot_c(const SurfaceModel& s, const MukaiElement& v);
Int c1_dot_sigma(const SurfaceModel& s, const MukaiElement& v);

// The Mukai lattice as a QuadLattice on the basis
// {1, picard basis..., omega} (+ transcendental basis when requested):
// <1, omega> = -1, H^2 blocks as given, all other mixed pairings zero.
QuadLattice mukai_block_lattice(const SurfaceModel& s, bool include_trans);

// Coordinates of v in the basis of mukai_block_lattice.
IntVec mukai_coords(const SurfaceModel& s, const MukaiElement& v,
                    bool include_trans);
MukaiElement element_from_coords(const SurfaceModel& s, const IntVec& coords,
                                 bool include_trans);

}  // namespace mukai_lab
