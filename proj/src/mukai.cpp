#include "mukai_lab/mukai.hpp"

namespace mukai_lab {

void SurfaceModel::validate() const {
  if (!picard_gram.is_square() || !picard_gram.is_symmetric())
    fail(Err::invalid_surface, "Picard Gram matrix must be symmetric");
  for (std::size_t i = 0; i < picard_rank(); ++i)
    if (picard_gram(i, i) % 2 != 0)
      fail(Err::invalid_surface, "intersection form of a K3 is even");
  if (sigma_index.has_value() != c_index.has_value())
    fail(Err::invalid_surface, "Sigma and C must be designated together");
  if (has_section_data()) {
    std::size_t si = *sigma_index, ci = *c_index;
    if (si >= picard_rank() || ci >= picard_rank() || si == ci)
      fail(Err::invalid_surface, "designated class index out of range");
    if (picard_gram(si, si) != -2 || picard_gram(ci, ci) != 0 ||
        picard_gram(si, ci) != 1)
      fail(Err::invalid_surface,
           "designated classes need Sigma^2=-2, C^2=0, Sigma.C=1");
  }
  if (trans_gram) {
    if (!trans_gram->is_square() || !trans_gram->is_symmetric())
      fail(Err::invalid_surface, "transcendental Gram must be symmetric");
    for (std::size_t i = 0; i < trans_rank(); ++i)
      if ((*trans_gram)(i, i) % 2 != 0)
        fail(Err::invalid_surface, "transcendental block must be even");
  }
}

SurfaceModel SurfaceModel::elliptic_k3() {
  SurfaceModel s;
  s.picard_gram = IntMat{{-2, 1}, {1, 0}};
  s.sigma_index = 0;
  s.c_index = 1;
  return s;
}

namespace {

void check_conforms(const SurfaceModel& s, const MukaiElement& v) {
  if (v.c1.size() != s.picard_rank())
    fail(Err::dimension_mismatch, "c1 length does not match Picard rank");
  if (!v.trans.empty() && v.trans.size() != s.trans_rank())
    fail(Err::dimension_mismatch,
         "transcendental length does not match surface model");
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
  IntVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

IntVec scale_vec(const Int& m, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = m * a[i];
  return r;
}

}  // namespace

MukaiElement operator+(const MukaiElement& a, const MukaiElement& b) {
  return {a.a0 + b.a0, add_vec(a.c1, b.c1), add_vec(a.trans, b.trans),
          a.a2 + b.a2};
}

MukaiElement operator-(const MukaiElement& a, const MukaiElement& b) {
  return a + Int(-1) * b;
}

MukaiElement operator*(const Int& m, const MukaiElement& a) {
  return {m * a.a0, scale_vec(m, a.c1), scale_vec(m, a.trans), m * a.a2};
}

Int picard_pair(const SurfaceModel& s, const IntVec& u, const IntVec& v) {
  const std::size_t n = s.picard_rank();
  if (u.size() != n || v.size() != n)
    fail(Err::dimension_mismatch, "Picard vector length mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += u[i] * s.picard_gram(i, j) * v[j];
  }
  return acc;
}

namespace {

Int h2_pair(const SurfaceModel& s, const MukaiElement& a,
            const MukaiElement& b) {
  Int acc = picard_pair(s, a.c1, b.c1);
  if (!a.trans.empty() && !b.trans.empty()) {
    if (!s.trans_gram)
      fail(Err::invalid_surface,
           "transcendental coordinates without a transcendental Gram");
    const IntMat& g = *s.trans_gram;
    for (std::size_t i = 0; i < a.trans.size(); ++i) {
      if (a.trans[i] == 0) continue;
      for (std::size_t j = 0; j < b.trans.size(); ++j)
        acc += a.trans[i] * g(i, j) * b.trans[j];
    }
  }
  return acc;
}

}  // namespace

Int mukai_pairing(const SurfaceModel& s, const MukaiElement& a,
                  const MukaiElement& b) {
  check_conforms(s, a);
  check_conforms(s, b);
  return h2_pair(s, a, b) - a.a0 * b.a2 - a.a2 * b.a0;
}

Int dim_moduli(const SurfaceModel& s, const MukaiElement& v) {
  return 2 + mukai_pairing(s, v, v);
}

Int chi(const MukaiElement& v) { return v.a0 + v.a2; }

Rat wall_bound(const SurfaceModel& s, const MukaiElement& v) {
  Int q = v.a0;
  Rat out = Rat(q * q * mukai_pairing(s, v, v)) / 4 + Rat(q * q * q * q) / 2;
  out.canonicalize();
  return out;
}

MukaiElement twist(const SurfaceModel& s, const MukaiElement& v,
                   const IntVec& xi) {
  check_conforms(s, v);
  Int xi_sq = picard_pair(s, xi, xi);
  if (xi_sq % 2 != 0) fail(Err::bad_input, "xi^2 must be even");
  MukaiElement w = v;
  for (std::size_t i = 0; i < xi.size(); ++i) w.c1[i] += v.a0 * xi[i];
  w.a2 = v.a2 + picard_pair(s, v.c1, xi) + v.a0 * (xi_sq / 2);
  return w;
}

Int c1_dot_c(const SurfaceModel& s, const MukaiElement& v) {
  if (!s.has_section_data())
    fail(Err::invalid_surface, "surface has no designated fiber class");
  return picard_pair(s, v.c1, unit_vector(s.picard_rank(), *s.c_index));
}

Int c1_dot_sigma(const SurfaceModel& s, const MukaiElement& v) {
  if (!s.has_section_data())
    fail(Err::invalid_surface, "surface has no designated section class");
  return picard_pair(s, v.c1, unit_vector(s.picard_rank(), *s.sigma_index));
}

MukaiElement normalize(const SurfaceModel& s, const MukaiElement& v) {
  if (c1_dot_c(s, v) != 1)
    fail(Err::not_numerical_section, "v^1 is not a numerical section");
  IntVec xi(s.picard_rank());
  xi[*s.c_index] = 1 - chi(v);
  return twist(s, v, xi);
}

MukaiElement canonical_vr(const SurfaceModel& s, long r, long n) {
  if (!s.has_section_data())
    fail(Err::invalid_surface, "canonical vector needs designated Sigma, C");
  if (r < 1) fail(Err::rank_range, "rank must be positive");
  if (n < 0) fail(Err::bad_input, "n must be non-negative");
  MukaiElement v;
  v.a0 = r;
  v.c1 = IntVec(s.picard_rank());
  v.c1[*s.sigma_index] = 1;
  v.c1[*s.c_index] = Int(n) - Int(r) * Int(r) + Int(r);
  v.a2 = 1 - r;
  return v;
}

Int brill_noether_codim(const MukaiElement& v, const Int& d) {
  Int c = d + 1 - chi(v);
  return c > 0 ? c : Int(0);
}

Rat delta_discriminant(const SurfaceModel& s, const ChernData& cd) {
  if (cd.r < 1) fail(Err::rank_range, "rank must be positive");
  Rat out = Rat(cd.c2) -
            Rat((cd.r - 1) * picard_pair(s, cd.c1, cd.c1), 2 * cd.r);
  out.canonicalize();
  return out;
}

MukaiElement v_from_chern(const SurfaceModel& s, const ChernData& cd) {
  if (cd.r < 1) fail(Err::rank_range, "rank must be positive");
  Int c1_sq = picard_pair(s, cd.c1, cd.c1);
  if (c1_sq % 2 != 0) fail(Err::bad_input, "c1^2 must be even");
  Int chi_f = 2 * cd.r + c1_sq / 2 - cd.c2;
  return {cd.r, cd.c1, {}, chi_f - cd.r};
}

QuadLattice mukai_block_lattice(const SurfaceModel& s, bool include_trans) {
  const std::size_t rho = s.picard_rank();
  const std::size_t tr = include_trans ? s.trans_rank() : 0;
  const std::size_t n = 2 + rho + tr;
  IntMat g(n, n);
  g(0, n - 1 - tr) = -1;  // <1, omega>
  g(n - 1 - tr, 0) = -1;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) g(1 + i, 1 + j) = s.picard_gram(i, j);
  for (std::size_t i = 0; i < tr; ++i)
    for (std::size_t j = 0; j < tr; ++j)
      g(2 + rho + i, 2 + rho + j) = (*s.trans_gram)(i, j);
  return QuadLattice(std::move(g));
}

IntVec mukai_coords(const SurfaceModel& s, const MukaiElement& v,
                    bool include_trans) {
  check_conforms(s, v);
  const std::size_t rho = s.picard_rank();
  const std::size_t tr = include_trans ? s.trans_rank() : 0;
  IntVec c(2 + rho + tr);
  c[0] = v.a0;
  for (std::size_t i = 0; i < rho; ++i) c[1 + i] = v.c1[i];
  c[1 + rho] = v.a2;
  for (std::size_t i = 0; i < v.trans.size() && include_trans; ++i)
    c[2 + rho + i] = v.trans[i];
  return c;
}

MukaiElement element_from_coords(const SurfaceModel& s, const IntVec& coords,
                                 bool include_trans) {
  const std::size_t rho = s.picard_rank();
  const std::size_t tr = include_trans ? s.trans_rank() : 0;
  if (coords.size() != 2 + rho + tr)
    fail(Err::dimension_mismatch, "coordinate length mismatch");
  MukaiElement v;
  v.a0 = coords[0];
  v.c1 = IntVec(coords.begin() + 1, coords.begin() + 1 + rho);
  v.a2 = coords[1 + rho];
  if (tr) v.trans = IntVec(coords.begin() + 2 + rho, coords.end());
  return v;
}

}  // namespace mukai_lab
