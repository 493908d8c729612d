#include "mukai_lab/lattice.hpp"

#include <algorithm>
#include <utility>

namespace mukai_lab {

const char* err_name(Err e) {
  switch (e) {
    case Err::dimension_mismatch: return "DIMENSION_MISMATCH";
    case Err::non_square: return "NON_SQUARE";
    case Err::invalid_surface: return "INVALID_SURFACE";
    case Err::not_ample: return "NOT_AMPLE";
    case Err::nonpositive_k: return "NONPOSITIVE_K";
    case Err::on_wall: return "ON_WALL";
    case Err::n_too_small: return "N_TOO_SMALL";
    case Err::not_numerical_section: return "NOT_NUMERICAL_SECTION";
    case Err::not_perpendicular: return "NOT_PERPENDICULAR";
    case Err::zero_rank: return "ZERO_RANK";
    case Err::rank_range: return "RANK_RANGE";
    case Err::recursion_mismatch: return "RECURSION_MISMATCH";
    case Err::decomposition_failed: return "DECOMPOSITION_FAILED";
    case Err::bad_input: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      fail(Err::bad_input, "ragged matrix initializer");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

QuadLattice::QuadLattice(IntMat g, bool even_flag)
    : gram(std::move(g)), even(even_flag) {
  if (!gram.is_square()) fail(Err::non_square, "Gram matrix must be square");
  if (!gram.is_symmetric())
    fail(Err::bad_input, "Gram matrix must be symmetric");
  if (even) {
    for (std::size_t i = 0; i < gram.rows(); ++i)
      if (gram(i, i) % 2 != 0)
        fail(Err::bad_input, "even lattice has an odd diagonal entry");
  }
}

IntVec zero_vector(std::size_t n) { return IntVec(n); }

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec v(n);
  v.at(i) = 1;
  return v;
}

Int pairing(const QuadLattice& lat, const IntVec& u, const IntVec& v) {
  const std::size_t n = lat.rank();
  if (u.size() != n || v.size() != n)
    fail(Err::dimension_mismatch, "vector length does not match lattice rank");
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j) row += lat.gram(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

IntMat gram_of(const QuadLattice& lat, const std::vector<IntVec>& basis) {
  const std::size_t m = basis.size();
  IntMat g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      g(i, j) = pairing(lat, basis[i], basis[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

// Bareiss fraction-free elimination; every division below is exact.
Int determinant(const IntMat& m) {
  if (!m.is_square()) fail(Err::non_square, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// Eliminate column `col` below row `top` in b (n x w) using unimodular row
// operations: extended-gcd combination of two rows, as in HNF reduction.
void gcd_reduce_column(IntMat& b, std::size_t top, std::size_t col) {
  const std::size_t n = b.rows(), w = b.cols();
  for (std::size_t i = top + 1; i < n; ++i) {
    if (b(i, col) == 0) continue;
    if (b(top, col) == 0) {
      for (std::size_t j = 0; j < w; ++j) std::swap(b(top, j), b(i, j));
      continue;
    }
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
               b(top, col).get_mpz_t(), b(i, col).get_mpz_t());
    Int u = b(top, col) / g;  // exact
    Int v = b(i, col) / g;    // exact
    // [p q; -v u] has determinant pu + qv = 1.
    for (std::size_t j = 0; j < w; ++j) {
      Int rt = p * b(top, j) + q * b(i, j);
      Int ri = u * b(i, j) - v * b(top, j);
      b(top, j) = std::move(rt);
      b(i, j) = std::move(ri);
    }
  }
}

}  // namespace

std::vector<IntVec> integer_kernel(const IntMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Work on [A^T | I_n]; rows whose A^T-part vanishes give kernel vectors.
  IntMat b(n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) b(i, j) = a(j, i);
    b(i, m + i) = 1;
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < m && top < n; ++col) {
    gcd_reduce_column(b, top, col);
    if (b(top, col) != 0) ++top;
  }
  std::vector<IntVec> kernel;
  for (std::size_t i = top; i < n; ++i) {
    IntVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = b(i, m + j);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<IntVec> orthogonal_complement(const QuadLattice& lat,
                                          const std::vector<IntVec>& gens) {
  const std::size_t n = lat.rank();
  if (gens.empty()) {
    std::vector<IntVec> id;
    for (std::size_t i = 0; i < n; ++i) id.push_back(unit_vector(n, i));
    return id;
  }
  // <x, g> = 0  <=>  (gram * g)^T x = 0.
  IntMat a(gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != n)
      fail(Err::dimension_mismatch, "generator length does not match rank");
    for (std::size_t i = 0; i < n; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += lat.gram(i, j) * gens[r][j];
      a(r, i) = acc;
    }
  }
  return integer_kernel(a);
}

std::optional<std::vector<Rat>> solve_in_span(const std::vector<IntVec>& basis,
                                              const std::vector<Rat>& target) {
  const std::size_t m = basis.size();
  if (m == 0) {
    for (const Rat& t : target)
      if (t != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  const std::size_t n = basis[0].size();
  if (target.size() != n)
    fail(Err::dimension_mismatch, "target length does not match basis");
  // Augmented system [basis columns | target], Gaussian elimination over Q.
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    if (basis[j].size() != n)
      fail(Err::dimension_mismatch, "basis vectors of unequal length");
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = Rat(basis[j][i]);
  }
  for (std::size_t i = 0; i < n; ++i) aug[i][m] = target[i];

  std::vector<std::size_t> pivot_row(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t p = row;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) return std::nullopt;  // basis not independent
    std::swap(aug[p], aug[row]);
    Rat inv = 1 / aug[row][col];
    for (std::size_t j = col; j <= m; ++j) aug[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = col; j <= m; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (aug[i][m] != 0) return std::nullopt;  // inconsistent: not in span
  std::vector<Rat> c(m);
  for (std::size_t col = 0; col < m; ++col) c[col] = aug[pivot_row[col]][m];
  return c;
}

std::optional<IntVec> decompose(const QuadLattice& lat, const IntVec& target,
                                const std::vector<IntVec>& basis) {
  if (target.size() != lat.rank())
    fail(Err::dimension_mismatch, "target length does not match lattice rank");
  std::vector<Rat> t(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) t[i] = Rat(target[i]);
  auto sol = solve_in_span(basis, t);
  if (!sol) return std::nullopt;
  IntVec c(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if ((*sol)[i].get_den() != 1) return std::nullopt;  // rational, not integral
    c[i] = (*sol)[i].get_num();
  }
  return c;
}

}  // namespace mukai_lab
