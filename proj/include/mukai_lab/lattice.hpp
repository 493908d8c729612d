#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "mukai_lab/errors.hpp"

namespace mukai_lab {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  IntVec row(std::size_t i) const;

  friend bool operator==(const IntMat&, const IntMat&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Free Z-module of finite rank with an integral symmetric bilinear form.
struct QuadLattice {
  IntMat gram;
  bool even = false;  // when set, all diagonal entries must be even

  explicit QuadLattice(IntMat g, bool even_flag = false);
  std::size_t rank() const { return gram.rows(); }
};

// u^T * gram * v.
Int pairing(const QuadLattice& lat, const IntVec& u, const IntVec& v);

// Gram matrix of a list of vectors under the lattice form.
IntMat gram_of(const QuadLattice& lat, const std::vector<IntVec>& basis);

// Exact determinant, fraction-free (Bareiss) elimination.
Int determinant(const IntMat& m);

// Basis of the saturated sublattice {x : <x, g> = 0 for all g in gens}.
std::vector<IntVec> orthogonal_complement(const QuadLattice& lat,
                                          const std::vector<IntVec>& gens);

// Integer coefficients c with sum c_i * basis_i == target, or nullopt when
// target is outside the integer span. basis must be linearly independent.
std::optional<IntVec> decompose(const QuadLattice& lat, const IntVec& target,
                                const std::vector<IntVec>& basis);

// Basis of {x in Z^n : A x = 0}; saturated by construction (HNF transform).
std::vector<IntVec> integer_kernel(const IntMat& a);

// Unique rational solution of (basis as columns) * c = target, if any.
// basis must be linearly independent.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<IntVec>& basis,
                                              const std::vector<Rat>& target);

IntVec zero_vector(std::size_t n);
IntVec unit_vector(std::size_t n, std::size_t i);

}  // namespace mukai_lab
