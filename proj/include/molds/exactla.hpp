#pragma once

// Exact linear algebra over Q, F_p and Z.
//
// rank() runs a batched sparse echelon kernel that is OpenMP-parallel across
// the rows of each batch; the serial reference versions in molds::la::reference
// perform the identical sequence of row operations and exist for testing and
// benchmarking.  Pivoting is deterministic: rows are consumed in index order
// and each new pivot sits at the row's smallest surviving column.
//
// Matrices with both dimensions at most kDenseCutoff go through dense kernels
// (plain elimination over F_p, fraction-free Bareiss over Q).

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "molds/errors.hpp"
#include "molds/ring.hpp"
#include "molds/sparse_matrix.hpp"

namespace molds::la {

inline constexpr std::size_t kDenseCutoff = 64;

template <ExactRing R>
std::size_t rank(const SparseMatrix<R>& m);

// Basis of {v : m v = 0}.  Vectors are read off the reduced row echelon form:
// one per free column, with a 1 in that column.
template <ExactRing R>
std::vector<std::vector<typename R::Element>> kernel_basis(const SparseMatrix<R>& m);

// Some x with m x = rhs (free variables set to zero), or nullopt.
template <ExactRing R>
std::optional<std::vector<typename R::Element>> solve(const SparseMatrix<R>& m,
                                                      const std::vector<typename R::Element>& rhs);

// Rank of an integer matrix read over Q.
std::size_t rank_over_rationals(const SparseMatrix<Integers>& m);

struct SmithForm {
  std::vector<mpz_class> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
  // Present when requested: left * input * right is the diagonal form.
  std::optional<SparseMatrix<Integers>> left;
  std::optional<SparseMatrix<Integers>> right;

  std::vector<mpz_class> torsion() const;  // the factors exceeding 1
};

SmithForm smith_normal_form(const SparseMatrix<Integers>& m, bool want_transforms = false);

// Diagonal matrix (rows x cols) carrying the invariant factors.
SparseMatrix<Integers> smith_diagonal(const SmithForm& s, std::size_t rows, std::size_t cols);

namespace reference {

// Same row operations as la::rank, executed on one thread.
template <ExactRing R>
std::size_t rank(const SparseMatrix<R>& m);

// Dense elementary-operation reduction with minimal-absolute-value pivots,
// without the sparse unit-pivot pre-pass.
SmithForm smith_normal_form(const SparseMatrix<Integers>& m, bool want_transforms = false);

}  // namespace reference

}  // namespace molds::la
