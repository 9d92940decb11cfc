#include <algorithm>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "echelon.hpp"
#include "molds/exactla.hpp"

namespace molds::la {

namespace {

using detail::Echelon;
using detail::FpRowOps;
using detail::PrimitiveRowOps;

// ---- row preparation -------------------------------------------------------

template <ExactRing R>
SparseMatrix<R> tall(const SparseMatrix<R>& m) {
  return m.rows() >= m.cols() ? m : m.transpose();
}

std::vector<FpRowOps::Row> fp_rows(const SparseMatrix<PrimeField>& m) {
  std::vector<FpRowOps::Row> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

// Scale each rational row to a primitive integer row; rank is unchanged.
PrimitiveRowOps::Row primitive_row(const SparseMatrix<Rationals>::Row& r) {
  mpz_class l = 1;
  for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  PrimitiveRowOps::Row out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) out.emplace_back(c, mpz_class(v.get_num() * (l / v.get_den())));
  if (!out.empty()) PrimitiveRowOps::make_primitive(out);
  return out;
}

std::vector<PrimitiveRowOps::Row> primitive_rows(const SparseMatrix<Rationals>& m) {
  std::vector<PrimitiveRowOps::Row> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = primitive_row(m.row(i));
  return rows;
}

// ---- sparse echelon kernels ------------------------------------------------

template <class Ops>
std::size_t echelon_rank_serial(Ops ops, std::vector<typename Ops::Row> rows, std::size_t cols) {
  Echelon<Ops> ech(std::move(ops), cols);
  const std::size_t target = std::min(rows.size(), cols);
  typename Ops::Row scratch;
  for (auto& r : rows) {
    if (ech.size() == target) break;
    ech.reduce(r, ech.size(), scratch);
    ech.insert(std::move(r));
  }
  return ech.size();
}

// Rows of a batch are first reduced in parallel against the pivots frozen at
// the batch start; the sequential pass then finishes each row against the
// full table.  The elimination sequence per row equals the serial one.
template <class Ops>
std::size_t echelon_rank_parallel(Ops ops, std::vector<typename Ops::Row> rows, std::size_t cols) {
  Echelon<Ops> ech(std::move(ops), cols);
  const std::size_t target = std::min(rows.size(), cols);
#ifdef _OPENMP
  const std::size_t batch = std::max<std::size_t>(256, 64 * static_cast<std::size_t>(omp_get_max_threads()));
#else
  const std::size_t batch = 256;
#endif
  typename Ops::Row scratch;
  for (std::size_t start = 0; start < rows.size() && ech.size() < target; start += batch) {
    const std::size_t end = std::min(rows.size(), start + batch);
    const std::size_t frozen = ech.size();
    if (frozen > 0) {
#pragma omp parallel
      {
        typename Ops::Row local;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start); i < static_cast<std::ptrdiff_t>(end); ++i) {
          ech.reduce(rows[i], frozen, local);
        }
      }
    }
    for (std::size_t i = start; i < end && ech.size() < target; ++i) {
      ech.reduce(rows[i], ech.size(), scratch);
      ech.insert(std::move(rows[i]));
    }
  }
  return ech.size();
}

// ---- dense fallbacks -------------------------------------------------------

std::size_t dense_rank_fp(const SparseMatrix<PrimeField>& m) {
  const PrimeField f = m.ring();
  auto a = m.to_dense();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const auto inv = f.inv(a[r][c]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const auto factor = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

// Fraction-free (Bareiss) elimination on the integer-scaled rows.
std::size_t dense_rank_bareiss(const SparseMatrix<Rationals>& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (auto& [c, v] : primitive_row(m.row(i))) a[i][c] = v;
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

bool use_dense(std::size_t rows, std::size_t cols) { return rows <= kDenseCutoff && cols <= kDenseCutoff; }

template <ExactRing R>
std::size_t rank_impl(const SparseMatrix<R>& input, bool parallel) {
  if constexpr (!R::is_field) {
    throw DomainNotField();
  } else {
    if (input.rows() == 0 || input.cols() == 0) return 0;
    if constexpr (std::is_same_v<R, PrimeField>) {
      if (use_dense(input.rows(), input.cols())) return dense_rank_fp(input);
      const auto m = tall(input);
      FpRowOps ops{m.ring()};
      return parallel ? echelon_rank_parallel(ops, fp_rows(m), m.cols())
                      : echelon_rank_serial(ops, fp_rows(m), m.cols());
    } else {
      if (use_dense(input.rows(), input.cols())) return dense_rank_bareiss(input);
      const auto m = tall(input);
      return parallel ? echelon_rank_parallel(PrimitiveRowOps{}, primitive_rows(m), m.cols())
                      : echelon_rank_serial(PrimitiveRowOps{}, primitive_rows(m), m.cols());
    }
  }
}

// ---- reduced row echelon form (dense) ---------------------------------------

template <ExactField F>
struct Rref {
  std::vector<std::vector<typename F::Element>> rows;
  std::vector<std::size_t> pivot_cols;
};

template <ExactField F>
Rref<F> rref(const F& f, std::vector<std::vector<typename F::Element>> a, std::size_t cols) {
  Rref<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && f.is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const auto inv = f.inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      const auto factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!f.is_zero(a[r][j])) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

}  // namespace

template <ExactRing R>
std::size_t rank(const SparseMatrix<R>& m) {
  return rank_impl(m, true);
}

template <ExactRing R>
std::size_t reference::rank(const SparseMatrix<R>& m) {
  return rank_impl(m, false);
}

std::size_t rank_over_rationals(const SparseMatrix<Integers>& m) {
  return rank(convert(m, Rationals{}, [](const mpz_class& v) { return mpq_class(v); }));
}

template <ExactRing R>
std::vector<std::vector<typename R::Element>> kernel_basis(const SparseMatrix<R>& m) {
  if constexpr (!R::is_field) {
    throw DomainNotField();
  } else {
    const R& f = m.ring();
    const auto red = rref(f, m.to_dense(), m.cols());
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : red.pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<typename R::Element>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) continue;
      std::vector<typename R::Element> v(m.cols(), f.zero());
      v[free] = f.one();
      for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) v[red.pivot_cols[k]] = f.neg(red.rows[k][free]);
      basis.push_back(std::move(v));
    }
    return basis;
  }
}

template <ExactRing R>
std::optional<std::vector<typename R::Element>> solve(const SparseMatrix<R>& m,
                                                      const std::vector<typename R::Element>& rhs) {
  if constexpr (!R::is_field) {
    throw DomainNotField();
  } else {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    const R& f = m.ring();
    auto aug = m.to_dense();
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    const auto red = rref(f, std::move(aug), m.cols() + 1);
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols()) return std::nullopt;
    std::vector<typename R::Element> x(m.cols(), f.zero());
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) x[red.pivot_cols[k]] = red.rows[k][m.cols()];
    return x;
  }
}

#define MOLDS_INSTANTIATE(R)                                                                          \
  template std::size_t rank<R>(const SparseMatrix<R>&);                                               \
  template std::size_t reference::rank<R>(const SparseMatrix<R>&);                                    \
  template std::vector<std::vector<R::Element>> kernel_basis<R>(const SparseMatrix<R>&);              \
  template std::optional<std::vector<R::Element>> solve<R>(const SparseMatrix<R>&,                    \
                                                           const std::vector<R::Element>&);

MOLDS_INSTANTIATE(Rationals)
MOLDS_INSTANTIATE(PrimeField)
MOLDS_INSTANTIATE(Integers)

#undef MOLDS_INSTANTIATE

}  // namespace molds::la
