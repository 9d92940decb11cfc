#include "molds/algebra.hpp"

#include <utility>

#include "molds/exactla.hpp"

namespace molds {

namespace {

using Reason = ValidationError::Reason;

SparseMatrix<Integers> integer_rows(const std::vector<QVector>& rows, std::size_t cols) {
  std::vector<Triplet<mpz_class>> t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(rows[i][j]) != 0) {
        t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), rows[i][j].get_num()});
      }
    }
  }
  return SparseMatrix<Integers>::from_triplets(Integers{}, rows.size(), cols, std::move(t));
}

bool saturated(const std::vector<QVector>& rows, std::size_t cols) {
  const auto s = la::smith_normal_form(integer_rows(rows, cols));
  if (s.rank != rows.size()) return false;
  for (const auto& f : s.invariant_factors) {
    if (f != 1) return false;
  }
  return true;
}

}  // namespace

QMatrix canonical(const Ring& ring, const QMatrix& m) {
  if (ring.kind() == Ring::Kind::Rationals) return m;
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = canonical(ring, m(i, j));
  }
  return r;
}

std::optional<QMatrix> inverse(const Ring& ring, const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    QVector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = m(i, j);
    cols.push_back(std::move(c));
  }
  const Span span(ring, n, cols);
  if (!span.independent()) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    QVector e(n, 0);
    e[k] = 1;
    auto x = span.coordinates(e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, k) = (*x)[i];
  }
  return inv;
}

Algebra Algebra::verify(std::size_t n, const Ring& ring, std::vector<QMatrix> basis, std::string name) {
  if (n == 0 || basis.empty()) throw ValidationError(Reason::BadShape, "basis must be nonempty and n positive");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != n || basis[i].cols() != n) {
      throw ValidationError(Reason::BadShape, "basis element " + std::to_string(i + 1) + " is not " +
                                                   std::to_string(n) + "x" + std::to_string(n));
    }
    try {
      basis[i] = canonical(ring, basis[i]);
    } catch (const ValidationError& e) {
      throw ValidationError(Reason::NotRepresentable,
                            "basis element " + std::to_string(i + 1) + " has an entry outside " + ring.tag());
    }
  }

  std::vector<QVector> rows;
  for (const auto& b : basis) rows.push_back(b.entries());
  auto span = std::make_shared<const Span>(ring, n * n, rows);
  if (!span->independent()) {
    throw ValidationError(Reason::NotIndependent, "rank " + std::to_string(span->rank()) + " < " +
                                                      std::to_string(basis.size()) + " basis elements");
  }
  if (ring.kind() == Ring::Kind::Integers && !saturated(rows, n * n)) {
    throw ValidationError(Reason::NotSaturated, "span is not a direct summand of M_n(Z)");
  }

  const std::size_t d = basis.size();
  StructureConstants sc;
  sc.d = d;
  sc.table.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const QMatrix p = canonical(ring, basis[i] * basis[j]);
      auto c = span->coordinates(p.entries());
      if (!c) {
        throw ValidationError(Reason::NotClosed, "NotClosed(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                     "): product a_" + std::to_string(i + 1) + " a_" +
                                                     std::to_string(j + 1) + " leaves the span");
      }
      for (std::size_t k = 0; k < d; ++k) sc.table[(i * d + j) * d + k] = (*c)[k];
    }
  }
  auto u = span->coordinates(QMatrix::identity(n).entries());
  if (!u) throw ValidationError(Reason::NoUnit, "the identity matrix is not in the span");
  sc.unit = std::move(*u);

  Algebra a;
  a.n_ = n;
  a.ring_ = ring;
  a.name_ = std::move(name);
  a.basis_ = std::move(basis);
  a.constants_ = std::move(sc);
  a.span_ = std::move(span);
  return a;
}

std::optional<QVector> Algebra::coordinates(const QMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
  return span_->coordinates(canonical(ring_, x).entries());
}

QMatrix Algebra::element(const QVector& coords) const {
  QMatrix m(n_, n_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (sgn(coords[k]) != 0) m = m + basis_[k].scaled(coords[k]);
  }
  return canonical(ring_, m);
}

QMatrix Algebra::multiply(const QMatrix& a, const QMatrix& b) const { return canonical(ring_, a * b); }

Algebra Algebra::renamed(std::string name) const {
  Algebra a = *this;
  a.name_ = std::move(name);
  return a;
}

Algebra Algebra::with_family(Family f) const {
  Algebra a = *this;
  a.family_ = std::move(f);
  return a;
}

Algebra Algebra::unit_first() const {
  const QVector& r = constants_.unit;
  const std::size_t d = basis_.size();
  const bool over_z = ring_.kind() == Ring::Kind::Integers;
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < d && !k; ++i) {
    if (sgn(r[i]) == 0) continue;
    if (!over_z || r[i] == 1 || r[i] == -1) k = i;
  }
  std::vector<QMatrix> nb;
  nb.push_back(QMatrix::identity(n_));
  if (k) {
    for (std::size_t i = 0; i < d; ++i) {
      if (i != *k) nb.push_back(basis_[i]);
    }
  } else {
    // No unit coordinate: complete the primitive vector r to a unimodular
    // matrix through the Smith transform of the row r.
    std::vector<QVector> row{r};
    const auto s = la::smith_normal_form(integer_rows(row, d), true);
    QMatrix v(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [c, x] : s.right->row(i)) v(i, c) = mpq_class(x);
    }
    const auto vinv = inverse(ring_, v);
    for (std::size_t i = 1; i < d; ++i) {
      QMatrix b(n_, n_);
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn((*vinv)(i, j)) != 0) b = b + basis_[j].scaled((*vinv)(i, j));
      }
      nb.push_back(b);
    }
  }
  Algebra a = verify(n_, ring_, std::move(nb), name_);
  a.family_ = family_;
  return a;
}

Algebra transpose_algebra(const Algebra& a) {
  std::vector<QMatrix> nb;
  for (const auto& b : a.basis()) nb.push_back(b.transpose());
  return Algebra::verify(a.n(), a.ring(), std::move(nb), a.name().empty() ? "" : "t" + a.name());
}

Algebra conjugate_algebra(const Algebra& a, const QMatrix& p) {
  if (p.rows() != a.n() || p.cols() != a.n()) throw ValidationError(Reason::BadShape, "conjugating matrix has wrong size");
  const QMatrix pc = canonical(a.ring(), p);
  const auto pinv = inverse(a.ring(), pc);
  if (!pinv) throw ValidationError(Reason::NotInvertible, "conjugating matrix is not invertible over " + a.ring().tag());
  std::vector<QMatrix> nb;
  for (const auto& b : a.basis()) nb.push_back(canonical(a.ring(), *pinv * b * pc));
  return Algebra::verify(a.n(), a.ring(), std::move(nb), a.name());
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (!(a.ring() == b.ring())) throw ValidationError(Reason::BadShape, "factors live over different rings");
  const std::size_t n = a.n() + b.n();
  std::vector<QMatrix> nb;
  for (const auto& x : a.basis()) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < a.n(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) m(i, j) = x(i, j);
    nb.push_back(std::move(m));
  }
  for (const auto& y : b.basis()) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) m(a.n() + i, a.n() + j) = y(i, j);
    nb.push_back(std::move(m));
  }
  return Algebra::verify(n, a.ring(), std::move(nb), a.name() + "x" + b.name());
}

}  // namespace molds
