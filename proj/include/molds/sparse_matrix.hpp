#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "molds/ring.hpp"

namespace molds {

template <class E>
struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  E value;
};

// Row-compressed sparse matrix over an exact ring.  Each row holds its
// nonzero entries sorted by column; no stored entry is zero.
template <ExactRing R>
class SparseMatrix {
 public:
  using Element = typename R::Element;
  using Entry = std::pair<std::uint32_t, Element>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(R ring, std::size_t rows, std::size_t cols) : ring_(ring), cols_(cols), rows_(rows) {}

  // Sums duplicate coordinates and drops zeros.
  static SparseMatrix from_triplets(R ring, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet<Element>> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseMatrix m(ring, rows, cols);
    for (std::size_t k = 0; k < triplets.size();) {
      auto& t = triplets[k];
      if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix shape");
      Element acc = std::move(t.value);
      std::size_t j = k + 1;
      while (j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col) {
        acc = ring.add(acc, triplets[j].value);
        ++j;
      }
      if (!ring.is_zero(acc)) m.rows_[t.row].emplace_back(t.col, std::move(acc));
      k = j;
    }
    return m;
  }

  static SparseMatrix from_dense(R ring, const std::vector<std::vector<Element>>& dense, std::size_t cols) {
    SparseMatrix m(ring, dense.size(), cols);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
      for (std::size_t j = 0; j < cols; ++j) {
        if (!ring.is_zero(dense[i][j])) m.rows_[i].emplace_back(static_cast<std::uint32_t>(j), dense[i][j]);
      }
    }
    return m;
  }

  // Rows must already be sorted by column and free of zeros.
  static SparseMatrix from_rows(R ring, std::size_t cols, std::vector<Row> rows) {
    SparseMatrix m(ring, 0, cols);
    m.rows_ = std::move(rows);
    return m;
  }

  static SparseMatrix identity(R ring, std::size_t n) {
    SparseMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), ring.one());
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Row>& row_data() const { return rows_; }

  std::size_t nnz() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  Element at(std::size_t i, std::size_t j) const {
    const Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) return it->second;
    return ring_.zero();
  }

  std::vector<std::vector<Element>> to_dense() const {
    std::vector<std::vector<Element>> d(rows(), std::vector<Element>(cols_, ring_.zero()));
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [c, v] : rows_[i]) d[i][c] = v;
    }
    return d;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(ring_, cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [c, v] : rows_[i]) t.rows_[c].emplace_back(static_cast<std::uint32_t>(i), v);
    }
    return t;
  }

  // this * other
  SparseMatrix multiply(const SparseMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("shape mismatch in sparse product");
    SparseMatrix out(ring_, rows(), other.cols());
    std::vector<Element> acc(other.cols(), ring_.zero());
    std::vector<char> touched(other.cols(), 0);
    std::vector<std::uint32_t> cols_hit;
    for (std::size_t i = 0; i < rows(); ++i) {
      cols_hit.clear();
      for (const auto& [k, a] : rows_[i]) {
        for (const auto& [j, b] : other.rows_[k]) {
          if (!touched[j]) {
            touched[j] = 1;
            cols_hit.push_back(j);
            acc[j] = ring_.mul(a, b);
          } else {
            acc[j] = ring_.add(acc[j], ring_.mul(a, b));
          }
        }
      }
      std::sort(cols_hit.begin(), cols_hit.end());
      for (auto j : cols_hit) {
        if (!ring_.is_zero(acc[j])) out.rows_[i].emplace_back(j, acc[j]);
        touched[j] = 0;
      }
    }
    return out;
  }

  std::vector<Element> apply(const std::vector<Element>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch in sparse apply");
    std::vector<Element> y(rows(), ring_.zero());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [c, v] : rows_[i]) y[i] = ring_.add(y[i], ring_.mul(v, x[c]));
    }
    return y;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  R ring_{};
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

// Entrywise conversion between domains, e.g. Q -> F_p reduction.
template <ExactRing To, ExactRing From, class Convert>
SparseMatrix<To> convert(const SparseMatrix<From>& m, To to, Convert&& f) {
  std::vector<Triplet<typename To::Element>> t;
  t.reserve(m.nnz());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [c, v] : m.row(i)) t.push_back({static_cast<std::uint32_t>(i), c, f(v)});
  }
  return SparseMatrix<To>::from_triplets(to, m.rows(), m.cols(), std::move(t));
}

}  // namespace molds
