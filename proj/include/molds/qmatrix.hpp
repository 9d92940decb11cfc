#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace molds {

// Dense rational matrix; used for algebra basis elements and action tables.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static QMatrix identity(std::size_t n);
  // E_{ij}, zero-based indices.
  static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  // Row-major entries.
  const std::vector<mpq_class>& entries() const { return a_; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const mpq_class& s) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> a_;
};

std::string to_string(const QMatrix& m);

}  // namespace molds
