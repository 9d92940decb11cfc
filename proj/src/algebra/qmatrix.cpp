#include "molds/qmatrix.hpp"

#include <stdexcept>

namespace molds {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (sgn(o(k, j)) != 0) r(i, j) += x * o(k, j);
      }
    }
  }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix sum shape mismatch");
  QMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix difference shape mismatch");
  QMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

QMatrix QMatrix::scaled(const mpq_class& s) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& x : a_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

std::string to_string(const QMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace molds
