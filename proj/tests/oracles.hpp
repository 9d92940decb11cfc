#pragma once

// Independent reference computations used to derive expected values.  They
// deliberately share no code with the library kernels.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using QDense = std::vector<std::vector<mpq_class>>;
using ZDense = std::vector<std::vector<mpz_class>>;

// Textbook Gaussian elimination over Q.
inline std::size_t rank_q(QDense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_mod_p(ZDense a, unsigned long p) {
  QDense unused;
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (auto& row : a) {
    for (auto& x : row) {
      x %= p;
      if (x < 0) x += p;
    }
  }
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    mpz_class inv;
    mpz_class pz(p);
    mpz_invert(inv.get_mpz_t(), a[r][c].get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpz_class f = a[i][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = (a[i][j] - f * a[r][j]) % p;
        if (a[i][j] < 0) a[i][j] += p;
      }
    }
    ++r;
  }
  return r;
}

inline mpz_class det(ZDense m) {
  // cofactor expansion; only for tiny matrices
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    ZDense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    mpz_class term = m[0][j] * det(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors from determinantal divisors: D_k = gcd of all k x k
// minors, d_k = D_k / D_{k-1}.
inline std::vector<mpz_class> invariant_factors(const ZDense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        ZDense sub;
        for (auto i : r) {
          std::vector<mpz_class> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        mpz_class d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline ZDense random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                                double density) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  ZDense m(rows, std::vector<mpz_class>(cols, 0));
  for (auto& row : m) {
    for (auto& x : row) {
      if (keep(rng)) x = val(rng);
    }
  }
  return m;
}

}  // namespace oracle
