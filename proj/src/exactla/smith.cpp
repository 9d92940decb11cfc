#include <algorithm>
#include <map>
#include <set>

#include "molds/exactla.hpp"

namespace molds::la {

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense identity(std::size_t n) {
  Dense d(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

SparseMatrix<Integers> to_sparse(const Dense& d, std::size_t cols) {
  return SparseMatrix<Integers>::from_dense(Integers{}, d, cols);
}

// Elementary-operation Smith reduction with minimal-|entry| pivots.  When
// `u`/`v` are given they accumulate the row/column operations so that
// u * input * v equals the final `a`.
class DenseSmith {
 public:
  DenseSmith(Dense a, std::size_t cols, Dense* u, Dense* v) : a_(std::move(a)), rows_(a_.size()), cols_(cols), u_(u), v_(v) {}

  std::vector<mpz_class> run() {
    std::vector<mpz_class> factors;
    for (std::size_t t = 0; t < std::min(rows_, cols_); ++t) {
      auto [pi, pj] = min_entry(t);
      if (pi == rows_) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      clear_cross(t);
      if (a_[t][t] < 0) negate_row(t);
      factors.push_back(a_[t][t]);
    }
    return factors;
  }

  const Dense& matrix() const { return a_; }

 private:
  std::pair<std::size_t, std::size_t> min_entry(std::size_t t) const {
    std::size_t bi = rows_, bj = cols_;
    const mpz_class* best = nullptr;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        if (!best || mpz_cmpabs(a_[i][j].get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &a_[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    return {bi, bj};
  }

  // Drive row t and column t to zero off the diagonal and make the pivot
  // divide every entry of the trailing block.
  void clear_cross(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
        add_row_multiple(i, t, -q);
        if (a_[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
        add_col_multiple(j, t, -q);
        if (a_[t][j] != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived: move it onto the diagonal
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (a_[i][t] != 0 && mpz_cmpabs(a_[i][t].get_mpz_t(), a_[bi][bj].get_mpz_t()) < 0) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_[t][j] != 0 && mpz_cmpabs(a_[t][j].get_mpz_t(), a_[bi][bj].get_mpz_t()) < 0) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows_ && divides; ++i) {
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_[i][j] != 0 && !mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
            add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return;
    }
  }

  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (a_[src][j] != 0) a_[dst][j] += k * a_[src][j];
    }
    if (u_) {
      auto& u = *u_;
      for (std::size_t j = 0; j < rows_; ++j) {
        if (u[src][j] != 0) u[dst][j] += k * u[src][j];
      }
    }
  }

  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a_[i][src] != 0) a_[i][dst] += k * a_[i][src];
    }
    if (v_) {
      auto& v = *v_;
      for (std::size_t i = 0; i < cols_; ++i) {
        if (v[i][src] != 0) v[i][dst] += k * v[i][src];
      }
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (u_) std::swap((*u_)[i], (*u_)[k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (v_) {
      for (auto& row : *v_) std::swap(row[j], row[k]);
    }
  }

  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    if (u_) {
      for (auto& x : (*u_)[i]) x = -x;
    }
  }

  Dense a_;
  std::size_t rows_;
  std::size_t cols_;
  Dense* u_;
  Dense* v_;
};

SmithForm finish(std::vector<mpz_class> factors) {
  std::sort(factors.begin(), factors.end());
  SmithForm s;
  s.rank = factors.size();
  s.invariant_factors = std::move(factors);
  return s;
}

SmithForm dense_smith(const SparseMatrix<Integers>& m, bool want_transforms) {
  if (!want_transforms) {
    DenseSmith ds(m.to_dense(), m.cols(), nullptr, nullptr);
    return finish(ds.run());
  }
  Dense u = identity(m.rows());
  Dense v = identity(m.cols());
  DenseSmith ds(m.to_dense(), m.cols(), &u, &v);
  auto factors = ds.run();
  // The divisibility repair keeps d_t | d_{t+1} along the diagonal, so the
  // factors are already in chain order.
  SmithForm s;
  s.rank = factors.size();
  s.invariant_factors = std::move(factors);
  s.left = to_sparse(u, m.rows());
  s.right = to_sparse(v, m.cols());
  return s;
}

// Pivots of absolute value 1 contribute an invariant factor 1 and can be
// eliminated with row operations alone (the matching column operations only
// touch the discarded pivot row).  The survivors go to the dense reduction.
SmithForm unit_pivot_then_dense(const SparseMatrix<Integers>& m) {
  std::vector<std::map<std::uint32_t, mpz_class>> rows(m.rows());
  std::vector<std::set<std::uint32_t>> col_rows(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [c, v] : m.row(i)) {
      rows[i].emplace(c, v);
      col_rows[c].insert(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<char> row_alive(m.rows(), 1), col_alive(m.cols(), 1);
  std::size_t units = 0;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r]) continue;
      auto it = std::find_if(rows[r].begin(), rows[r].end(),
                             [](const auto& e) { return e.second == 1 || e.second == -1; });
      if (it == rows[r].end()) continue;
      const std::uint32_t c = it->first;
      const mpz_class u = it->second;
      const auto pivot_row = rows[r];
      const std::vector<std::uint32_t> others(col_rows[c].begin(), col_rows[c].end());
      for (std::uint32_t k : others) {
        if (k == r) continue;
        const mpz_class factor = rows[k].at(c) * u;  // row_k -= factor * row_r
        for (const auto& [cc, pv] : pivot_row) {
          mpz_class& slot = rows[k][cc];
          const bool was_zero = (slot == 0);
          slot -= factor * pv;
          if (slot == 0) {
            rows[k].erase(cc);
            col_rows[cc].erase(k);
          } else if (was_zero) {
            col_rows[cc].insert(k);
          }
        }
      }
      for (const auto& [cc, pv] : pivot_row) col_rows[cc].erase(static_cast<std::uint32_t>(r));
      rows[r].clear();
      row_alive[r] = 0;
      col_alive[c] = 0;
      ++units;
      progress = true;
    }
  }

  std::vector<std::uint32_t> col_index(m.cols(), 0);
  std::size_t rest_cols = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (col_alive[c] && !col_rows[c].empty()) col_index[c] = static_cast<std::uint32_t>(rest_cols++);
  }
  Dense rest;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    std::vector<mpz_class> line(rest_cols, 0);
    for (const auto& [c, v] : rows[r]) line[col_index[c]] = v;
    rest.push_back(std::move(line));
  }
  DenseSmith ds(std::move(rest), rest_cols, nullptr, nullptr);
  auto factors = ds.run();
  factors.insert(factors.end(), units, mpz_class(1));
  return finish(std::move(factors));
}

}  // namespace

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> t;
  for (const auto& d : invariant_factors) {
    if (d > 1) t.push_back(d);
  }
  return t;
}

SmithForm smith_normal_form(const SparseMatrix<Integers>& m, bool want_transforms) {
  if (want_transforms) return dense_smith(m, true);
  return unit_pivot_then_dense(m);
}

SmithForm reference::smith_normal_form(const SparseMatrix<Integers>& m, bool want_transforms) {
  return dense_smith(m, want_transforms);
}

SparseMatrix<Integers> smith_diagonal(const SmithForm& s, std::size_t rows, std::size_t cols) {
  std::vector<Triplet<mpz_class>> t;
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), s.invariant_factors[i]});
  }
  return SparseMatrix<Integers>::from_triplets(Integers{}, rows, cols, std::move(t));
}

}  // namespace molds::la
