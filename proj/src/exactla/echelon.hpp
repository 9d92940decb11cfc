#pragma once

// Row-operation policies and the incremental echelon used by the rank kernels.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "molds/ring.hpp"

namespace molds::la::detail {

// Rows over F_p; pivots are scaled to leading coefficient 1.
struct FpRowOps {
  using Value = std::uint32_t;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  PrimeField f;

  void normalize(Row& r) const {
    Value s = f.inv(r.front().second);
    if (s == 1) return;
    for (auto& e : r) e.second = f.mul(e.second, s);
  }

  // r -= r.lead * piv, with piv.lead == 1 and equal leading columns.
  void eliminate(Row& r, const Row& piv, Row& scratch) const {
    const Value factor = r.front().second;
    scratch.clear();
    scratch.reserve(r.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < piv.size()) {
      if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
        scratch.push_back(r[i++]);
      } else if (i == r.size() || piv[j].first < r[i].first) {
        scratch.emplace_back(piv[j].first, f.neg(f.mul(factor, piv[j].second)));
        ++j;
      } else {
        Value v = f.sub(r[i].second, f.mul(factor, piv[j].second));
        if (v != 0) scratch.emplace_back(r[i].first, v);
        ++i;
        ++j;
      }
    }
    r.swap(scratch);
  }
};

// Primitive integer rows, used for fraction-free rank over Q: every row is
// kept with content 1 and positive leading entry.
struct PrimitiveRowOps {
  using Value = mpz_class;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  static void make_primitive(Row& r) {
    mpz_class g = 0;
    for (const auto& e : r) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g == 1) break;
    }
    if (g != 1 && g != 0) {
      for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }
  }

  void normalize(Row& r) const {
    make_primitive(r);
    if (r.front().second < 0) {
      for (auto& e : r) e.second = -e.second;
    }
  }

  // r <- (a/g) r - (b/g) piv  where a = piv.lead, b = r.lead, g = gcd(a, b).
  void eliminate(Row& r, const Row& piv, Row& scratch) const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), r.front().second.get_mpz_t());
    const mpz_class sa = piv.front().second / g;
    const mpz_class sb = r.front().second / g;
    scratch.clear();
    scratch.reserve(r.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < piv.size()) {
      if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
        scratch.emplace_back(r[i].first, sa * r[i].second);
        ++i;
      } else if (i == r.size() || piv[j].first < r[i].first) {
        scratch.emplace_back(piv[j].first, -sb * piv[j].second);
        ++j;
      } else {
        mpz_class v = sa * r[i].second - sb * piv[j].second;
        if (v != 0) scratch.emplace_back(r[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    r.swap(scratch);
    if (!r.empty()) make_primitive(r);
  }
};

// Pivot rows indexed by their leading column.
template <class Ops>
class Echelon {
 public:
  using Row = typename Ops::Row;

  Echelon(Ops ops, std::size_t cols) : ops_(std::move(ops)), pivot_of_col_(cols, -1) {}

  // Reduce while the leading column carries a pivot with index below `limit`.
  void reduce(Row& r, std::size_t limit, Row& scratch) const {
    while (!r.empty()) {
      const std::int64_t k = pivot_of_col_[r.front().first];
      if (k < 0 || static_cast<std::size_t>(k) >= limit) return;
      ops_.eliminate(r, pivots_[k], scratch);
    }
  }

  bool insert(Row&& r) {
    if (r.empty()) return false;
    ops_.normalize(r);
    pivot_of_col_[r.front().first] = static_cast<std::int64_t>(pivots_.size());
    pivots_.push_back(std::move(r));
    return true;
  }

  std::size_t size() const { return pivots_.size(); }
  const std::vector<Row>& pivots() const { return pivots_; }

 private:
  Ops ops_;
  std::vector<std::int64_t> pivot_of_col_;
  std::vector<Row> pivots_;
};

}  // namespace molds::la::detail
