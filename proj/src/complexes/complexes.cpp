#include "molds/complexes.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_map>

#include "molds/catalog.hpp"

namespace molds {

namespace {

template <ExactRing R>
using Dense = std::vector<std::vector<typename R::Element>>;

template <ExactRing R>
Dense<R> lift(const R& ring, const QMatrix& m) {
  Dense<R> d(m.rows(), std::vector<typename R::Element>(m.cols(), ring.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = ring.from_rational(m(i, j));
  }
  return d;
}

template <ExactRing R>
void normalize_row(const R& ring, typename SparseMatrix<R>::Row& row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < row.size();) {
    auto acc = row[k].second;
    std::size_t j = k + 1;
    while (j < row.size() && row[j].first == row[k].first) acc = ring.add(acc, row[j++].second);
    if (!ring.is_zero(acc)) {
      row[out].first = row[k].first;
      row[out].second = std::move(acc);
      ++out;
    }
    k = j;
  }
  row.resize(out);
}

std::size_t checked_rank(std::size_t letters, std::size_t p, std::size_t m, std::size_t budget) {
  const std::size_t limit = std::min<std::size_t>(budget, UINT32_MAX);
  std::size_t r = m;
  for (std::size_t k = 0; k < p && r != 0; ++k) {
    if (__builtin_mul_overflow(r, letters, &r) || r > limit) throw SizeBudgetExceeded(r, limit);
  }
  if (r > limit) throw SizeBudgetExceeded(r, limit);
  return r;
}

void check_bimodule(const Algebra& a, const Bimodule& m) {
  if (m.algebra_dim() != a.d() || !(m.ring() == a.ring())) {
    throw std::invalid_argument("bimodule was built for a different algebra presentation");
  }
}

// ---- bar-type complexes on words ---------------------------------------------

template <ExactRing R>
struct WordData {
  using E = typename R::Element;
  std::size_t letters = 0;
  std::size_t m = 0;
  std::vector<Dense<R>> left, right;
  std::vector<std::vector<std::pair<std::size_t, E>>> products;  // [i * letters + j]
  std::vector<std::string> names;
  std::vector<std::string> tags;
};

template <ExactRing R>
WordData<R> word_data(const R& ring, const Algebra& a, const Bimodule& m, bool reduced) {
  check_bimodule(a, m);
  const std::size_t off = reduced ? 1 : 0;
  if (reduced && !(a.basis()[0] == QMatrix::identity(a.n()))) {
    throw std::invalid_argument("reduced bar complex needs the identity as first basis element");
  }
  WordData<R> w;
  w.letters = a.d() - off;
  w.m = m.dim();
  w.tags = m.tags();
  for (std::size_t i = off; i < a.d(); ++i) {
    w.left.push_back(lift(ring, m.left(i)));
    w.right.push_back(lift(ring, m.right(i)));
    w.names.push_back("a" + std::to_string(i + 1));
  }
  const auto& c = a.constants();
  w.products.resize(w.letters * w.letters);
  for (std::size_t i = 0; i < w.letters; ++i) {
    for (std::size_t j = 0; j < w.letters; ++j) {
      for (std::size_t s = off; s < a.d(); ++s) {
        const auto v = ring.from_rational(c(i + off, j + off, s));
        if (!ring.is_zero(v)) w.products[i * w.letters + j].emplace_back(s - off, v);
      }
    }
  }
  return w;
}

std::vector<std::size_t> powers(std::size_t base, std::size_t top) {
  std::vector<std::size_t> p(top + 2, 1);
  for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * base;
  return p;
}

template <ExactRing R>
SparseMatrix<R> word_differential(const R& ring, const WordData<R>& wd, std::size_t p,
                                  const std::vector<std::size_t>& pw, bool parallel) {
  using E = typename R::Element;
  const std::size_t L = wd.letters, m = wd.m;
  const std::size_t nrows = pw[p + 1] * m, ncols = pw[p] * m;
  const E minus = ring.neg(ring.one());
  std::vector<typename SparseMatrix<R>::Row> rows(nrows);
  auto build = [&](std::size_t word) {
    std::vector<std::size_t> digits(p + 1);
    for (std::size_t k = 0; k <= p; ++k) digits[k] = (word / pw[p - k]) % L;
    for (std::size_t qp = 0; qp < m; ++qp) {
      auto& row = rows[word * m + qp];
      const std::size_t rest = word % pw[p];
      const auto& lt = wd.left[digits[0]];
      for (std::size_t q = 0; q < m; ++q) {
        if (!ring.is_zero(lt[qp][q])) row.emplace_back(static_cast<std::uint32_t>(rest * m + q), lt[qp][q]);
      }
      for (std::size_t k = 0; k < p; ++k) {
        const std::size_t prefix = word / pw[p + 1 - k];
        const std::size_t suffix = word % pw[p - k - 1];
        const bool negative = (k % 2 == 0);
        for (const auto& [s, c] : wd.products[digits[k] * L + digits[k + 1]]) {
          const std::size_t merged = prefix * pw[p - k] + s * pw[p - k - 1] + suffix;
          row.emplace_back(static_cast<std::uint32_t>(merged * m + qp), negative ? ring.neg(c) : c);
        }
      }
      const std::size_t head = word / L;
      const auto& rt = wd.right[digits[p]];
      const bool negative = (p % 2 == 0);
      for (std::size_t q = 0; q < m; ++q) {
        if (ring.is_zero(rt[qp][q])) continue;
        row.emplace_back(static_cast<std::uint32_t>(head * m + q), negative ? ring.mul(minus, rt[qp][q]) : rt[qp][q]);
      }
      normalize_row(ring, row);
    }
  };
  const std::ptrdiff_t words = static_cast<std::ptrdiff_t>(pw[p + 1]);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t w = 0; w < words; ++w) build(static_cast<std::size_t>(w));
  } else {
    for (std::ptrdiff_t w = 0; w < words; ++w) build(static_cast<std::size_t>(w));
  }
  return SparseMatrix<R>::from_rows(ring, ncols, std::move(rows));
}

// Images of basis cochains, one column at a time.
template <ExactRing R>
SparseMatrix<R> word_differential_by_columns(const R& ring, const WordData<R>& wd, std::size_t p,
                                             const std::vector<std::size_t>& pw) {
  using E = typename R::Element;
  const std::size_t L = wd.letters, m = wd.m;
  std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, E>>> makers(L);  // s -> ((i, j), c)
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      for (const auto& [s, c] : wd.products[i * L + j]) makers[s].push_back({{i, j}, c});
  std::vector<Triplet<E>> t;
  const E one = ring.one();
  auto sign = [&](std::size_t k) { return k % 2 ? ring.neg(one) : one; };
  for (std::size_t word = 0; word < pw[p]; ++word) {
    for (std::size_t q = 0; q < m; ++q) {
      const auto col = static_cast<std::uint32_t>(word * m + q);
      for (std::size_t i = 0; i < L; ++i) {
        const std::size_t up = i * pw[p] + word;
        const std::size_t down = word * L + i;
        for (std::size_t qp = 0; qp < m; ++qp) {
          if (!ring.is_zero(wd.left[i][qp][q])) t.push_back({std::uint32_t(up * m + qp), col, wd.left[i][qp][q]});
          if (!ring.is_zero(wd.right[i][qp][q])) {
            t.push_back({std::uint32_t(down * m + qp), col, ring.mul(sign(p + 1), wd.right[i][qp][q])});
          }
        }
      }
      for (std::size_t k = 0; k < p; ++k) {
        const std::size_t s = (word / pw[p - 1 - k]) % L;
        const std::size_t prefix = word / pw[p - k];
        const std::size_t suffix = word % pw[p - 1 - k];
        for (const auto& [ij, c] : makers[s]) {
          const std::size_t split = (prefix * L + ij.first) * L * pw[p - 1 - k] + ij.second * pw[p - 1 - k] + suffix;
          t.push_back({std::uint32_t(split * m + q), col, ring.mul(sign(k + 1), c)});
        }
      }
    }
  }
  return SparseMatrix<R>::from_triplets(ring, pw[p + 1] * m, pw[p] * m, std::move(t));
}

template <ExactRing R>
CochainComplex<R> word_complex(const R& ring, WordData<R> wd, Method method, std::size_t top, std::size_t budget,
                               bool parallel, bool by_columns) {
  CochainComplex<R> cx;
  cx.ring = ring;
  cx.method = method;
  for (std::size_t p = 0; p <= top; ++p) cx.ranks.push_back(checked_rank(wd.letters, p, wd.m, budget));
  const auto pw = powers(wd.letters, top);
  for (std::size_t p = 0; p < top; ++p) {
    cx.differentials.push_back(by_columns ? word_differential_by_columns(ring, wd, p, pw)
                                          : word_differential(ring, wd, p, pw, parallel));
  }
  auto shared = std::make_shared<WordData<R>>(std::move(wd));
  cx.labeler = [shared, pw](std::size_t degree, std::size_t index) {
    const std::size_t m = shared->m;
    if (m == 0) return std::string("()");
    std::size_t word = index / m;
    std::string s = "(";
    for (std::size_t k = 0; k < degree; ++k) {
      if (k) s += ",";
      s += shared->names[(word / pw[degree - 1 - k]) % shared->letters];
    }
    return s + ";" + shared->tags[index % m] + ")";
  };
  return cx;
}

// ---- Cibils complex ----------------------------------------------------------

struct CibilsWords {
  std::vector<std::string> words;  // letters as bytes
  std::vector<std::size_t> start, end, offset;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t rank = 0;
};

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Bar: return "bar";
    case Method::Reduced: return "reduced";
    case Method::Cibils: return "cibils";
    case Method::JnPeriodic: return "jn";
  }
  return "auto";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::Auto, Method::Bar, Method::Reduced, Method::Cibils, Method::JnPeriodic}) {
    if (method_name(m) == text) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected auto, bar, reduced, cibils or jn)");
}

template <ExactRing R>
std::optional<std::size_t> square_zero_violation(const CochainComplex<R>& cx) {
  for (std::size_t p = 0; p + 1 < cx.differentials.size(); ++p) {
    if (!cx.differentials[p + 1].multiply(cx.differentials[p]).is_zero()) return p;
  }
  return std::nullopt;
}

template <ExactRing R>
CochainComplex<R> bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top,
                              const BuildOptions& opts) {
  return word_complex(ring, word_data(ring, a, m, false), Method::Bar, top, opts.size_budget, opts.parallel, false);
}

template <ExactRing R>
CochainComplex<R> reduced_bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top,
                                      const BuildOptions& opts) {
  return word_complex(ring, word_data(ring, a, m, true), Method::Reduced, top, opts.size_budget, opts.parallel,
                      false);
}

template <ExactRing R>
CochainComplex<R> reference::bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top) {
  return word_complex(ring, word_data(ring, a, m, false), Method::Bar, top, kDefaultSizeBudget, false, true);
}

template <ExactRing R>
CochainComplex<R> reference::reduced_bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top) {
  return word_complex(ring, word_data(ring, a, m, true), Method::Reduced, top, kDefaultSizeBudget, false, true);
}

template <ExactRing R>
CochainComplex<R> cibils_complex(const R& ring, const Algebra& a, const Splitting& s, const Bimodule& m,
                                 std::size_t top, const BuildOptions& opts) {
  using E = typename R::Element;
  check_bimodule(a, m);
  const std::size_t V = s.vertices(), L = s.letters(), dim = m.dim();
  if (L > 255) throw std::invalid_argument("too many radical letters");

  // coordinates of e_s M e_t
  std::vector<std::vector<std::vector<std::size_t>>> coords(V, std::vector<std::vector<std::size_t>>(V));
  std::vector<std::vector<std::vector<std::int64_t>>> pos(V, std::vector<std::vector<std::int64_t>>(V));
  for (std::size_t x = 0; x < V; ++x) {
    for (std::size_t y = 0; y < V; ++y) {
      const QMatrix proj = canonical(a.ring(), m.left_action(s.idempotent_coords[x]) * m.right_action(s.idempotent_coords[y]));
      pos[x][y].assign(dim, -1);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          const auto& v = proj(i, j);
          if ((i != j && v != 0) || (i == j && v != 0 && v != 1)) {
            throw ValidationError(ValidationError::Reason::NotSplit,
                                  "idempotent projections are not coordinate projections of the bimodule");
          }
        }
        if (proj(i, i) == 1) {
          pos[x][y][i] = static_cast<std::int64_t>(coords[x][y].size());
          coords[x][y].push_back(i);
        }
      }
    }
  }

  std::vector<Dense<R>> left, right;
  for (std::size_t k = 0; k < L; ++k) {
    left.push_back(lift(ring, m.left_action(s.radical_coords[k])));
    right.push_back(lift(ring, m.right_action(s.radical_coords[k])));
  }
  std::vector<std::vector<std::pair<std::size_t, E>>> products(L * L);
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t k = 0; k < L; ++k)
      for (std::size_t l = 0; l < L; ++l) {
        const E v = ring.from_rational(s.product(j, k, l));
        if (!ring.is_zero(v)) products[j * L + k].emplace_back(l, v);
      }

  // words by degree; degree 0 holds the vertices
  std::vector<CibilsWords> deg(top + 1);
  for (std::size_t t = 0; t < V; ++t) {
    deg[0].words.emplace_back();
    deg[0].start.push_back(t);
    deg[0].end.push_back(t);
  }
  for (std::size_t i = 1; i <= top; ++i) {
    const auto& prev = deg[i - 1];
    auto& cur = deg[i];
    if (i == 1) {
      for (std::size_t x = 0; x < L; ++x) {
        cur.words.emplace_back(1, char(x));
        cur.start.push_back(s.bigrading[x].first);
        cur.end.push_back(s.bigrading[x].second);
      }
      continue;
    }
    for (std::size_t w = 0; w < prev.words.size(); ++w) {
      for (std::size_t x = 0; x < L; ++x) {
        if (s.bigrading[x].first != prev.end[w]) continue;
        cur.words.push_back(prev.words[w] + char(x));
        cur.start.push_back(prev.start[w]);
        cur.end.push_back(s.bigrading[x].second);
      }
    }
  }
  CochainComplex<R> cx;
  cx.ring = ring;
  cx.method = Method::Cibils;
  for (auto& d : deg) {
    for (std::size_t w = 0; w < d.words.size(); ++w) {
      d.offset.push_back(d.rank);
      d.rank += coords[d.start[w]][d.end[w]].size();
      d.index.emplace(d.words[w], w);
    }
    if (d.rank > opts.size_budget) throw SizeBudgetExceeded(d.rank, opts.size_budget);
    cx.ranks.push_back(d.rank);
  }

  auto signed_value = [&](bool negative, const E& v) { return negative ? ring.neg(v) : v; };
  for (std::size_t i = 0; i < top; ++i) {
    const auto& src = deg[i];
    const auto& dst = deg[i + 1];
    std::vector<typename SparseMatrix<R>::Row> rows(dst.rank);
    auto locate = [&](const std::string& w, std::size_t vertex) -> std::size_t {
      if (w.empty()) return vertex;
      return src.index.at(w);
    };
    auto build = [&](std::size_t w) {
      const std::string& word = dst.words[w];
      const std::size_t s0 = dst.start[w], s1 = dst.end[w];
      for (std::size_t k = 0; k < coords[s0][s1].size(); ++k) {
        const std::size_t qp = coords[s0][s1][k];
        auto& row = rows[dst.offset[w] + k];
        {
          const std::size_t x = static_cast<unsigned char>(word.front());
          const std::size_t r = locate(word.substr(1), s.bigrading[x].second);
          const auto& cs = coords[src.start[r]][src.end[r]];
          for (std::size_t c = 0; c < cs.size(); ++c) {
            const E& v = left[x][qp][cs[c]];
            if (!ring.is_zero(v)) row.emplace_back(static_cast<std::uint32_t>(src.offset[r] + c), v);
          }
        }
        for (std::size_t j = 0; j + 1 < word.size(); ++j) {
          const std::size_t x = static_cast<unsigned char>(word[j]), y = static_cast<unsigned char>(word[j + 1]);
          for (const auto& [l, c] : products[x * L + y]) {
            std::string merged = word.substr(0, j) + char(l) + word.substr(j + 2);
            const std::size_t r = src.index.at(merged);
            const auto p = pos[src.start[r]][src.end[r]][qp];
            if (p < 0) throw std::logic_error("inconsistent bigrading in radical product");
            row.emplace_back(static_cast<std::uint32_t>(src.offset[r] + static_cast<std::size_t>(p)),
                             signed_value(j % 2 == 0, c));
          }
        }
        {
          const std::size_t x = static_cast<unsigned char>(word.back());
          const std::size_t r = locate(word.substr(0, word.size() - 1), s.bigrading[x].first);
          const auto& cs = coords[src.start[r]][src.end[r]];
          for (std::size_t c = 0; c < cs.size(); ++c) {
            const E& v = right[x][qp][cs[c]];
            if (!ring.is_zero(v)) row.emplace_back(static_cast<std::uint32_t>(src.offset[r] + c), signed_value(i % 2 == 0, v));
          }
        }
        normalize_row(ring, row);
      }
    };
    const auto words = static_cast<std::ptrdiff_t>(dst.words.size());
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t w = 0; w < words; ++w) build(static_cast<std::size_t>(w));
    } else {
      for (std::ptrdiff_t w = 0; w < words; ++w) build(static_cast<std::size_t>(w));
    }
    cx.differentials.push_back(SparseMatrix<R>::from_rows(ring, src.rank, std::move(rows)));
  }

  auto shared = std::make_shared<std::vector<CibilsWords>>(std::move(deg));
  auto tags = m.tags();
  cx.labeler = [shared, coords, tags](std::size_t degree, std::size_t index) {
    const auto& d = (*shared)[degree];
    const auto it = std::upper_bound(d.offset.begin(), d.offset.end(), index);
    const std::size_t w = static_cast<std::size_t>(it - d.offset.begin()) - 1;
    std::string s = "(";
    if (d.words[w].empty()) {
      s += "e" + std::to_string(d.start[w] + 1);
    } else {
      for (std::size_t k = 0; k < d.words[w].size(); ++k) {
        if (k) s += ",";
        s += "x" + std::to_string(static_cast<unsigned char>(d.words[w][k]) + 1);
      }
    }
    return s + ";" + tags[coords[d.start[w]][d.end[w]][index - d.offset[w]]] + ")";
  };
  return cx;
}

template <ExactRing R>
CochainComplex<R> jn_periodic_complex(const R& ring, std::size_t n, std::size_t top) {
  if (n < 2) throw CatalogError("BadParams: J_n needs n >= 2");
  const Ring tag = ring_of(ring);
  const Algebra a = catalog("J" + std::to_string(n), tag);
  // basis E_{n,1..n}, E_{n-1,1..n}, ..., E_{2,1..n}
  std::vector<QMatrix> upper;
  std::vector<std::string> tags;
  for (std::size_t i = n; i >= 2; --i) {
    for (std::size_t j = 1; j <= n; ++j) {
      upper.push_back(QMatrix::unit(n, i - 1, j - 1));
      tags.push_back(unit_tag(i - 1, j - 1));
    }
  }
  const Bimodule m = subquotient_bimodule(a, upper, tags, a.basis());
  const QMatrix& x = a.basis()[1];
  std::vector<QMatrix> xp{QMatrix::identity(n)};
  for (std::size_t k = 1; k < n; ++k) xp.push_back(xp.back() * x);

  const std::size_t dim = m.dim();
  std::vector<Triplet<typename R::Element>> b;
  for (std::size_t j = 0; j < dim; ++j) {
    const QMatrix& v = m.representatives()[j];
    const auto image = m.class_of(v * x - x * v);
    QMatrix norm(n, n);
    for (std::size_t k = 0; k < n; ++k) norm = norm + xp[k] * v * xp[n - 1 - k];
    const auto nimage = m.class_of(norm);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn((*nimage)[i]) != 0) throw std::logic_error("norm map of J_n is not zero on the quotient");
      const auto e = ring.from_rational((*image)[i]);
      if (!ring.is_zero(e)) b.push_back({std::uint32_t(i), std::uint32_t(j), e});
    }
  }
  const auto B = SparseMatrix<R>::from_triplets(ring, dim, dim, std::move(b));
  CochainComplex<R> cx;
  cx.ring = ring;
  cx.method = Method::JnPeriodic;
  cx.ranks.assign(top + 1, dim);
  for (std::size_t p = 0; p < top; ++p) {
    cx.differentials.push_back(p % 2 == 0 ? B : SparseMatrix<R>(ring, dim, dim));
  }
  cx.labeler = [tags](std::size_t, std::size_t index) { return tags[index]; };
  return cx;
}

// ---- cup product ---------------------------------------------------------------

Pairing Pairing::matrix_product(const Bimodule& m, const Bimodule& n, const Bimodule& l) {
  Pairing p;
  p.ring_ = l.ring();
  p.m_ = m.dim();
  p.n_ = n.dim();
  p.l_ = l.dim();
  for (std::size_t i = 0; i < p.m_; ++i) {
    for (std::size_t j = 0; j < p.n_; ++j) {
      auto c = l.class_of(m.representatives()[i] * n.representatives()[j]);
      if (!c) throw std::invalid_argument("pairing leaves the target bimodule");
      p.table_.push_back(std::move(*c));
    }
  }
  return p;
}

Cochain cup_product(const Cochain& f, const Cochain& g, std::size_t alphabet, const Pairing& pairing,
                    std::size_t max_degree) {
  const std::size_t p = f.degree, q = g.degree;
  if (p + q > max_degree) {
    throw DegreeError("DegreeOverflow: cup product of degrees " + std::to_string(p) + " and " + std::to_string(q) +
                      " exceeds " + std::to_string(max_degree));
  }
  auto pw = [&](std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= alphabet;
    return r;
  };
  const std::size_t m = pairing.left_dim(), n = pairing.right_dim(), l = pairing.target_dim();
  if (f.coords.size() != pw(p) * m || g.coords.size() != pw(q) * n) {
    throw std::invalid_argument("cochain length does not match its degree");
  }
  Cochain h{p + q, QVector(pw(p + q) * l, 0)};
  for (std::size_t u = 0; u < pw(p); ++u) {
    for (std::size_t i = 0; i < m; ++i) {
      const mpq_class& fu = f.coords[u * m + i];
      if (sgn(fu) == 0) continue;
      for (std::size_t v = 0; v < pw(q); ++v) {
        const std::size_t w = u * pw(q) + v;
        for (std::size_t j = 0; j < n; ++j) {
          const mpq_class& gv = g.coords[v * n + j];
          if (sgn(gv) == 0) continue;
          const QVector& t = pairing(i, j);
          for (std::size_t k = 0; k < l; ++k) {
            if (sgn(t[k]) != 0) h.coords[w * l + k] += fu * gv * t[k];
          }
        }
      }
    }
  }
  for (auto& x : h.coords) x = canonical(pairing.ring(), x);
  return h;
}

template <ExactRing R>
Cochain coboundary(const CochainComplex<R>& cx, const Cochain& f) {
  if (f.degree >= cx.differentials.size()) throw DegreeError("DegreeOutOfRange: no differential out of degree " + std::to_string(f.degree));
  const auto& d = cx.differentials[f.degree];
  std::vector<typename R::Element> x;
  for (const auto& c : f.coords) x.push_back(cx.ring.from_rational(c));
  const auto y = d.apply(x);
  Cochain out{f.degree + 1, {}};
  for (const auto& e : y) out.coords.push_back(cx.ring.to_rational(e));
  return out;
}

#define MOLDS_INSTANTIATE(R)                                                                                        \
  template std::optional<std::size_t> square_zero_violation<R>(const CochainComplex<R>&);                           \
  template CochainComplex<R> bar_complex<R>(const R&, const Algebra&, const Bimodule&, std::size_t,                  \
                                            const BuildOptions&);                                                    \
  template CochainComplex<R> reduced_bar_complex<R>(const R&, const Algebra&, const Bimodule&, std::size_t,          \
                                                    const BuildOptions&);                                            \
  template CochainComplex<R> cibils_complex<R>(const R&, const Algebra&, const Splitting&, const Bimodule&,           \
                                               std::size_t, const BuildOptions&);                                    \
  template CochainComplex<R> jn_periodic_complex<R>(const R&, std::size_t, std::size_t);                             \
  template CochainComplex<R> reference::bar_complex<R>(const R&, const Algebra&, const Bimodule&, std::size_t);      \
  template CochainComplex<R> reference::reduced_bar_complex<R>(const R&, const Algebra&, const Bimodule&,            \
                                                               std::size_t);                                         \
  template Cochain coboundary<R>(const CochainComplex<R>&, const Cochain&);

MOLDS_INSTANTIATE(Rationals)
MOLDS_INSTANTIATE(PrimeField)
MOLDS_INSTANTIATE(Integers)

#undef MOLDS_INSTANTIATE

}  // namespace molds
