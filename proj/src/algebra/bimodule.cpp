#include "molds/bimodule.hpp"

#include <cctype>

#include "molds/exactla.hpp"

namespace molds {

namespace {

using Reason = ValidationError::Reason;

bool saturated_rows(const std::vector<QVector>& rows, std::size_t cols) {
  std::vector<Triplet<mpz_class>> t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(rows[i][j]) != 0) t.push_back({std::uint32_t(i), std::uint32_t(j), rows[i][j].get_num()});
    }
  }
  const auto s = la::smith_normal_form(SparseMatrix<Integers>::from_triplets(Integers{}, rows.size(), cols, t));
  if (s.rank != rows.size()) return false;
  for (const auto& f : s.invariant_factors) {
    if (f != 1) return false;
  }
  return true;
}

}  // namespace

std::string unit_tag(std::size_t i, std::size_t j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); }

std::optional<QVector> Bimodule::class_of(const QMatrix& x) const {
  auto c = span_->coordinates(canonical(ring_, x).entries());
  if (!c) return std::nullopt;
  return QVector(c->begin() + static_cast<std::ptrdiff_t>(lower_rank_), c->end());
}

QMatrix Bimodule::left_action(const QVector& coords) const {
  QMatrix m(dim(), dim());
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (sgn(coords[i]) != 0) m = m + left_[i].scaled(coords[i]);
  }
  return canonical(ring_, m);
}

QMatrix Bimodule::right_action(const QVector& coords) const {
  QMatrix m(dim(), dim());
  for (std::size_t i = 0; i < right_.size(); ++i) {
    if (sgn(coords[i]) != 0) m = m + right_[i].scaled(coords[i]);
  }
  return canonical(ring_, m);
}

Bimodule Bimodule::rebind(const Algebra& a) const { return subquotient_bimodule(a, upper_, upper_tags_, lower_); }

Bimodule subquotient_bimodule(const Algebra& a, const std::vector<QMatrix>& upper,
                              const std::vector<std::string>& upper_tags, const std::vector<QMatrix>& lower) {
  const std::size_t n = a.n();
  const Ring& ring = a.ring();
  const bool over_z = ring.kind() == Ring::Kind::Integers;
  if (upper_tags.size() != upper.size()) throw ValidationError(Reason::BadShape, "one tag per upper generator");

  std::vector<QVector> rows;
  for (const auto& l : lower) {
    auto v = canonical(ring, l).entries();
    rows.push_back(v);
    if (Span(ring, n * n, rows).rank() < rows.size()) rows.pop_back();
  }
  const std::size_t lower_rank = rows.size();
  if (over_z && lower_rank > 0 && !saturated_rows(rows, n * n)) {
    throw ValidationError(Reason::NotSaturated, "lower lattice is not a direct summand");
  }

  Bimodule m;
  m.n_ = n;
  m.ring_ = ring;
  m.lower_rank_ = lower_rank;
  m.upper_ = upper;
  m.upper_tags_ = upper_tags;
  m.lower_ = lower;
  std::vector<QMatrix> upper_c;
  for (std::size_t k = 0; k < upper.size(); ++k) {
    const QMatrix u = canonical(ring, upper[k]);
    upper_c.push_back(u);
    rows.push_back(u.entries());
    const bool grows = Span(ring, n * n, rows).rank() == rows.size();
    if (grows && (!over_z || saturated_rows(rows, n * n))) {
      m.reps_.push_back(u);
      m.tags_.push_back(upper_tags[k]);
    } else {
      rows.pop_back();
    }
  }
  {
    std::vector<QVector> all = rows;
    for (const auto& u : upper_c) all.push_back(u.entries());
    if (Span(ring, n * n, all).rank() != rows.size()) {
      throw ValidationError(Reason::NotSaturated, "no complement among the upper generators");
    }
  }
  m.span_ = std::make_shared<const Span>(ring, n * n, rows);

  const Span lower_span(ring, n * n, std::vector<QVector>(rows.begin(), rows.begin() + lower_rank));
  const std::size_t dim = m.reps_.size();
  for (std::size_t i = 0; i < a.d(); ++i) {
    QMatrix l(dim, dim), r(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const QMatrix& v = m.reps_[j];
      const QMatrix av = a.multiply(a.basis()[i], v);
      const QMatrix va = a.multiply(v, a.basis()[i]);
      auto cl = m.class_of(av);
      auto cr = m.class_of(va);
      if (!cl || !cr) throw ValidationError(Reason::NotStable, "upper lattice is not stable under a_" + std::to_string(i + 1));
      for (std::size_t k = 0; k < dim; ++k) {
        l(k, j) = (*cl)[k];
        r(k, j) = (*cr)[k];
      }
    }
    for (std::size_t j = 0; j < lower_rank; ++j) {
      QMatrix lj(n, n);
      for (std::size_t e = 0; e < n * n; ++e) lj(e / n, e % n) = rows[j][e];
      if (!lower_span.contains(a.multiply(a.basis()[i], lj).entries()) ||
          !lower_span.contains(a.multiply(lj, a.basis()[i]).entries())) {
        throw ValidationError(Reason::NotStable, "lower lattice is not stable under a_" + std::to_string(i + 1));
      }
    }
    m.left_.push_back(std::move(l));
    m.right_.push_back(std::move(r));
  }
  return m;
}

namespace {

std::pair<std::size_t, std::size_t> parse_unit_tag(const std::string& tag, std::size_t n) {
  auto bad = [&] { return ValidationError(Reason::BadShape, "not a matrix unit of M_" + std::to_string(n) + ": " + tag); };
  if (tag.size() < 3 || tag[0] != 'E') throw bad();
  const std::string body = tag.substr(1);
  std::size_t i = 0, j = 0;
  try {
    if (const auto comma = body.find(','); comma != std::string::npos) {
      i = std::stoul(body.substr(0, comma));
      j = std::stoul(body.substr(comma + 1));
    } else if (body.size() == 2 && std::isdigit(static_cast<unsigned char>(body[0])) &&
               std::isdigit(static_cast<unsigned char>(body[1]))) {
      i = static_cast<std::size_t>(body[0] - '0');
      j = static_cast<std::size_t>(body[1] - '0');
    } else {
      throw bad();
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (i < 1 || j < 1 || i > n || j > n) throw bad();
  return {i - 1, j - 1};
}

}  // namespace

Bimodule matrix_unit_subquotient(const Algebra& a, const std::vector<std::string>& upper_tags,
                                 const std::vector<std::string>& lower_tags) {
  const std::size_t n = a.n();
  std::vector<QMatrix> lower;
  for (const auto& t : lower_tags) {
    const auto [i, j] = parse_unit_tag(t, n);
    lower.push_back(QMatrix::unit(n, i, j));
  }
  lower.insert(lower.end(), a.basis().begin(), a.basis().end());
  std::vector<QMatrix> upper;
  std::vector<std::string> tags;
  for (const auto& t : upper_tags) {
    const auto [i, j] = parse_unit_tag(t, n);
    upper.push_back(QMatrix::unit(n, i, j));
    tags.push_back(unit_tag(i, j));
  }
  return subquotient_bimodule(a, upper, tags, lower);
}

Bimodule quotient_bimodule(const Algebra& a) {
  const std::size_t n = a.n();
  std::vector<QMatrix> units;
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      units.push_back(QMatrix::unit(n, i, j));
      tags.push_back(unit_tag(i, j));
    }
  }
  if (a.ring().kind() != Ring::Kind::Integers) return subquotient_bimodule(a, units, tags, a.basis());
  try {
    return subquotient_bimodule(a, units, tags, a.basis());
  } catch (const ValidationError& e) {
    if (e.reason() != Reason::NotSaturated) throw;
  }
  // Over Z the matrix units need not contain a complement; complete the
  // basis of A to a unimodular basis of Z^{n^2} through its Smith transform.
  std::vector<Triplet<mpz_class>> t;
  for (std::size_t i = 0; i < a.d(); ++i) {
    const auto& e = a.basis()[i].entries();
    for (std::size_t j = 0; j < n * n; ++j) {
      if (sgn(e[j]) != 0) t.push_back({std::uint32_t(i), std::uint32_t(j), e[j].get_num()});
    }
  }
  const auto s = la::smith_normal_form(SparseMatrix<Integers>::from_triplets(Integers{}, a.d(), n * n, t), true);
  QMatrix v(n * n, n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    for (const auto& [c, x] : s.right->row(i)) v(i, c) = mpq_class(x);
  }
  const auto vinv = inverse(a.ring(), v);
  std::vector<QMatrix> complement;
  std::vector<std::string> ctags;
  for (std::size_t k = a.d(); k < n * n; ++k) {
    QMatrix c(n, n);
    for (std::size_t e = 0; e < n * n; ++e) c(e / n, e % n) = (*vinv)(k, e);
    complement.push_back(std::move(c));
    ctags.push_back("v" + std::to_string(k - a.d() + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      complement.push_back(QMatrix::unit(n, i, j));
      ctags.push_back(unit_tag(i, j));
    }
  }
  return subquotient_bimodule(a, complement, ctags, a.basis());
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < a.d(); ++i) tags.push_back("a" + std::to_string(i + 1));
  return subquotient_bimodule(a, a.basis(), tags, {});
}

}  // namespace molds
