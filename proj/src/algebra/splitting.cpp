#include "molds/splitting.hpp"

namespace molds {

namespace {

[[noreturn]] void not_split(const std::string& why) {
  throw ValidationError(ValidationError::Reason::NotSplit, why);
}

bool zero_one(const QMatrix& m) {
  for (const auto& x : m.entries()) {
    if (x != 0 && x != 1) return false;
  }
  return true;
}

}  // namespace

Splitting validate_splitting(const Algebra& a, const std::vector<QMatrix>& idempotents,
                             const std::vector<QMatrix>& radical) {
  const std::size_t n = a.n();
  const Ring& ring = a.ring();
  Splitting s;
  if (idempotents.empty()) not_split("no idempotents");
  if (idempotents.size() + radical.size() != a.d()) not_split("idempotents and radical do not have d elements in total");

  QMatrix sum(n, n);
  for (std::size_t t = 0; t < idempotents.size(); ++t) {
    const QMatrix e = canonical(ring, idempotents[t]);
    auto c = a.coordinates(e);
    if (!c) not_split("idempotent " + std::to_string(t + 1) + " is not in A");
    if (!(a.multiply(e, e) == e)) not_split("e_" + std::to_string(t + 1) + " is not idempotent");
    for (std::size_t u = 0; u < t; ++u) {
      if (!a.multiply(e, s.idempotents[u]).is_zero() || !a.multiply(s.idempotents[u], e).is_zero()) {
        not_split("idempotents " + std::to_string(u + 1) + " and " + std::to_string(t + 1) + " are not orthogonal");
      }
    }
    sum = canonical(ring, sum + e);
    s.idempotents.push_back(e);
    s.idempotent_coords.push_back(std::move(*c));
  }
  if (!(sum == QMatrix::identity(n))) not_split("idempotents do not sum to the identity");

  for (std::size_t k = 0; k < radical.size(); ++k) {
    const QMatrix x = canonical(ring, radical[k]);
    auto c = a.coordinates(x);
    if (!c) not_split("radical element " + std::to_string(k + 1) + " is not in A");
    std::optional<std::pair<std::size_t, std::size_t>> grade;
    for (std::size_t i = 0; i < s.idempotents.size() && !grade; ++i) {
      for (std::size_t j = 0; j < s.idempotents.size(); ++j) {
        if (a.multiply(a.multiply(s.idempotents[i], x), s.idempotents[j]) == x && !x.is_zero()) {
          grade = std::make_pair(i, j);
          break;
        }
      }
    }
    if (!grade) not_split("radical element " + std::to_string(k + 1) + " is not homogeneous");
    s.radical.push_back(x);
    s.radical_coords.push_back(std::move(*c));
    s.bigrading.push_back(*grade);
  }

  // E ⊕ r = A: the coordinate vectors form a basis (unimodular over Z).
  {
    QMatrix coords(a.d(), a.d());
    std::size_t row = 0;
    for (const auto& v : s.idempotent_coords) {
      for (std::size_t j = 0; j < a.d(); ++j) coords(row, j) = v[j];
      ++row;
    }
    for (const auto& v : s.radical_coords) {
      for (std::size_t j = 0; j < a.d(); ++j) coords(row, j) = v[j];
      ++row;
    }
    if (!inverse(ring, coords)) not_split("idempotents and radical do not form a basis of A");
  }

  const std::size_t r = s.radical.size();
  std::vector<QVector> rad_vectors;
  for (const auto& x : s.radical) rad_vectors.push_back(x.entries());
  const Span rad(ring, n * n, rad_vectors);
  s.products.assign(r * r * r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      auto c = rad.coordinates(a.multiply(s.radical[j], s.radical[k]).entries());
      if (!c) not_split("radical is not an ideal: x_" + std::to_string(j + 1) + " x_" + std::to_string(k + 1));
      for (std::size_t l = 0; l < r; ++l) s.products[(j * r + k) * r + l] = (*c)[l];
    }
  }

  // r^k = 0 for some k <= n.
  std::vector<QMatrix> power = s.radical;
  for (std::size_t k = 1; !power.empty(); ++k) {
    if (k >= n) not_split("radical is not nilpotent");
    std::vector<QMatrix> next;
    std::vector<QVector> seen;
    for (const auto& p : power) {
      for (const auto& x : s.radical) {
        QMatrix q = a.multiply(p, x);
        if (q.is_zero()) continue;
        seen.push_back(q.entries());
        if (Span(ring, n * n, seen).independent()) {
          next.push_back(std::move(q));
        } else {
          seen.pop_back();
        }
      }
    }
    power = std::move(next);
  }
  return s;
}

std::optional<Splitting> detect_splitting(const Algebra& a, std::string* why) {
  std::vector<QMatrix> diag, off;
  for (std::size_t k = 0; k < a.d(); ++k) {
    const QMatrix& b = a.basis()[k];
    if (!zero_one(b)) {
      if (why) *why = "basis element " + std::to_string(k + 1) + " is not a 0/1 matrix";
      return std::nullopt;
    }
    bool on = false, offd = false;
    for (std::size_t i = 0; i < a.n(); ++i) {
      for (std::size_t j = 0; j < a.n(); ++j) {
        if (b(i, j) == 0) continue;
        (i == j ? on : offd) = true;
      }
    }
    if (on && offd) {
      if (why) *why = "basis element " + std::to_string(k + 1) + " mixes diagonal and off-diagonal units";
      return std::nullopt;
    }
    (on ? diag : off).push_back(b);
  }
  try {
    return validate_splitting(a, diag, off);
  } catch (const ValidationError& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
}

}  // namespace molds
