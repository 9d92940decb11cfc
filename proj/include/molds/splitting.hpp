#pragma once

// A = E ⊕ r with E spanned by orthogonal idempotents summing to I and r a
// nilpotent two-sided ideal with a basis of bigraded elements.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "molds/algebra.hpp"

namespace molds {

struct Splitting {
  std::vector<QMatrix> idempotents;
  std::vector<QMatrix> radical;
  // e_s x e_t = x for radical[k] with bigrading[k] = (s, t), zero-based.
  std::vector<std::pair<std::size_t, std::size_t>> bigrading;
  // Coordinates in the algebra basis.
  std::vector<QVector> idempotent_coords;
  std::vector<QVector> radical_coords;
  // x_j x_k = sum_l products[(j * r + k) * r + l] x_l
  std::vector<mpq_class> products;

  std::size_t vertices() const { return idempotents.size(); }
  std::size_t letters() const { return radical.size(); }
  const mpq_class& product(std::size_t j, std::size_t k, std::size_t l) const {
    return products[(j * radical.size() + k) * radical.size() + l];
  }
};

// Checks every splitting invariant; throws ValidationError(NotSplit).
Splitting validate_splitting(const Algebra& a, const std::vector<QMatrix>& idempotents,
                             const std::vector<QMatrix>& radical);

// For bases made of 0/1 matrix-unit sums: diagonal basis elements become the
// idempotents and off-diagonal ones the radical.  nullopt when that fails.
std::optional<Splitting> detect_splitting(const Algebra& a, std::string* why = nullptr);

}  // namespace molds
