#pragma once

// Spans of coordinate vectors over a coefficient ring, with membership tests
// and coordinates.  Over Z the arithmetic runs over Q and coordinates are
// accepted only when integral.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "molds/ring.hpp"

namespace molds {

using QVector = std::vector<mpq_class>;

// Reduce a rational into the ring's canonical representative: residues in
// [0, p) for F_p, the value itself for Q and Z.  Throws NotRepresentable.
mpq_class canonical(const Ring& ring, const mpq_class& q);

template <class Fn>
decltype(auto) visit_field(const Ring& ring, Fn&& fn) {
  if (ring.kind() == Ring::Kind::PrimeField) return fn(PrimeField{ring.characteristic()});
  return fn(Rationals{});
}

template <ExactField F>
class BasicSpan {
 public:
  using E = typename F::Element;

  BasicSpan(F f, std::size_t length, const std::vector<std::vector<E>>& vectors);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t count() const { return count_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Coefficients c with sum c_i v_i = v, or nullopt if v is outside the span.
  std::optional<std::vector<E>> coordinates(const std::vector<E>& v) const;

 private:
  F f_;
  std::size_t length_;
  std::size_t count_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<E>> reduced_;
  std::vector<std::vector<E>> transform_;
};

class Span {
 public:
  Span(const Ring& ring, std::size_t length, const std::vector<QVector>& vectors);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const;
  std::size_t count() const { return count_; }
  bool independent() const { return rank() == count_; }
  std::optional<QVector> coordinates(const QVector& v) const;
  bool contains(const QVector& v) const { return coordinates(v).has_value(); }

 private:
  Ring ring_;
  std::size_t count_;
  std::variant<BasicSpan<Rationals>, BasicSpan<PrimeField>> impl_;
};

}  // namespace molds
