#pragma once

// A-bimodules realised as subquotients U/L of M_n, where L ⊆ U are A-stable
// lattices.  Basis vectors are classes of chosen representatives.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "molds/algebra.hpp"

namespace molds {

class Bimodule {
 public:
  std::size_t dim() const { return reps_.size(); }
  std::size_t n() const { return n_; }
  const Ring& ring() const { return ring_; }
  // Column j of left(i) holds the coordinates of a_i * v_j; right(i) those of v_j * a_i.
  const QMatrix& left(std::size_t i) const { return left_[i]; }
  const QMatrix& right(std::size_t i) const { return right_[i]; }
  std::size_t algebra_dim() const { return left_.size(); }
  const std::vector<QMatrix>& representatives() const { return reps_; }
  const std::vector<std::string>& tags() const { return tags_; }

  // Coordinates of the class of x, or nullopt when x lies outside U.
  std::optional<QVector> class_of(const QMatrix& x) const;

  // Action of an arbitrary algebra element given by coordinates.
  QMatrix left_action(const QVector& coords) const;
  QMatrix right_action(const QVector& coords) const;

  // The same subquotient with actions recomputed for another basis of A.
  Bimodule rebind(const Algebra& a) const;

  friend Bimodule subquotient_bimodule(const Algebra& a, const std::vector<QMatrix>& upper,
                                       const std::vector<std::string>& upper_tags,
                                       const std::vector<QMatrix>& lower);
  friend Bimodule quotient_bimodule(const Algebra& a);

 private:
  std::size_t n_ = 0;
  Ring ring_ = Ring::rationals();
  std::size_t lower_rank_ = 0;
  std::vector<QMatrix> reps_;
  std::vector<std::string> tags_;
  std::vector<QMatrix> left_;
  std::vector<QMatrix> right_;
  std::shared_ptr<const Span> span_;  // lower basis followed by the representatives
  std::vector<QMatrix> upper_;
  std::vector<std::string> upper_tags_;
  std::vector<QMatrix> lower_;
};

// span(upper) / span(lower), taking representatives greedily from `upper` in
// order.  Throws NotStable when either lattice is not A-stable.
Bimodule subquotient_bimodule(const Algebra& a, const std::vector<QMatrix>& upper,
                              const std::vector<std::string>& upper_tags, const std::vector<QMatrix>& lower);

// span(units in upper_tags) + L over L = span(units in lower_tags) + A, with
// tags written "E<i><j>" (or "E<i>,<j>" when n > 9).  Unit order in
// upper_tags fixes the choice of representatives.
Bimodule matrix_unit_subquotient(const Algebra& a, const std::vector<std::string>& upper_tags,
                                 const std::vector<std::string>& lower_tags);

// M_n / A with matrix units scanned in row-major order.
Bimodule quotient_bimodule(const Algebra& a);

// A itself, with the regular actions.
Bimodule regular_bimodule(const Algebra& a);

// The matrix unit E_{ij} (zero-based) and its tag "E<i+1><j+1>".
std::string unit_tag(std::size_t i, std::size_t j);

}  // namespace molds
