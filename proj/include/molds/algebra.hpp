#pragma once

// Subalgebras A of M_n(R) given by a basis of n x n matrices.
//
// Entries are stored as rationals in the ring's canonical form (residues in
// [0, p) over F_p), so the same data drives the Q, F_p and Z kernels.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "molds/errors.hpp"
#include "molds/qmatrix.hpp"
#include "molds/ring.hpp"
#include "molds/span.hpp"

namespace molds {

// a_i a_j = sum_k c(i, j, k) a_k and I = sum_i unit[i] a_i.
struct StructureConstants {
  std::size_t d = 0;
  std::vector<mpq_class> table;
  QVector unit;

  const mpq_class& operator()(std::size_t i, std::size_t j, std::size_t k) const { return table[(i * d + j) * d + k]; }
};

// Parametric family membership, e.g. {'J', {3}} for J_3.
struct Family {
  char letter = 0;
  std::vector<std::size_t> params;
};

class Algebra {
 public:
  // Validates independence, (over Z) saturation, closure and the unit.
  static Algebra verify(std::size_t n, const Ring& ring, std::vector<QMatrix> basis, std::string name = {});

  std::size_t n() const { return n_; }
  std::size_t d() const { return basis_.size(); }
  const Ring& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  const std::vector<QMatrix>& basis() const { return basis_; }
  const StructureConstants& constants() const { return constants_; }
  const std::optional<Family>& family() const { return family_; }

  std::optional<QVector> coordinates(const QMatrix& x) const;
  bool contains(const QMatrix& x) const { return coordinates(x).has_value(); }
  QMatrix element(const QVector& coords) const;
  QMatrix multiply(const QMatrix& a, const QMatrix& b) const;

  Algebra renamed(std::string name) const;
  Algebra with_family(Family f) const;
  // Same algebra re-based so that the first basis element is the identity.
  Algebra unit_first() const;

 private:
  Algebra() = default;

  std::size_t n_ = 0;
  Ring ring_ = Ring::rationals();
  std::string name_;
  std::vector<QMatrix> basis_;
  StructureConstants constants_;
  std::optional<Family> family_;
  std::shared_ptr<const Span> span_;
};

QMatrix canonical(const Ring& ring, const QMatrix& m);
// Inverse over the ring (unimodular over Z), or nullopt.
std::optional<QMatrix> inverse(const Ring& ring, const QMatrix& m);

Algebra transpose_algebra(const Algebra& a);
// Basis P^{-1} a_i P.  Throws NotInvertible.
Algebra conjugate_algebra(const Algebra& a, const QMatrix& p);
Algebra direct_product(const Algebra& a, const Algebra& b);

}  // namespace molds
