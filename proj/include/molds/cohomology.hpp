#pragma once

// Cohomology of a truncated cochain complex.  Over a field H^p has dimension
// (rank C^p - rank d^p) - rank d^{p-1}.  Over Z the free rank is
// nullity_Q(d^p) - rank_Q(d^{p-1}) and the torsion is the list of Smith
// invariant factors of d^{p-1} exceeding 1.  d^{-1} = 0 throughout.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "molds/complexes.hpp"

namespace molds {

struct DegreeCohomology {
  std::size_t degree = 0;
  std::size_t dim = 0;        // over Z: equal to free_rank
  std::size_t free_rank = 0;  // over a field: equal to dim
  std::vector<mpz_class> torsion;
};

struct CohomologyResult {
  Ring ring = Ring::rationals();
  Method method = Method::Bar;
  std::vector<DegreeCohomology> degrees;
  std::vector<std::size_t> ranks;  // ranks of the cochain modules that were built

  std::vector<std::size_t> dims() const;
  const DegreeCohomology& at(std::size_t degree) const;
};

// H^first .. H^last.  Throws DegreeError (DegreeOutOfRange) when last >= top.
template <ExactRing R>
CohomologyResult compute_cohomology(const CochainComplex<R>& cx, std::size_t first, std::size_t last);

struct ComputeOptions {
  Method method = Method::Auto;
  std::size_t size_budget = kDefaultSizeBudget;
  bool verify_square_zero = true;
  bool parallel = true;
  std::optional<Splitting> splitting;  // used by cibils instead of detection
};

// H^0 .. H^max_degree of A with coefficients in M (default M_n / A).
// Auto picks jn for the J_n family, cibils when a splitting is known or
// detected, and the reduced bar complex otherwise.  The method actually used
// is recorded in the result.
CohomologyResult cohomology_of(const Algebra& a, const std::optional<Bimodule>& m, std::size_t max_degree,
                               const ComputeOptions& opts = {});

// The method auto would pick (jn is only chosen for the default bimodule).
Method resolve_method(const Algebra& a, bool default_bimodule, const ComputeOptions& opts);

}  // namespace molds
