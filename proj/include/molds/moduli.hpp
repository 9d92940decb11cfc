#pragma once

// Normalizer, derivations and tangent dimension of the moduli of molds at A,
// with the one-sided smoothness and open-orbit certificates.
//
//   N(A)       = { X in M_n : [X, a] in A for all a in A }
//   dim H^0    = dim N(A) - d
//   dim T      = dim H^1 + n^2 - dim N(A) = dim Der(A, M_n/A)

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "molds/cohomology.hpp"

namespace molds {

enum class Certificate { Yes, Inconclusive };

std::string_view certificate_name(Certificate c);

struct Normalizer {
  std::size_t dim = 0;
  std::vector<QMatrix> basis;  // over Z a lattice basis
};

Normalizer normalizer(const Algebra& a);

// dim of the 1-cocycles of the bar complex with coefficients in M_n/A.  Field only.
std::size_t derivation_dim(const Algebra& a);

// dim H^1 + n^2 - dim N(A).  Field only.
std::size_t tangent_dimension(const Algebra& a, const ComputeOptions& opts = {});

struct ModuliReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t normalizer_dim = 0;
  std::vector<QMatrix> normalizer_basis;
  std::size_t derivation_dim = 0;
  DegreeCohomology h0, h1, h2;
  Method method = Method::Auto;
  std::size_t tangent_dim = 0;
  Certificate smooth = Certificate::Inconclusive;
  Certificate orbit_open = Certificate::Inconclusive;
  std::string caveat;  // empty when both certificates are yes

  // h0 = N - d, tangent = h1 + n^2 - N, derivations = tangent
  bool consistent() const;
};

// Field only; throws DomainNotField over Z.
ModuliReport moduli_report(const Algebra& a, const ComputeOptions& opts = {});

}  // namespace molds
