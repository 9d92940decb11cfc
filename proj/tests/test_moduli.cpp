#include <doctest.h>

#include "expected.hpp"
#include "molds/catalog.hpp"
#include "molds/moduli.hpp"
#include "oracles.hpp"

using namespace molds;

namespace {

std::size_t rank_q_of(const oracle::ZDense& m) {
  oracle::QDense q;
  for (const auto& row : m) q.emplace_back(row.begin(), row.end());
  return oracle::rank_q(q);
}

unsigned characteristic(const Ring& r) { return r.kind() == Ring::Kind::PrimeField ? r.characteristic() : 0; }

// Unknowns X (n^2) and c_ij (d^2) with [X, a_i] = sum_j c_ij a_j; the
// solution space projects isomorphically onto N(A).
std::size_t normalizer_oracle(const Algebra& a, unsigned ch) {
  const std::size_t n = a.n(), d = a.d(), unknowns = n * n + d * d;
  oracle::ZDense sys;
  for (std::size_t i = 0; i < d; ++i) {
    const QMatrix& b = a.basis()[i];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<mpz_class> row(unknowns, 0);
        // ([X, b])_{rs} = sum_k X_rk b_ks - b_rk X_ks
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] += b(k, s).get_num();
          row[k * n + s] -= b(r, k).get_num();
        }
        for (std::size_t j = 0; j < d; ++j) row[n * n + i * d + j] -= a.basis()[j](r, s).get_num();
        sys.push_back(std::move(row));
      }
    }
  }
  const std::size_t rk = ch ? oracle::rank_mod_p(sys, ch) : rank_q_of(sys);
  return unknowns - rk;
}

}  // namespace

TEST_CASE("normalizer dimensions") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)}) {
    for (const auto& e : all_catalog_entries()) {
      CAPTURE(e.name);
      CAPTURE(ring.tag());
      const Algebra a = catalog(e.name, ring);
      const auto nz = normalizer(a);
      CHECK(nz.dim == expected::normalizer_dim(e.name, characteristic(ring)));
      CHECK(nz.dim == normalizer_oracle(a, characteristic(ring)));
      const Span span(ring, a.n() * a.n(), [&] {
        std::vector<QVector> v;
        for (const auto& x : nz.basis) v.push_back(x.entries());
        return v;
      }());
      for (const auto& b : a.basis()) CHECK(span.contains(b.entries()));
    }
  }
  CHECK(normalizer(catalog("M3", Ring::rationals())).dim == 9);
  CHECK(normalizer(catalog("J4", Ring::rationals())).dim == 7);
  CHECK(normalizer(catalog("J4", Ring::prime_field(2))).dim == 8);
}

TEST_CASE("normalizer over Z") {
  for (const char* name : {"J3", "N2", "S6", "B3", "C3"}) {
    CAPTURE(name);
    const Algebra a = catalog(name, Ring::integers());
    const auto nz = normalizer(a);
    CHECK(nz.dim == expected::normalizer_dim(name, 0));
    for (const auto& x : nz.basis) {
      CHECK(x.is_integral());
      for (const auto& b : a.basis()) CHECK(a.contains(x * b - b * x));
    }
  }
}

TEST_CASE("tangent dimension and derivations") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)}) {
    for (const auto& e : all_catalog_entries()) {
      CAPTURE(e.name);
      CAPTURE(ring.tag());
      const auto r = moduli_report(catalog(e.name, ring));
      CHECK(r.consistent());
      CHECK(r.h0.dim + r.d == r.normalizer_dim);
      CHECK(r.derivation_dim == r.tangent_dim);
      if (ring == Ring::rationals()) CHECK(r.tangent_dim == expected::kTangent.at(e.name));
    }
  }
  CHECK(tangent_dimension(catalog("J3", Ring::rationals())) == 6);
  CHECK(tangent_dimension(catalog("J3", Ring::prime_field(3))) == 6);
  CHECK(derivation_dim(catalog("M3", Ring::rationals())) == 0);
  CHECK(derivation_dim(catalog("B3", Ring::rationals())) == 3);
  CHECK(derivation_dim(catalog("S4", Ring::rationals())) == 8);
}

TEST_CASE("certificates") {
  for (const auto& e : all_catalog_entries()) {
    CAPTURE(e.name);
    const auto r = moduli_report(catalog(e.name, Ring::rationals()));
    const bool h1 = expected::h_dim(e.name, 0, 1) == 0, h2 = expected::h_dim(e.name, 0, 2) == 0;
    CHECK((r.smooth == Certificate::Yes) == h2);
    CHECK((r.orbit_open == Certificate::Yes) == h1);
    CHECK(r.caveat.empty() == (h1 && h2));
  }
  const auto j3 = moduli_report(catalog("J3", Ring::rationals()));
  CHECK(j3.smooth == Certificate::Inconclusive);
  CHECK(j3.orbit_open == Certificate::Inconclusive);
  CHECK(j3.caveat.find("may still be smooth") != std::string::npos);
  const auto b3 = moduli_report(catalog("B3", Ring::rationals()));
  CHECK(b3.smooth == Certificate::Yes);
  CHECK(b3.orbit_open == Certificate::Yes);
  CHECK(certificate_name(Certificate::Yes) == "yes");
  CHECK(certificate_name(Certificate::Inconclusive) == "inconclusive");
  CHECK_THROWS_AS(moduli_report(catalog("B3", Ring::integers())), DomainNotField);
}
