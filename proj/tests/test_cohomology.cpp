#include <doctest.h>

#include <random>

#include "expected.hpp"
#include "molds/catalog.hpp"
#include "molds/cohomology.hpp"
#include "molds/exactla.hpp"
#include "oracles.hpp"

using namespace molds;

namespace {

unsigned characteristic(const Ring& r) { return r.kind() == Ring::Kind::PrimeField ? r.characteristic() : 0; }

std::vector<std::size_t> dims(const Algebra& a, std::size_t max_degree, Method m = Method::Auto) {
  ComputeOptions o;
  o.method = m;
  return cohomology_of(a, std::nullopt, max_degree, o).dims();
}

std::vector<std::size_t> expected_dims(const std::string& name, unsigned ch, std::size_t max_degree) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i <= max_degree; ++i) v.push_back(expected::h_dim(name, ch, i));
  return v;
}

// random unimodular integer matrix: product of elementary matrices and a permutation
QMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  QMatrix p = QMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    p = p * (QMatrix::identity(n) + QMatrix::unit(n, i, j).scaled(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("field cohomology of the catalog matches the tables") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)}) {
    for (const auto& e : all_catalog_entries()) {
      CAPTURE(e.name);
      CAPTURE(ring.tag());
      CHECK(dims(catalog(e.name, ring), 4) == expected_dims(e.name, characteristic(ring), 4));
    }
  }
}

TEST_CASE("integral cohomology and torsion") {
  for (const auto& e : all_catalog_entries()) {
    CAPTURE(e.name);
    const auto r = cohomology_of(catalog(e.name, Ring::integers()), std::nullopt, 3);
    for (std::size_t i = 0; i <= 3; ++i) {
      const auto want = expected::h_int(e.name, i);
      CHECK(r.at(i).free_rank == want.free_rank);
      std::vector<long> got;
      for (const auto& t : r.at(i).torsion) got.push_back(t.get_si());
      CHECK(got == want.torsion);
    }
  }
  SUBCASE("J_n through the periodic complex") {
    for (std::size_t n = 2; n <= 5; ++n) {
      CAPTURE(n);
      const auto r = cohomology_of(catalog("J" + std::to_string(n), Ring::integers()), std::nullopt, 5);
      CHECK(r.method == Method::JnPeriodic);
      for (std::size_t i = 0; i <= 5; ++i) {
        CHECK(r.at(i).free_rank == n - 1);
        CHECK(r.at(i).torsion == (i % 2 ? std::vector<mpz_class>{mpz_class(n)} : std::vector<mpz_class>{}));
      }
    }
  }
}

TEST_CASE("bar, reduced and Cibils agree") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2)}) {
    for (const auto& e : all_catalog_entries()) {
      CAPTURE(e.name);
      CAPTURE(ring.tag());
      const Algebra a = catalog(e.name, ring);
      const auto bar = dims(a, 3, Method::Bar);
      CHECK(dims(a, 3, Method::Reduced) == bar);
      if (detect_splitting(a)) CHECK(dims(a, 3, Method::Cibils) == bar);
    }
  }
}

TEST_CASE("J_n periodic complex agrees with the bar complex") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3), Ring::integers()}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      CAPTURE(n);
      CAPTURE(ring.tag());
      const Algebra a = catalog("J" + std::to_string(n), ring);
      const auto jn = cohomology_of(a, std::nullopt, 3);
      const auto bar = cohomology_of(a, std::nullopt, 3, ComputeOptions{Method::Bar});
      CHECK(jn.method == Method::JnPeriodic);
      CHECK(bar.method == Method::Bar);
      for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(jn.at(i).dim == bar.at(i).dim);
        CHECK(jn.at(i).torsion == bar.at(i).torsion);
      }
    }
  }
}

TEST_CASE("universal coefficients link Z and F_p") {
  for (const char* name : {"J2", "J3", "N2", "S10"}) {
    CAPTURE(name);
    const Algebra az = catalog(name, Ring::integers());
    const auto z = cohomology_of(az, std::nullopt, 4, ComputeOptions{Method::Bar});
    for (unsigned p : {2u, 3u}) {
      CAPTURE(p);
      const auto f = cohomology_of(catalog(name, Ring::prime_field(p)), std::nullopt, 3, ComputeOptions{Method::Bar});
      for (std::size_t i = 0; i <= 3; ++i) {
        std::size_t count = z.at(i).free_rank;
        for (const auto& t : z.at(i).torsion) count += (t % p == 0);
        for (const auto& t : z.at(i + 1).torsion) count += (t % p == 0);
        CHECK(f.at(i).dim == count);
      }
    }
  }
}

TEST_CASE("conjugation and transpose invariance") {
  std::mt19937 rng(2024);
  for (const char* name : {"B2", "N2", "S2", "S11", "J3"}) {
    CAPTURE(name);
    const Algebra a = catalog(name, Ring::rationals());
    const auto base = dims(a, 3, Method::Reduced);
    for (int k = 0; k < 5; ++k) {
      const Algebra b = conjugate_algebra(a, random_unimodular(rng, a.n()));
      CHECK(dims(b, 3) == base);
    }
  }
  for (const auto& e : all_catalog_entries()) {
    CAPTURE(e.name);
    const Algebra a = catalog(e.name, Ring::rationals());
    CHECK(dims(transpose_algebra(a), 3) == dims(a, 3));
    CHECK(dims(catalog(e.partner, Ring::rationals()), 3) == dims(a, 3));
  }
}

TEST_CASE("product formula") {
  const Ring q = Ring::rationals();
  const Algebra d1 = Algebra::verify(1, q, {QMatrix::identity(1)}, "D1");
  for (const char* name : {"C2", "N2", "B2", "M2"}) {
    CAPTURE(name);
    const Algebra a = catalog(name, q);
    const Algebra p = direct_product(a, d1);
    const auto lhs = dims(p, 3, Method::Reduced);
    const auto x = dims(a, 3), y = dims(d1, 3, Method::Bar);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(lhs[i] == x[i] + y[i]);
    CHECK(lhs == dims(catalog(std::string(name) + "xD1", q), 3));
  }
  const auto d2 = dims(direct_product(d1, d1), 3, Method::Bar);
  CHECK(d2 == dims(catalog("D2", q), 3));
  CHECK(d2 == std::vector<std::size_t>(4, 0));
}

TEST_CASE("Euler characteristic on Cibils complexes") {
  for (const char* name : {"S6", "N3", "S4", "S11", "S1"}) {
    CAPTURE(name);
    const Algebra a = catalog(name, Ring::rationals());
    const std::size_t D = 6;
    const auto cx = cibils_complex(Rationals{}, a, *detect_splitting(a), quotient_bimodule(a), D + 1);
    const auto h = compute_cohomology(cx, 0, D);
    long lhs = 0, rhs = 0;
    for (std::size_t p = 0; p <= D; ++p) {
      const long sign = p % 2 ? -1 : 1;
      lhs += sign * static_cast<long>(cx.ranks[p]);
      rhs += sign * static_cast<long>(h.at(p).dim);
    }
    rhs += (D % 2 ? -1 : 1) * static_cast<long>(la::rank(cx.differentials[D]));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("S11 with the auxiliary bimodule") {
  const Algebra a = catalog("S11", Ring::rationals());
  const Algebra b3 = catalog("B3", Ring::rationals());
  const Bimodule mp = subquotient_bimodule(a, b3.basis(), std::vector<std::string>(6, "u"), a.basis());
  const auto r = cohomology_of(a, mp, 6);
  CHECK(r.method == Method::Cibils);
  CHECK(r.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0});
  CHECK(cohomology_of(a, mp, 3, ComputeOptions{Method::Reduced}).dims() == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("field dims come from ranks of the differentials") {
  std::mt19937 rng(9);
  // a random complex 0 -> Q^a -> Q^b -> Q^c built as d1 = X Y, d0 = Y' with Y Y' = 0
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t a = 2 + rng() % 4, b = 3 + rng() % 4, c = 2 + rng() % 4;
    auto d0 = oracle::random_int_matrix(rng, b, a, -2, 2, 0.6);
    // project away the image of d0 from d1's rows by choosing d1 in the left kernel
    CochainComplex<Rationals> cx;
    cx.ranks = {a, b, c};
    std::vector<Triplet<mpq_class>> t0;
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j)
        if (d0[i][j] != 0) t0.push_back({std::uint32_t(i), std::uint32_t(j), mpq_class(d0[i][j])});
    const auto D0 = SparseMatrix<Rationals>::from_triplets(Rationals{}, b, a, t0);
    const auto left = la::kernel_basis(D0.transpose());
    std::vector<Triplet<mpq_class>> t1;
    for (std::size_t i = 0; i < c && i < left.size(); ++i)
      for (std::size_t j = 0; j < b; ++j)
        if (left[i][j] != 0) t1.push_back({std::uint32_t(i), std::uint32_t(j), left[i][j]});
    cx.differentials = {D0, SparseMatrix<Rationals>::from_triplets(Rationals{}, c, b, t1)};
    REQUIRE_FALSE(square_zero_violation(cx));
    const auto h = compute_cohomology(cx, 0, 1);
    oracle::QDense q0;
    for (const auto& row : d0) q0.emplace_back(row.begin(), row.end());
    const std::size_t r0 = oracle::rank_q(q0);
    const std::size_t r1 = la::rank(cx.differentials[1]);
    CHECK(h.at(0).dim == a - r0);
    CHECK(h.at(1).dim == b - r1 - r0);
  }
}

TEST_CASE("errors") {
  const Algebra a = catalog("N2", Ring::rationals());
  const auto cx = bar_complex(Rationals{}, a, quotient_bimodule(a), 3);
  CHECK_THROWS_AS(compute_cohomology(cx, 0, 3), DegreeError);
  CHECK_NOTHROW(compute_cohomology(cx, 0, 2));
  CHECK_THROWS_AS(cohomology_of(catalog("M2", Ring::rationals()), std::nullopt, 2, ComputeOptions{Method::Cibils}),
                  ValidationError);
  CHECK_THROWS_AS(cohomology_of(a, std::nullopt, 2, ComputeOptions{Method::JnPeriodic}), std::invalid_argument);
  ComputeOptions tight;
  tight.method = Method::Bar;
  tight.size_budget = 100;
  CHECK_THROWS_AS(cohomology_of(catalog("N3", Ring::rationals()), std::nullopt, 4, tight), SizeBudgetExceeded);
  CHECK(resolve_method(catalog("J3", Ring::rationals()), true, {}) == Method::JnPeriodic);
  CHECK(resolve_method(catalog("J3", Ring::rationals()), false, {}) == Method::Cibils);
  CHECK(resolve_method(catalog("M2", Ring::rationals()), true, {}) == Method::Reduced);
}
