// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "expected.hpp"
#include "molds/catalog.hpp"
#include "molds/moduli.hpp"

using namespace molds;

namespace {

struct Criterion {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << "first failure: ";
      if (ok) notes << what;
      ok = false;
    }
  }
};

// Every complex built for criteria 1-3 passes through here; cohomology_of
// multiplies consecutive differentials and throws on a nonzero product.
struct SquareZeroLog {
  std::size_t complexes = 0;
  std::size_t violations = 0;
  std::size_t largest = 0;
};

SquareZeroLog g_square_zero;

unsigned characteristic(const Ring& r) { return r.kind() == Ring::Kind::PrimeField ? r.characteristic() : 0; }

CohomologyResult logged(const Algebra& a, std::size_t max_degree, Method m = Method::Auto) {
  ComputeOptions o;
  o.method = m;
  o.verify_square_zero = true;
  ++g_square_zero.complexes;
  try {
    auto r = cohomology_of(a, std::nullopt, max_degree, o);
    for (auto x : r.ranks) g_square_zero.largest = std::max(g_square_zero.largest, x);
    return r;
  } catch (const std::logic_error&) {
    ++g_square_zero.violations;
    throw;
  }
}

std::vector<std::size_t> dims(const Algebra& a, std::size_t max_degree, Method m = Method::Auto) {
  ComputeOptions o;
  o.method = m;
  return cohomology_of(a, std::nullopt, max_degree, o).dims();
}

std::string show(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void table_check(Criterion& c, const std::vector<CatalogEntry>& entries, const std::vector<Ring>& rings) {
  for (const Ring& ring : rings) {
    for (const auto& e : entries) {
      const auto got = logged(catalog(e.name, ring), 4).dims();
      std::vector<std::size_t> want;
      for (std::size_t i = 0; i <= 4; ++i) want.push_back(expected::h_dim(e.name, characteristic(ring), i));
      c.require(got == want, e.name + " over " + ring.tag() + ": " + show(got) + " vs " + show(want));
    }
  }
}

QMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  QMatrix p = QMatrix::identity(n);
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i != j) p = p * (QMatrix::identity(n) + QMatrix::unit(n, i, j).scaled(coef(rng)));
  }
  return p;
}

QVector random_cochain(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> v(-4, 4);
  std::bernoulli_distribution keep(0.5);
  QVector out(len, 0);
  for (auto& x : out) {
    if (keep(rng)) x = v(rng);
  }
  return out;
}

void leibniz(Criterion& c, const char* name, std::mt19937& rng) {
  const Algebra a = catalog(name, Ring::rationals());
  const Bimodule reg = regular_bimodule(a);
  const Pairing pair = Pairing::matrix_product(reg, reg, reg);
  const auto cx = bar_complex(Rationals{}, a, reg, 4);
  std::uniform_int_distribution<std::size_t> deg(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = deg(rng), q = deg(rng);
    if (p + q > 3) q = 3 - p;
    const Cochain f{p, random_cochain(rng, cx.ranks[p])};
    const Cochain g{q, random_cochain(rng, cx.ranks[q])};
    const auto lhs = coboundary(cx, cup_product(f, g, a.d(), pair, 4));
    const auto x = cup_product(coboundary(cx, f), g, a.d(), pair, 4);
    const auto y = cup_product(f, coboundary(cx, g), a.d(), pair, 4);
    bool same = true;
    for (std::size_t i = 0; i < lhs.coords.size(); ++i) {
      same = same && lhs.coords[i] == x.coords[i] + (p % 2 ? -1 : 1) * y.coords[i];
    }
    c.require(same, std::string(name) + " Leibniz at degrees " + std::to_string(p) + "," + std::to_string(q));
  }
}

const std::vector<std::pair<const char*, const char*>> kTransposePairs = {
    {"S2", "S3"}, {"S4", "S5"}, {"S6", "S9"}, {"S7", "S8"}, {"S10", "S12"}, {"S13", "S14"}};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const Ring Q = Ring::rationals(), F2 = Ring::prime_field(2), F3 = Ring::prime_field(3), Z = Ring::integers();
  const auto all = all_catalog_entries();
  bool all_ok = true;

  auto report = [&](int id, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto t0 = clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    all_ok = all_ok && c.ok;
    std::printf("%s  %2d  %-44s %8.3fs  %s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.notes.str().c_str());
    std::fflush(stdout);
  };

  report(1, "degree-2 table over Q and F2", [&](Criterion& c) {
    const auto t0 = clock::now();
    table_check(c, catalog_entries(2), {Q, F2});
    c.require(std::chrono::duration<double>(clock::now() - t0).count() < 10.0, "runtime over 10 s");
  });

  report(2, "degree-3 table over Q, F2 and F3", [&](Criterion& c) {
    const auto t0 = clock::now();
    table_check(c, catalog_entries(3), {Q, F2, F3});
    c.require(std::chrono::duration<double>(clock::now() - t0).count() < 600.0, "runtime over 10 min");
    c.require(g_square_zero.largest <= kDefaultSizeBudget, "largest cochain module over budget");
    c.notes << "largest cochain module " << g_square_zero.largest;
  });

  report(3, "integral torsion", [&](Criterion& c) {
    for (const char* name : {"N2", "S10", "S12"}) {
      const auto r = logged(catalog(name, Z), 4);
      for (std::size_t i = 0; i <= 4; ++i) {
        const bool odd = i % 2 == 1;
        c.require(r.at(i).free_rank == 1, std::string(name) + " free rank");
        c.require(r.at(i).torsion == (odd ? std::vector<mpz_class>{2} : std::vector<mpz_class>{}),
                  std::string(name) + " torsion in degree " + std::to_string(i));
      }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto r = logged(catalog("J" + std::to_string(n), Z), 5);
      c.require(r.method == Method::JnPeriodic, "J_n did not use the periodic complex");
      for (std::size_t i = 0; i <= 5; ++i) {
        c.require(r.at(i).free_rank == n - 1, "J" + std::to_string(n) + " free rank");
        c.require(r.at(i).torsion == (i % 2 ? std::vector<mpz_class>{mpz_class(n)} : std::vector<mpz_class>{}),
                  "J" + std::to_string(n) + " torsion in degree " + std::to_string(i));
      }
    }
  });

  report(4, "d o d = 0 on every complex of criteria 1-3", [&](Criterion& c) {
    c.require(g_square_zero.complexes > 0, "no complexes recorded");
    c.require(g_square_zero.violations == 0, std::to_string(g_square_zero.violations) + " violations");
    c.notes << g_square_zero.complexes << " complexes checked";
  });

  report(5, "bar, reduced and Cibils agree in degrees 0..3", [&](Criterion& c) {
    for (const Ring& ring : {Q, F2}) {
      for (const auto& e : all) {
        const Algebra a = catalog(e.name, ring);
        const auto bar = dims(a, 3, Method::Bar);
        c.require(dims(a, 3, Method::Reduced) == bar, e.name + " reduced over " + ring.tag());
        if (detect_splitting(a)) c.require(dims(a, 3, Method::Cibils) == bar, e.name + " cibils over " + ring.tag());
      }
    }
  });

  report(6, "dim H^0 = dim N(A) - d and normalizer column", [&](Criterion& c) {
    for (const Ring& ring : {Q, F2, F3}) {
      for (const auto& e : all) {
        const Algebra a = catalog(e.name, ring);
        const auto nz = normalizer(a).dim;
        c.require(dims(a, 0)[0] + a.d() == nz, e.name + " H^0 law over " + ring.tag());
        c.require(nz == expected::normalizer_dim(e.name, characteristic(ring)), e.name + " normalizer over " + ring.tag());
      }
    }
    c.require(normalizer(catalog("J3", Q)).dim == 5 && normalizer(catalog("J3", F3)).dim == 6, "J3 normalizer");
    c.require(normalizer(catalog("C3", Q)).dim == 9, "C3 normalizer");
  });

  report(7, "tangent law and tangent column over Q", [&](Criterion& c) {
    for (const auto& e : all) {
      const Algebra a = catalog(e.name, Q);
      const auto r = moduli_report(a);
      c.require(r.derivation_dim == r.h1.dim + a.n() * a.n() - r.normalizer_dim, e.name + " derivations");
      c.require(r.tangent_dim == expected::kTangent.at(e.name), e.name + " tangent");
    }
  });

  report(8, "conjugation and transpose invariance", [&](Criterion& c) {
    std::mt19937 rng(20240611);
    for (const char* name : {"B2", "N2", "S2", "S11", "J3"}) {
      const Algebra a = catalog(name, Q);
      const auto base = dims(a, 3);
      for (int k = 0; k < 5; ++k) {
        c.require(dims(conjugate_algebra(a, random_unimodular(rng, a.n())), 3) == base,
                  std::string(name) + " conjugate " + std::to_string(k));
      }
    }
    for (const auto& [x, y] : kTransposePairs) {
      const auto dx = dims(catalog(x, Q), 3);
      c.require(dx == dims(catalog(y, Q), 3), std::string(x) + "/" + y);
      c.require(dx == dims(transpose_algebra(catalog(x, Q)), 3), std::string(x) + " transposed");
    }
  });

  report(9, "product formula", [&](Criterion& c) {
    const Algebra d1 = Algebra::verify(1, Q, {QMatrix::identity(1)}, "D1");
    const auto h_d1 = dims(d1, 3, Method::Bar);
    for (const char* name : {"C2", "N2", "B2", "M2"}) {
      const auto x = dims(catalog(name, Q), 3);
      const auto p = dims(catalog(std::string(name) + "xD1", Q), 3);
      const auto built = dims(direct_product(catalog(name, Q), d1), 3, Method::Reduced);
      for (std::size_t i = 0; i <= 3; ++i) {
        c.require(p[i] == x[i] + h_d1[i], std::string(name) + "xD1 in degree " + std::to_string(i));
      }
      c.require(built == p, std::string(name) + " x D1 built from blocks");
    }
    const auto d2 = dims(direct_product(d1, d1), 3, Method::Bar);
    for (std::size_t i = 0; i <= 3; ++i) c.require(d2[i] == 2 * h_d1[i], "D1 x D1");
    c.require(d2 == dims(catalog("D2", Q), 3), "D1 x D1 = D2");
  });

  report(10, "Fibonacci ranks for S11 and M'", [&](Criterion& c) {
    const Algebra a = catalog("S11", Q);
    const Algebra b3 = catalog("B3", Q);
    const Bimodule mp = subquotient_bimodule(a, b3.basis(), std::vector<std::string>(b3.d(), "u"), a.basis());
    const auto cx = cibils_complex(Rationals{}, a, *detect_splitting(a), mp, 12);
    std::size_t f0 = 1, f1 = 1;
    c.require(cx.ranks[0] == 1 && cx.ranks[1] == 1, "F0, F1");
    for (std::size_t n = 2; n <= 12; ++n) {
      const std::size_t f2 = f0 + f1;
      c.require(cx.ranks[n] == f2, "F" + std::to_string(n));
      f0 = f1;
      f1 = f2;
    }
    c.require(!square_zero_violation(cx), "d o d");
    const auto h = cohomology_of(a, mp, 6);
    c.require(h.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0}, "H(S11, M') = " + show(h.dims()));
  });

  report(11, "cup product", [&](Criterion& c) {
    std::mt19937 rng(7);
    leibniz(c, "N2", rng);
    leibniz(c, "S6", rng);
    const Algebra a = catalog("N3", Q).unit_first();
    const std::vector<QMatrix> lower = {QMatrix::unit(3, 0, 1), QMatrix::unit(3, 0, 2), QMatrix::unit(3, 1, 2)};
    const Bimodule t = subquotient_bimodule(a, a.basis(), {"I", "U", "W", "V"}, lower);
    const auto cx = reduced_bar_complex(Rationals{}, a, t, 3);
    const Pairing pair = Pairing::matrix_product(t, t, t);
    // reduced letters follow the basis: U = E12, W = E13, V = E23
    auto star = [](std::size_t k) {
      QVector v(3, 0);
      v[k] = 1;
      return Cochain{1, v};
    };
    const auto uv = cup_product(star(0), star(2), 3, pair, 3);
    auto dw = coboundary(cx, star(1));
    for (auto& x : dw.coords) x = -x;
    c.require(uv.coords == dw.coords, "U* cup V* != -d(W*)");
  });

  report(12, "smoothness and open-orbit certificates", [&](Criterion& c) {
    for (const auto& e : all) {
      const auto r = moduli_report(catalog(e.name, Q));
      const bool vanish = expected::h_dim(e.name, 0, 1) == 0 && expected::h_dim(e.name, 0, 2) == 0;
      const bool yes = r.smooth == Certificate::Yes && r.orbit_open == Certificate::Yes;
      c.require(yes == vanish, e.name + " certificates");
    }
    const auto j3 = moduli_report(catalog("J3", Q));
    c.require(j3.smooth == Certificate::Inconclusive && j3.orbit_open == Certificate::Inconclusive, "J3 certificates");
    c.require(j3.caveat.find("may still be smooth") != std::string::npos, "J3 caveat missing");
  });

  return all_ok ? 0 : 1;
}
