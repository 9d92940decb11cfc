// Serial reference kernels against their OpenMP counterparts.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "molds/catalog.hpp"
#include "molds/complexes.hpp"
#include "molds/exactla.hpp"

using namespace molds;

namespace {

template <class F>
double best_of(int repeat, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& what, const std::string& shape, double serial, double parallel, bool match) {
  std::printf("%-34s %-16s %10.4f %10.4f %8.2fx  %s\n", what.c_str(), shape.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, match ? "match" : "MISMATCH");
}

template <ExactRing R>
std::string shape(const SparseMatrix<R>& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernels", "molds_bench"};
  int repeat = 3;
  std::size_t degree = 5;
  app.add_option("--repeat", repeat, "Runs per measurement (best is reported)")->capture_default_str();
  app.add_option("--degree", degree, "Degree of the N3 bar differential used for rank")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-34s %-16s %10s %10s %9s\n", "kernel", "shape", "serial s", "parallel s", "speedup");
  int bad = 0;

  const Algebra n3 = catalog("N3", Ring::rationals());
  const Bimodule m3 = quotient_bimodule(n3);

  {
    CochainComplex<Rationals> a, b, c;
    const double serial = best_of(repeat, [&] { a = reference::bar_complex(Rationals{}, n3, m3, degree + 1); });
    const double one = best_of(repeat, [&] {
      b = bar_complex(Rationals{}, n3, m3, degree + 1, BuildOptions{kDefaultSizeBudget, false});
    });
    const double par = best_of(repeat, [&] { c = bar_complex(Rationals{}, n3, m3, degree + 1); });
    const bool ok = a.differentials == c.differentials && b.differentials == c.differentials;
    bad += !ok;
    row("bar assembly, column-wise ref", shape(c.differentials.back()), serial, par, ok);
    row("bar assembly, row-wise serial", shape(c.differentials.back()), one, par, ok);
  }

  for (const Ring& ring : {Ring::prime_field(32003), Ring::rationals()}) {
    visit_ring(ring, [&](auto r) {
      using R = decltype(r);
      if constexpr (R::is_field) {
        const Algebra a = catalog("N3", ring);
        const auto cx = bar_complex(r, a, quotient_bimodule(a), degree + 1);
        const auto& d = cx.differentials[degree];
        std::size_t rs = 0, rp = 0;
        const double serial = best_of(repeat, [&] { rs = la::reference::rank(d); });
        const double par = best_of(repeat, [&] { rp = la::rank(d); });
        bad += rs != rp;
        row("rank over " + ring.tag(), shape(d), serial, par, rs == rp);
      }
    });
  }

  {
    const auto cx = jn_periodic_complex(Integers{}, 16, 1);
    const auto& d = cx.differentials[0];
    la::SmithForm a, b;
    const double serial = best_of(repeat, [&] { a = la::reference::smith_normal_form(d); });
    const double fast = best_of(repeat, [&] { b = la::smith_normal_form(d); });
    const bool ok = a.invariant_factors == b.invariant_factors;
    bad += !ok;
    row("Smith form, J_16 differential", shape(d), serial, fast, ok);
  }
  {
    const Algebra n2 = catalog("N2", Ring::integers());
    const auto cx = bar_complex(Integers{}, n2, quotient_bimodule(n2), 6);
    const auto& d = cx.differentials[5];
    la::SmithForm a, b;
    const double serial = best_of(repeat, [&] { a = la::reference::smith_normal_form(d); });
    const double fast = best_of(repeat, [&] { b = la::smith_normal_form(d); });
    const bool ok = a.invariant_factors == b.invariant_factors;
    bad += !ok;
    row("Smith form, N2 bar d^5", shape(d), serial, fast, ok);
  }
  return bad ? 1 : 0;
}
