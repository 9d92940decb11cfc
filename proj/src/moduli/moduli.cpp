#include "molds/moduli.hpp"

#include "molds/exactla.hpp"

namespace molds {

namespace {

template <ExactRing R>
SparseMatrix<R> commutator_map(const R& ring, const Algebra& a, const Bimodule& m) {
  const std::size_t n = a.n(), dim = m.dim();
  std::vector<Triplet<typename R::Element>> t;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const QMatrix x = QMatrix::unit(n, k, l);
      const auto col = static_cast<std::uint32_t>(k * n + l);
      for (std::size_t i = 0; i < a.d(); ++i) {
        const auto& b = a.basis()[i];
        const auto cls = m.class_of(x * b - b * x);
        for (std::size_t q = 0; q < dim; ++q) {
          auto v = ring.from_rational((*cls)[q]);
          if (!ring.is_zero(v)) t.push_back({static_cast<std::uint32_t>(i * dim + q), col, std::move(v)});
        }
      }
    }
  }
  return SparseMatrix<R>::from_triplets(ring, a.d() * dim, n * n, std::move(t));
}

QMatrix from_flat(std::size_t n, const std::vector<mpq_class>& v) {
  QMatrix x(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) x(k, l) = v[k * n + l];
  return x;
}

void require_field(const Algebra& a) {
  if (!a.ring().is_field()) throw DomainNotField();
}

}  // namespace

std::string_view certificate_name(Certificate c) { return c == Certificate::Yes ? "yes" : "inconclusive"; }

Normalizer normalizer(const Algebra& a) {
  const Bimodule m = quotient_bimodule(a);
  const std::size_t n = a.n();
  return visit_ring(a.ring(), [&](auto ring) {
    using R = decltype(ring);
    const auto map = commutator_map(ring, a, m);
    Normalizer out;
    if constexpr (R::is_field) {
      for (const auto& v : la::kernel_basis(map)) {
        std::vector<mpq_class> q;
        for (const auto& e : v) q.push_back(ring.to_rational(e));
        out.basis.push_back(from_flat(n, q));
      }
    } else {
      // the last n^2 - rank columns of the right transform span the kernel lattice
      const auto snf = la::smith_normal_form(map, true);
      const auto v = snf.right->to_dense();
      for (std::size_t c = snf.rank; c < n * n; ++c) {
        std::vector<mpq_class> q;
        for (std::size_t r = 0; r < n * n; ++r) q.push_back(mpq_class(v[r][c]));
        out.basis.push_back(from_flat(n, q));
      }
    }
    out.dim = out.basis.size();
    return out;
  });
}

std::size_t derivation_dim(const Algebra& a) {
  require_field(a);
  return visit_ring(a.ring(), [&](auto ring) -> std::size_t {
    using R = decltype(ring);
    if constexpr (!R::is_field) {
      throw DomainNotField();
    } else {
      const auto cx = bar_complex(ring, a, quotient_bimodule(a), 2);
      return cx.ranks[1] - la::rank(cx.differentials[1]);
    }
  });
}

std::size_t tangent_dimension(const Algebra& a, const ComputeOptions& opts) {
  require_field(a);
  const auto h = cohomology_of(a, std::nullopt, 1, opts);
  return h.at(1).dim + a.n() * a.n() - normalizer(a).dim;
}

bool ModuliReport::consistent() const {
  return h0.dim + d == normalizer_dim && tangent_dim + normalizer_dim == h1.dim + n * n &&
         derivation_dim == tangent_dim;
}

ModuliReport moduli_report(const Algebra& a, const ComputeOptions& opts) {
  require_field(a);
  ModuliReport r;
  r.n = a.n();
  r.d = a.d();
  auto nz = normalizer(a);
  r.normalizer_dim = nz.dim;
  r.normalizer_basis = std::move(nz.basis);
  r.derivation_dim = derivation_dim(a);
  const auto h = cohomology_of(a, std::nullopt, 2, opts);
  r.method = h.method;
  r.h0 = h.at(0);
  r.h1 = h.at(1);
  r.h2 = h.at(2);
  r.tangent_dim = r.h1.dim + r.n * r.n - r.normalizer_dim;
  r.smooth = r.h2.dim == 0 ? Certificate::Yes : Certificate::Inconclusive;
  r.orbit_open = r.h1.dim == 0 ? Certificate::Yes : Certificate::Inconclusive;
  if (r.smooth == Certificate::Inconclusive) {
    r.caveat = "H^2 != 0 is not an obstruction: the moduli of molds may still be smooth at this point";
  }
  if (r.orbit_open == Certificate::Inconclusive) {
    if (!r.caveat.empty()) r.caveat += "; ";
    r.caveat += "H^1 != 0 does not decide whether the conjugation orbit is open";
  }
  return r;
}

}  // namespace molds
