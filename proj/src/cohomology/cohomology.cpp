#include "molds/cohomology.hpp"

#include <stdexcept>

#include "molds/exactla.hpp"

namespace molds {

std::vector<std::size_t> CohomologyResult::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.dim);
  return out;
}

const DegreeCohomology& CohomologyResult::at(std::size_t degree) const {
  for (const auto& d : degrees) {
    if (d.degree == degree) return d;
  }
  throw DegreeError("DegreeOutOfRange: H^" + std::to_string(degree) + " was not computed");
}

template <ExactRing R>
CohomologyResult compute_cohomology(const CochainComplex<R>& cx, std::size_t first, std::size_t last) {
  if (cx.differentials.empty() || last >= cx.differentials.size()) {
    throw DegreeError("DegreeOutOfRange: H^" + std::to_string(last) + " needs d^" + std::to_string(last) +
                      ", complex is truncated at degree " + std::to_string(cx.top()));
  }
  if (first > last) throw std::invalid_argument("empty degree range");
  CohomologyResult out;
  out.ring = ring_of(cx.ring);
  out.method = cx.method;
  out.ranks = cx.ranks;

  // rank[k] = rank of d^{first - 1 + k}; torsion likewise
  const std::size_t count = last - first + 2;
  std::vector<std::size_t> rank(count, 0);
  std::vector<std::vector<mpz_class>> torsion(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (first + k == 0) continue;
    const auto& d = cx.differentials[first + k - 1];
    if constexpr (R::is_field) {
      rank[k] = la::rank(d);
    } else {
      auto snf = la::smith_normal_form(d);
      rank[k] = snf.rank;
      torsion[k] = snf.torsion();
    }
  }
  for (std::size_t p = first; p <= last; ++p) {
    const std::size_t k = p - first + 1;
    DegreeCohomology h;
    h.degree = p;
    h.free_rank = cx.ranks[p] - rank[k] - rank[k - 1];
    h.dim = h.free_rank;
    h.torsion = torsion[k - 1];
    out.degrees.push_back(std::move(h));
  }
  return out;
}

Method resolve_method(const Algebra& a, bool default_bimodule, const ComputeOptions& opts) {
  if (opts.method != Method::Auto) return opts.method;
  const auto& fam = a.family();
  if (default_bimodule && fam && fam->letter == 'J' && fam->params.size() == 1 && fam->params[0] == a.n()) {
    return Method::JnPeriodic;
  }
  if (opts.splitting || detect_splitting(a)) return Method::Cibils;
  return Method::Reduced;
}

CohomologyResult cohomology_of(const Algebra& a, const std::optional<Bimodule>& m, std::size_t max_degree,
                               const ComputeOptions& opts) {
  const Method method = resolve_method(a, !m.has_value(), opts);
  const std::size_t top = max_degree + 1;
  const BuildOptions build{opts.size_budget, opts.parallel};
  return visit_ring(a.ring(), [&](auto ring) {
    using R = decltype(ring);
    CochainComplex<R> cx;
    switch (method) {
      case Method::JnPeriodic: {
        const auto& fam = a.family();
        if (m || !fam || fam->letter != 'J') {
          throw std::invalid_argument("the jn method applies only to J_n with coefficients in M_n/J_n");
        }
        cx = jn_periodic_complex(ring, fam->params[0], top);
        break;
      }
      case Method::Cibils: {
        Splitting s;
        if (opts.splitting) {
          s = *opts.splitting;
        } else {
          std::string why;
          auto found = detect_splitting(a, &why);
          if (!found) throw ValidationError(ValidationError::Reason::NotSplit, why);
          s = std::move(*found);
        }
        cx = cibils_complex(ring, a, s, m ? *m : quotient_bimodule(a), top, build);
        break;
      }
      case Method::Reduced: {
        const Algebra u = a.unit_first();
        cx = reduced_bar_complex(ring, u, m ? m->rebind(u) : quotient_bimodule(u), top, build);
        break;
      }
      case Method::Bar:
      case Method::Auto:
        cx = bar_complex(ring, a, m ? *m : quotient_bimodule(a), top, build);
        break;
    }
    if (opts.verify_square_zero) {
      if (auto p = square_zero_violation(cx)) {
        throw std::logic_error("d^" + std::to_string(*p + 1) + " d^" + std::to_string(*p) + " is not zero");
      }
    }
    return compute_cohomology(cx, 0, max_degree);
  });
}

#define MOLDS_INSTANTIATE(R) \
  template CohomologyResult compute_cohomology<R>(const CochainComplex<R>&, std::size_t, std::size_t);

MOLDS_INSTANTIATE(Rationals)
MOLDS_INSTANTIATE(PrimeField)
MOLDS_INSTANTIATE(Integers)

#undef MOLDS_INSTANTIATE

}  // namespace molds
