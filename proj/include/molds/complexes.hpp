#pragma once

// Finite truncations of cochain complexes computing H^*(A, M):
//
//   bar       C^p = Hom(A^{⊗p}, M), rank d^p m
//   reduced   C^p = Hom(Ā^{⊗p}, M), rank (d-1)^p m, Ā spanned by a_2..a_d
//             of a basis with a_1 = I
//   cibils    C^p = Hom_{E^e}(r^{⊗_E p}, M) for a splitting A = E ⊕ r
//   jn        the 2-periodic complex M -> M -> ... of J_n
//
// A complex truncated at degree D carries C^0..C^D and d^0..d^{D-1}.
// Coordinates of a bar-type cochain: index(word) * m + q with the word read as
// a base-(alphabet) number, first letter most significant.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "molds/bimodule.hpp"
#include "molds/sparse_matrix.hpp"
#include "molds/splitting.hpp"

namespace molds {

enum class Method { Auto, Bar, Reduced, Cibils, JnPeriodic };

std::string_view method_name(Method m);
// Accepts auto, bar, reduced, cibils, jn.
Method parse_method(std::string_view text);

inline constexpr std::size_t kDefaultSizeBudget = 2'000'000;

struct BuildOptions {
  std::size_t size_budget = kDefaultSizeBudget;
  bool parallel = true;
};

template <ExactRing R>
struct CochainComplex {
  R ring{};
  Method method = Method::Bar;
  std::vector<std::size_t> ranks;             // C^0 .. C^D
  std::vector<SparseMatrix<R>> differentials;  // d^0 .. d^{D-1}
  std::function<std::string(std::size_t, std::size_t)> labeler;

  std::size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  std::string label(std::size_t degree, std::size_t index) const {
    return labeler ? labeler(degree, index) : std::to_string(index);
  }
};

// Lowest p with d^{p+1} d^p != 0, if any.
template <ExactRing R>
std::optional<std::size_t> square_zero_violation(const CochainComplex<R>& cx);

template <ExactRing R>
CochainComplex<R> bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top,
                              const BuildOptions& opts = {});

// `a` must have the identity as its first basis element (see Algebra::unit_first).
template <ExactRing R>
CochainComplex<R> reduced_bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top,
                                      const BuildOptions& opts = {});

// Throws NotSplit when the idempotent projections are not coordinate projections of M.
template <ExactRing R>
CochainComplex<R> cibils_complex(const R& ring, const Algebra& a, const Splitting& s, const Bimodule& m,
                                 std::size_t top, const BuildOptions& opts = {});

template <ExactRing R>
CochainComplex<R> jn_periodic_complex(const R& ring, std::size_t n, std::size_t top);

namespace reference {

// Column-by-column serial assembly of the same matrices.
template <ExactRing R>
CochainComplex<R> bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top);

template <ExactRing R>
CochainComplex<R> reduced_bar_complex(const R& ring, const Algebra& a, const Bimodule& m, std::size_t top);

}  // namespace reference

// ---- cochains and the cup product ------------------------------------------

struct Cochain {
  std::size_t degree = 0;
  QVector coords;
};

// A bilinear map M x N -> L on coordinates.
class Pairing {
 public:
  // (x, y) -> class in L of rep(x) * rep(y).
  static Pairing matrix_product(const Bimodule& m, const Bimodule& n, const Bimodule& l);

  std::size_t left_dim() const { return m_; }
  std::size_t right_dim() const { return n_; }
  std::size_t target_dim() const { return l_; }
  const Ring& ring() const { return ring_; }
  const QVector& operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

 private:
  Ring ring_ = Ring::rationals();
  std::size_t m_ = 0, n_ = 0, l_ = 0;
  std::vector<QVector> table_;
};

// (f ∪ g)(u v) = pairing(f(u), g(v)) on words over an alphabet of the given size.
// Throws DegreeError when p + q exceeds max_degree.
Cochain cup_product(const Cochain& f, const Cochain& g, std::size_t alphabet, const Pairing& pairing,
                    std::size_t max_degree);

// d^p f, with f in C^p of the complex.
template <ExactRing R>
Cochain coboundary(const CochainComplex<R>& cx, const Cochain& f);

}  // namespace molds
