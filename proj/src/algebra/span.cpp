#include "molds/span.hpp"

#include <stdexcept>

namespace molds {

mpq_class canonical(const Ring& ring, const mpq_class& q) {
  switch (ring.kind()) {
    case Ring::Kind::Rationals: return q;
    case Ring::Kind::Integers: return Integers{}.to_rational(Integers{}.from_rational(q));
    case Ring::Kind::PrimeField: break;
  }
  PrimeField f{ring.characteristic()};
  return f.to_rational(f.from_rational(q));
}

template <ExactField F>
BasicSpan<F>::BasicSpan(F f, std::size_t length, const std::vector<std::vector<E>>& vectors)
    : f_(f), length_(length), count_(vectors.size()) {
  std::vector<std::vector<E>> a = vectors;
  std::vector<std::vector<E>> t(count_, std::vector<E>(count_, f_.zero()));
  for (std::size_t i = 0; i < count_; ++i) {
    if (a[i].size() != length_) throw std::invalid_argument("span vector length mismatch");
    t[i][i] = f_.one();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < length_ && r < count_; ++c) {
    std::size_t piv = r;
    while (piv < count_ && f_.is_zero(a[piv][c])) ++piv;
    if (piv == count_) continue;
    std::swap(a[r], a[piv]);
    std::swap(t[r], t[piv]);
    const E inv = f_.inv(a[r][c]);
    for (auto& x : a[r]) x = f_.mul(x, inv);
    for (auto& x : t[r]) x = f_.mul(x, inv);
    for (std::size_t i = 0; i < count_; ++i) {
      if (i == r || f_.is_zero(a[i][c])) continue;
      const E k = a[i][c];
      for (std::size_t j = 0; j < length_; ++j) a[i][j] = f_.sub(a[i][j], f_.mul(k, a[r][j]));
      for (std::size_t j = 0; j < count_; ++j) t[i][j] = f_.sub(t[i][j], f_.mul(k, t[r][j]));
    }
    pivots_.push_back(c);
    ++r;
  }
  a.resize(r);
  t.resize(r);
  reduced_ = std::move(a);
  transform_ = std::move(t);
}

template <ExactField F>
auto BasicSpan<F>::coordinates(const std::vector<E>& v) const -> std::optional<std::vector<E>> {
  if (v.size() != length_) throw std::invalid_argument("span vector length mismatch");
  std::vector<E> residual = v;
  std::vector<E> c(count_, f_.zero());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const E s = v[pivots_[k]];
    if (f_.is_zero(s)) continue;
    for (std::size_t j = 0; j < length_; ++j) {
      if (!f_.is_zero(reduced_[k][j])) residual[j] = f_.sub(residual[j], f_.mul(s, reduced_[k][j]));
    }
    for (std::size_t j = 0; j < count_; ++j) {
      if (!f_.is_zero(transform_[k][j])) c[j] = f_.add(c[j], f_.mul(s, transform_[k][j]));
    }
  }
  for (const auto& x : residual) {
    if (!f_.is_zero(x)) return std::nullopt;
  }
  return c;
}

template class BasicSpan<Rationals>;
template class BasicSpan<PrimeField>;

namespace {

template <ExactField F>
std::vector<typename F::Element> lift(const F& f, const QVector& v) {
  std::vector<typename F::Element> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(f.from_rational(q));
  return out;
}

}  // namespace

Span::Span(const Ring& ring, std::size_t length, const std::vector<QVector>& vectors)
    : ring_(ring),
      count_(vectors.size()),
      impl_(visit_field(ring, [&](auto f) -> std::variant<BasicSpan<Rationals>, BasicSpan<PrimeField>> {
        std::vector<std::vector<typename decltype(f)::Element>> vs;
        vs.reserve(vectors.size());
        for (const auto& v : vectors) vs.push_back(lift(f, v));
        return BasicSpan<decltype(f)>(f, length, vs);
      })) {}

std::size_t Span::rank() const {
  return std::visit([](const auto& s) { return s.rank(); }, impl_);
}

std::optional<QVector> Span::coordinates(const QVector& v) const {
  return std::visit(
      [&](const auto& s) -> std::optional<QVector> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BasicSpan<PrimeField>>) {
          PrimeField f{ring_.characteristic()};
          auto c = s.coordinates(lift(f, v));
          if (!c) return std::nullopt;
          QVector out;
          for (auto x : *c) out.push_back(f.to_rational(x));
          return out;
        } else {
          auto c = s.coordinates(v);
          if (!c) return std::nullopt;
          if (ring_.kind() == Ring::Kind::Integers) {
            for (const auto& x : *c) {
              if (x.get_den() != 1) return std::nullopt;
            }
          }
          return c;
        }
      },
      impl_);
}

}  // namespace molds
