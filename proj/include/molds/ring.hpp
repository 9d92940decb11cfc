#pragma once

// Coefficient domains: the rationals, prime fields F_p, and the integers.
//
// Each domain is a small value type exposing element arithmetic; kernels are
// templated on it.  `Ring` is the runtime tag the CLI and the algebra layer
// carry around, and `visit_ring` turns it back into a concrete domain.

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "molds/errors.hpp"

namespace molds {

struct Rationals {
  using Element = mpq_class;
  static constexpr bool is_field = true;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return 1 / a; }
  Element from_int(long v) const { return Element(v); }
  Element from_rational(const mpq_class& q) const { return q; }
  mpq_class to_rational(const Element& a) const { return a; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string tag() const { return "Q"; }
  friend bool operator==(const Rationals&, const Rationals&) = default;
};

struct PrimeField {
  using Element = std::uint32_t;
  static constexpr bool is_field = true;

  std::uint32_t p = 2;

  Element zero() const { return 0; }
  Element one() const { return 1 % p; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Element(s >= p ? s - p : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : Element(std::uint64_t(a) + p - b); }
  Element mul(Element a, Element b) const { return Element(std::uint64_t(a) * b % p); }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element inv(Element a) const;
  Element from_int(long v) const {
    long r = v % static_cast<long>(p);
    return Element(r < 0 ? r + p : r);
  }
  // Throws NotRepresentable when p divides the denominator.
  Element from_rational(const mpq_class& q) const;
  mpq_class to_rational(Element a) const { return mpq_class(static_cast<unsigned long>(a)); }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string tag() const { return "Fp:" + std::to_string(p); }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

// Not a field: rank/kernel/solve reject it, Smith normal form accepts it.
struct Integers {
  using Element = mpz_class;
  static constexpr bool is_field = false;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element from_int(long v) const { return Element(v); }
  // Throws NotRepresentable for non-integral input.
  Element from_rational(const mpq_class& q) const;
  mpq_class to_rational(const Element& a) const { return mpq_class(a); }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string tag() const { return "Z"; }
  friend bool operator==(const Integers&, const Integers&) = default;
};

template <class R>
concept ExactRing = requires(const R& r, const typename R::Element& a, const mpq_class& q) {
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.add(a, a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Element>;
  { r.from_rational(q) } -> std::convertible_to<typename R::Element>;
  { r.tag() } -> std::convertible_to<std::string>;
};

template <class R>
concept ExactField = ExactRing<R> && R::is_field;

bool is_prime(std::uint64_t p);

class Ring {
 public:
  enum class Kind { Rationals, PrimeField, Integers };

  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers() { return Ring(Kind::Integers, 0); }
  // Throws std::invalid_argument when p is not a prime below 2^31.
  static Ring prime_field(std::uint64_t p);
  // Accepts "Q", "Z", "F<p>" and "Fp:<p>".
  static Ring parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }
  std::string tag() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

template <class Fn>
decltype(auto) visit_ring(const Ring& ring, Fn&& fn) {
  switch (ring.kind()) {
    case Ring::Kind::Rationals: return fn(Rationals{});
    case Ring::Kind::PrimeField: return fn(PrimeField{ring.characteristic()});
    case Ring::Kind::Integers: break;
  }
  return fn(Integers{});
}

inline Ring ring_of(const Rationals&) { return Ring::rationals(); }
inline Ring ring_of(const PrimeField& f) { return Ring::prime_field(f.p); }
inline Ring ring_of(const Integers&) { return Ring::integers(); }

// Is `q` an element of the ring (integral for Z, p-integral for F_p)?
bool representable(const Ring& ring, const mpq_class& q);

}  // namespace molds
