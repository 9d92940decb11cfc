#include "molds/ring.hpp"

#include <charconv>
#include <stdexcept>

namespace molds {

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return Element(t);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw ValidationError(ValidationError::Reason::NotRepresentable,
                          q.get_str() + " has denominator divisible by " + std::to_string(p));
  }
  return mul(Element(num.get_ui()), inv(Element(den.get_ui())));
}

Integers::Element Integers::from_rational(const mpq_class& q) const {
  if (q.get_den() != 1) {
    throw ValidationError(ValidationError::Reason::NotRepresentable, q.get_str() + " is not an integer");
  }
  return q.get_num();
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw std::invalid_argument("characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Ring(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

Ring Ring::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected Q, Z or F<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("malformed prime in ring '" + std::string(text) + "'");
  }
  return prime_field(p);
}

std::string Ring::tag() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "Fp:" + std::to_string(p_);
    case Kind::Integers: break;
  }
  return "Z";
}

bool representable(const Ring& ring, const mpq_class& q) {
  switch (ring.kind()) {
    case Ring::Kind::Rationals: return true;
    case Ring::Kind::PrimeField: return mpz_class(q.get_den() % ring.characteristic()) != 0;
    case Ring::Kind::Integers: break;
  }
  return q.get_den() == 1;
}

}  // namespace molds
