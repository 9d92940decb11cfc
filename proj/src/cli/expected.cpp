#include <map>

#include "molds/catalog.hpp"
#include "molds/cli.hpp"

namespace molds::cli {

namespace {

// dim H^i over a field of characteristic p (0 for Q) and, for p = 0, the
// free rank over Z.  `special` is the characteristic where the row jumps.
struct Pattern {
  std::size_t h0;
  std::size_t rest;       // i >= 1, unless grows
  char growth = 0;        // 'l': i + 1, 'e': 3 * 2^i, 't': h0 for i = 1, then 0
  unsigned special = 0;   // characteristic with an extra Z/special summand in odd degrees
  std::size_t normalizer;
  std::size_t tangent;
};

const std::map<std::string, Pattern>& rows() {
  static const std::map<std::string, Pattern> r = {
      // degree 2
      {"M2", {0, 0, 0, 0, 4, 0}},
      {"B2", {0, 0, 0, 0, 3, 1}},
      {"D2", {0, 0, 0, 0, 2, 2}},
      {"N2", {1, 1, 0, 2, 3, 2}},
      {"C2", {3, 0, 0, 0, 4, 0}},
      // degree 3
      {"M3", {0, 0, 0, 0, 9, 0}},
      {"P21", {0, 0, 0, 0, 7, 2}},
      {"P12", {0, 0, 0, 0, 7, 2}},
      {"B3", {0, 0, 0, 0, 6, 3}},
      {"C3", {8, 0, 0, 0, 9, 0}},
      {"D3", {0, 0, 0, 0, 3, 6}},
      {"C2xD1", {3, 0, 0, 0, 5, 4}},
      {"N2xD1", {1, 1, 0, 2, 4, 6}},
      {"B2xD1", {0, 0, 0, 0, 4, 5}},
      {"M2xD1", {0, 0, 0, 0, 5, 4}},
      {"J3", {2, 2, 0, 3, 5, 6}},
      {"N3", {2, 0, 'l', 0, 6, 5}},
      {"S1", {4, 1, 0, 0, 6, 4}},
      {"S2", {2, 0, 0, 0, 5, 4}},
      {"S3", {2, 0, 0, 0, 5, 4}},
      {"S4", {4, 0, 'e', 0, 7, 8}},
      {"S5", {4, 0, 'e', 0, 7, 8}},
      {"S6", {1, 1, 0, 0, 5, 5}},
      {"S7", {3, 0, 0, 0, 7, 2}},
      {"S8", {3, 0, 0, 0, 7, 2}},
      {"S9", {1, 1, 0, 0, 5, 5}},
      {"S10", {1, 1, 0, 2, 6, 4}},
      {"S11", {1, 0, 't', 0, 6, 4}},
      {"S12", {1, 1, 0, 2, 6, 4}},
      {"S13", {0, 0, 0, 0, 5, 4}},
      {"S14", {0, 0, 0, 0, 5, 4}},
  };
  return r;
}

const Pattern* find(const std::string& name) {
  const auto it = rows().find(name);
  return it == rows().end() ? nullptr : &it->second;
}

std::size_t generic_dim(const Pattern& p, std::size_t i) {
  if (i == 0) return p.h0;
  switch (p.growth) {
    case 'l': return i + 1;
    case 'e': return 3 * (std::size_t{1} << i);
    case 't': return i == 1 ? p.h0 : 0;
    default: return p.rest;
  }
}

unsigned characteristic(const Ring& r) { return r.kind() == Ring::Kind::PrimeField ? r.characteristic() : 0; }

}  // namespace

std::optional<ExpectedH> expected_h(const std::string& name, const Ring& ring, std::size_t degree) {
  const Pattern* p = find(name);
  if (!p) return std::nullopt;
  ExpectedH e;
  e.dim = generic_dim(*p, degree);
  if (p->special != 0) {
    if (ring.kind() == Ring::Kind::Integers) {
      if (degree % 2 == 1) e.torsion.push_back(p->special);
    } else if (characteristic(ring) == p->special) {
      // R/pR in odd degrees and the p-torsion of the next one in even degrees
      e.dim += 1;
    }
  }
  return e;
}

std::optional<std::size_t> expected_normalizer(const std::string& name, const Ring& ring) {
  const Pattern* p = find(name);
  if (!p) return std::nullopt;
  if (p->special != 0 && characteristic(ring) == p->special) return p->normalizer + 1;
  return p->normalizer;
}

std::optional<std::size_t> expected_tangent(const std::string& name, const Ring& ring) {
  const Pattern* p = find(name);
  if (!p || !ring.is_field()) return std::nullopt;
  if (characteristic(ring) == 0) return p->tangent;
  std::size_t n = 0;
  for (const auto& e : all_catalog_entries()) {
    if (e.name == name) n = e.n;
  }
  return expected_h(name, ring, 1)->dim + n * n - *expected_normalizer(name, ring);
}

}  // namespace molds::cli
