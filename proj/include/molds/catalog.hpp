#pragma once

// The named subalgebras of M_2 and M_3 and the parametric families
// B_n, D_n, C_n, M_n, J_n and P_(n1,...,ns).
//
// Shapes are written row by row, rows separated by '/'.  Each '*' is its own
// matrix unit, '0' is zero, and every letter is the sum of the units carrying
// it.  Basis order: units for '*' in row-major order, then letters
// alphabetically.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "molds/algebra.hpp"

namespace molds {

struct CatalogEntry {
  std::string name;
  std::size_t n;
  std::string shape;
  std::string partner;  // transpose partner (itself when self-dual)
};

// The named entries of degree 2 (5 of them) or 3 (26).
const std::vector<CatalogEntry>& catalog_entries(std::size_t degree);

// All 31 named entries, degree 2 first.
std::vector<CatalogEntry> all_catalog_entries();

Algebra from_shape(std::string name, std::size_t n, std::string_view shape, const Ring& ring);

// Named entries and family members such as "J4", "B5", "D1", "P2,1,1".
// Throws CatalogError for unknown names or bad parameters.
Algebra catalog(std::string_view name, const Ring& ring);

// Degree-3 transpose partner; throws CatalogError for names without one.
std::string transpose_partner(std::string_view name);

}  // namespace molds
