#pragma once

// The molds command line: compute, table, verify and export.
//
// Exit codes: 0 success, 1 a table cell differs from the expected value,
// 2 invalid flags, 3 algebra validation failure, 4 size budget exceeded.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "molds/cohomology.hpp"
#include "molds/moduli.hpp"

namespace molds::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kTableMismatch = 1, kBadFlags = 2, kInvalidAlgebra = 3, kBudget = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// ---- AlgebraFile -------------------------------------------------------------
//
// { "name": str, "n": int, "basis": [n x n matrices of ints or "p/q"],
//   "splitting": { "idempotents": [0/1 matrices], "radical": [0/1 matrices] } }

struct AlgebraFile {
  Algebra algebra;
  std::optional<Splitting> splitting;
};

// Throws ValidationError (BadShape for schema problems).
AlgebraFile read_algebra_file(const json& doc, const Ring& ring);
AlgebraFile load_algebra_file(const std::string& path, const Ring& ring);
json write_algebra_file(const Algebra& a, const std::optional<Splitting>& s);

// ---- results -------------------------------------------------------------------

json number(const mpz_class& z);
json rational(const mpq_class& q);

json result_document(const Algebra& a, const CohomologyResult& h, const ModuliReport* moduli);
std::string result_csv(const Algebra& a, const CohomologyResult& h, const ModuliReport* moduli);

// ---- expected table values -----------------------------------------------------

struct ExpectedH {
  std::size_t dim = 0;  // free rank over Z
  std::vector<long> torsion;
};

std::optional<ExpectedH> expected_h(const std::string& name, const Ring& ring, std::size_t degree);
std::optional<std::size_t> expected_normalizer(const std::string& name, const Ring& ring);
// Table value over Q; over F_p derived from the H^1 and normalizer entries.
std::optional<std::size_t> expected_tangent(const std::string& name, const Ring& ring);

struct TableRow {
  std::string name;
  std::size_t d = 0;
  std::vector<std::string> h;  // per degree
  std::string normalizer;
  std::string tangent;
  // per cell, in the order h..., normalizer, tangent; empty when --expected is off
  std::vector<std::string> checks;
  std::string error;
};

std::vector<TableRow> build_table(std::size_t degree, const Ring& ring, std::size_t max_degree, bool with_expected,
                                  const ComputeOptions& opts);

}  // namespace molds::cli
