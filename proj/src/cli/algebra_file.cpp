#include <fstream>

#include "molds/cli.hpp"

namespace molds::cli {

namespace {

using Reason = ValidationError::Reason;

[[noreturn]] void bad(const std::string& what) { throw ValidationError(Reason::BadShape, what); }

mpq_class parse_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpq_class(mpz_class(std::to_string(v.get<unsigned long long>())));
    return mpq_class(mpz_class(std::to_string(v.get<long long>())));
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) bad(where + ": cannot read '" + s + "' as an integer or p/q");
    if (q.get_den() == 0) bad(where + ": zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  bad(where + ": entries must be integers or \"p/q\" strings");
}

QMatrix parse_matrix(const json& m, std::size_t n, const std::string& where) {
  if (!m.is_array() || m.size() != n) bad(where + ": expected " + std::to_string(n) + " rows");
  QMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) {
      bad(where + ": row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) x(i, j) = parse_entry(m[i][j], where);
  }
  return x;
}

std::vector<QMatrix> parse_list(const json& doc, const char* key, std::size_t n, bool zero_one) {
  if (!doc.contains(key) || !doc[key].is_array()) bad(std::string("missing array \"") + key + "\"");
  std::vector<QMatrix> out;
  for (std::size_t k = 0; k < doc[key].size(); ++k) {
    const std::string where = std::string(key) + "[" + std::to_string(k) + "]";
    out.push_back(parse_matrix(doc[key][k], n, where));
    if (zero_one) {
      for (const auto& e : out.back().entries()) {
        if (e != 0 && e != 1) bad(where + ": splitting matrices must have 0/1 entries");
      }
    }
  }
  return out;
}

json write_matrix(const QMatrix& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(rational(x(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json number(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational(const mpq_class& q) {
  if (q.get_den() == 1) return number(q.get_num());
  return q.get_str();
}

AlgebraFile read_algebra_file(const json& doc, const Ring& ring) {
  if (!doc.is_object()) bad("an algebra file is a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    bad("\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "A";
  const auto basis = parse_list(doc, "basis", n, false);
  if (basis.empty()) bad("\"basis\" must be nonempty");
  AlgebraFile f{Algebra::verify(n, ring, basis, name), std::nullopt};
  if (doc.contains("splitting")) {
    const auto& s = doc["splitting"];
    if (!s.is_object()) bad("\"splitting\" must be an object");
    f.splitting = validate_splitting(f.algebra, parse_list(s, "idempotents", n, true), parse_list(s, "radical", n, true));
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path, const Ring& ring) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": malformed JSON (" + std::string(e.what()) + ")");
  }
  return read_algebra_file(doc, ring);
}

json write_algebra_file(const Algebra& a, const std::optional<Splitting>& s) {
  json doc;
  doc["name"] = a.name();
  doc["n"] = a.n();
  doc["basis"] = json::array();
  for (const auto& b : a.basis()) doc["basis"].push_back(write_matrix(b));
  if (s) {
    json sp;
    sp["idempotents"] = json::array();
    sp["radical"] = json::array();
    for (const auto& e : s->idempotents) sp["idempotents"].push_back(write_matrix(e));
    for (const auto& r : s->radical) sp["radical"].push_back(write_matrix(r));
    doc["splitting"] = std::move(sp);
  }
  return doc;
}

}  // namespace molds::cli
