#include <sstream>

#include "molds/catalog.hpp"
#include "molds/cli.hpp"

namespace molds::cli {

namespace {

std::string h_cell(const Ring& ring, std::size_t dim, const std::vector<std::string>& torsion) {
  std::string s = std::to_string(dim);
  if (ring.kind() == Ring::Kind::Integers) {
    for (const auto& t : torsion) s += "+Z/" + t;
  }
  return s;
}

std::string h_cell(const Ring& ring, const DegreeCohomology& h) {
  std::vector<std::string> t;
  for (const auto& x : h.torsion) t.push_back(x.get_str());
  return h_cell(ring, h.dim, t);
}

std::string h_cell(const Ring& ring, const ExpectedH& e) {
  std::vector<std::string> t;
  for (auto x : e.torsion) t.push_back(std::to_string(x));
  return h_cell(ring, e.dim, t);
}

std::string check(const std::string& got, const std::optional<std::string>& want) {
  if (!want) return "-";
  return got == *want ? "PASS" : "FAIL";
}

}  // namespace

json result_document(const Algebra& a, const CohomologyResult& h, const ModuliReport* moduli) {
  json doc;
  doc["algebra"] = a.name();
  doc["n"] = a.n();
  doc["d"] = a.d();
  doc["ring"] = a.ring().tag();
  doc["method"] = std::string(method_name(h.method));
  doc["H"] = json::array();
  const bool integral = h.ring.kind() == Ring::Kind::Integers;
  for (const auto& d : h.degrees) {
    json rec;
    rec["degree"] = d.degree;
    if (integral) {
      rec["free_rank"] = d.free_rank;
      rec["torsion"] = json::array();
      for (const auto& t : d.torsion) rec["torsion"].push_back(number(t));
    } else {
      rec["dim"] = d.dim;
    }
    doc["H"].push_back(std::move(rec));
  }
  if (moduli) {
    json m;
    m["normalizer_dim"] = moduli->normalizer_dim;
    m["h0"] = moduli->h0.dim;
    m["h1"] = moduli->h1.dim;
    m["h2"] = moduli->h2.dim;
    m["derivation_dim"] = moduli->derivation_dim;
    m["tangent_dim"] = moduli->tangent_dim;
    m["smooth"] = std::string(certificate_name(moduli->smooth));
    m["orbit_open"] = std::string(certificate_name(moduli->orbit_open));
    if (!moduli->caveat.empty()) m["caveat"] = moduli->caveat;
    doc["moduli"] = std::move(m);
  }
  return doc;
}

std::string result_csv(const Algebra& a, const CohomologyResult& h, const ModuliReport* moduli) {
  std::ostringstream out;
  out << "algebra,ring,method,degree,dim,free_rank,torsion\n";
  for (const auto& d : h.degrees) {
    std::string torsion;
    for (const auto& t : d.torsion) torsion += (torsion.empty() ? "" : ";") + t.get_str();
    out << a.name() << ',' << a.ring().tag() << ',' << method_name(h.method) << ',' << d.degree << ',' << d.dim << ','
        << d.free_rank << ',' << torsion << '\n';
  }
  if (moduli) {
    out << "\nnormalizer_dim,h0,h1,h2,derivation_dim,tangent_dim,smooth,orbit_open\n";
    out << moduli->normalizer_dim << ',' << moduli->h0.dim << ',' << moduli->h1.dim << ',' << moduli->h2.dim << ','
        << moduli->derivation_dim << ',' << moduli->tangent_dim << ',' << certificate_name(moduli->smooth) << ','
        << certificate_name(moduli->orbit_open) << '\n';
  }
  return out.str();
}

std::vector<TableRow> build_table(std::size_t degree, const Ring& ring, std::size_t max_degree, bool with_expected,
                                  const ComputeOptions& opts) {
  const auto& entries = catalog_entries(degree);
  std::vector<TableRow> rows(entries.size());
  const auto count = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    TableRow& row = rows[static_cast<std::size_t>(k)];
    row.name = e.name;
    try {
      const Algebra a = catalog(e.name, ring);
      row.d = a.d();
      const auto h = cohomology_of(a, std::nullopt, max_degree, opts);
      for (const auto& d : h.degrees) row.h.push_back(h_cell(ring, d));
      row.normalizer = std::to_string(normalizer(a).dim);
      row.tangent = ring.is_field() ? std::to_string(tangent_dimension(a, opts)) : "-";
    } catch (const std::exception& ex) {
      row.error = ex.what();
      row.h.assign(max_degree + 1, "ERR");
      row.normalizer = row.tangent = "ERR";
    }
    if (!with_expected) continue;
    for (std::size_t i = 0; i <= max_degree; ++i) {
      const auto want = expected_h(e.name, ring, i);
      row.checks.push_back(check(row.h[i], want ? std::optional(h_cell(ring, *want)) : std::nullopt));
    }
    const auto nz = expected_normalizer(e.name, ring);
    row.checks.push_back(check(row.normalizer, nz ? std::optional(std::to_string(*nz)) : std::nullopt));
    const auto tg = expected_tangent(e.name, ring);
    row.checks.push_back(check(row.tangent, tg ? std::optional(std::to_string(*tg)) : std::nullopt));
    if (!row.error.empty()) {
      for (auto& c : row.checks) c = "FAIL";
    }
  }
  return rows;
}

}  // namespace molds::cli
