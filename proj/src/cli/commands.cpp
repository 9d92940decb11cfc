#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "molds/catalog.hpp"
#include "molds/cli.hpp"

namespace molds::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeFlags {
  std::string algebra, file, ring = "Q", method = "auto", out, format = "json";
  std::size_t max_degree = 4;
  std::size_t size_budget = kDefaultSizeBudget;
  bool moduli = false;
};

struct TableFlags {
  std::size_t degree = 3;
  std::string ring = "Q", format = "csv", out;
  std::size_t max_degree = 4;
  std::size_t size_budget = kDefaultSizeBudget;
  bool expected = false;
};

struct VerifyFlags {
  std::string file, ring = "Q";
};

struct ExportFlags {
  std::string algebra, ring = "Q", out;
};

Ring parse_ring(const std::string& text) {
  try {
    return Ring::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// Output goes to --out when given, else to `out`.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

AlgebraFile load(const std::string& name, const std::string& file, const Ring& ring) {
  if (!file.empty()) {
    try {
      return load_algebra_file(file, ring);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  try {
    return {catalog(name, ring), std::nullopt};
  } catch (const CatalogError& e) {
    throw UsageError(e.what());
  }
}

int cmd_compute(const ComputeFlags& f, std::ostream& out) {
  const Ring ring = parse_ring(f.ring);
  ComputeOptions opts;
  try {
    opts.method = parse_method(f.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  opts.size_budget = f.size_budget;
  if (f.moduli && !ring.is_field()) throw UsageError("--moduli needs a field (Q or F<p>)");
  const AlgebraFile af = load(f.algebra, f.file, ring);
  opts.splitting = af.splitting;
  CohomologyResult h;
  try {
    h = cohomology_of(af.algebra, std::nullopt, f.max_degree, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<ModuliReport> m;
  if (f.moduli) m = moduli_report(af.algebra, opts);
  const ModuliReport* mp = m ? &*m : nullptr;
  emit(f.out, out, f.format == "csv" ? result_csv(af.algebra, h, mp) : result_document(af.algebra, h, mp).dump(2) + "\n");
  return kOk;
}

int cmd_table(const TableFlags& f, std::ostream& out, std::ostream& err) {
  const Ring ring = parse_ring(f.ring);
  ComputeOptions opts;
  opts.size_budget = f.size_budget;
  const auto rows = build_table(f.degree, ring, f.max_degree, f.expected, opts);

  std::vector<std::string> columns;
  for (std::size_t i = 0; i <= f.max_degree; ++i) columns.push_back("H" + std::to_string(i));
  columns.push_back("normalizer_dim");
  columns.push_back("tangent_dim");

  std::size_t failures = 0;
  for (const auto& r : rows) {
    for (const auto& c : r.checks) failures += (c == "FAIL");
    if (!r.error.empty()) err << r.name << ": " << r.error << '\n';
  }

  std::string text;
  if (f.format == "json") {
    json doc = json::array();
    for (const auto& r : rows) {
      json row;
      row["name"] = r.name;
      row["d"] = r.d;
      row["H"] = r.h;
      row["normalizer_dim"] = r.normalizer;
      row["tangent_dim"] = r.tangent;
      if (f.expected) {
        json checks;
        for (std::size_t c = 0; c < columns.size(); ++c) checks[columns[c]] = r.checks[c];
        row["checks"] = std::move(checks);
      }
      doc.push_back(std::move(row));
    }
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "name,d";
    for (const auto& c : columns) s << ',' << c << (f.expected ? "," + c + "_check" : "");
    s << '\n';
    for (const auto& r : rows) {
      std::vector<std::string> cells = r.h;
      cells.push_back(r.normalizer);
      cells.push_back(r.tangent);
      s << r.name << ',' << r.d;
      for (std::size_t c = 0; c < cells.size(); ++c) s << ',' << cells[c] << (f.expected ? "," + r.checks[c] : "");
      s << '\n';
    }
    text = s.str();
  }
  emit(f.out, out, text);
  if (f.expected) {
    err << rows.size() << " rows, " << failures << " failed cells\n";
    return failures ? kTableMismatch : kOk;
  }
  return kOk;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const Ring ring = parse_ring(f.ring);
  const AlgebraFile af = load("", f.file, ring);
  const Algebra& a = af.algebra;
  out << "name: " << a.name() << '\n'
      << "ring: " << ring.tag() << '\n'
      << "n: " << a.n() << '\n'
      << "d: " << a.d() << '\n'
      << "structure constants: independent, closed, associative, unital: ok\n";
  std::string why;
  const auto s = af.splitting ? af.splitting : detect_splitting(a, &why);
  if (s) {
    out << "splitting: " << (af.splitting ? "given" : "found") << " with " << s->vertices() << " idempotents and "
        << s->letters() << " radical elements\n";
  } else {
    out << "splitting: none (" << why << ")\n";
  }
  return kOk;
}

int cmd_export(const ExportFlags& f, std::ostream& out) {
  const Ring ring = parse_ring(f.ring);
  const Algebra a = load(f.algebra, "", ring).algebra;
  emit(f.out, out, write_algebra_file(a, detect_splitting(a)).dump(2) + "\n");
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild cohomology of subalgebras of matrix algebras", "molds"};
  app.require_subcommand(1);

  ComputeFlags cf;
  auto* compute = app.add_subcommand("compute", "Cohomology (and optionally moduli data) of one algebra");
  auto* alg = compute->add_option("--algebra", cf.algebra, "Catalog name, e.g. N3, S11, J4, B5, P(2,1)");
  auto* file = compute->add_option("--file", cf.file, "Algebra description file (JSON)");
  alg->excludes(file);
  compute->add_option("--ring", cf.ring, "Q, Z or F<p>")->capture_default_str();
  compute->add_option("--max-degree", cf.max_degree, "Highest degree of H to compute")->capture_default_str();
  compute->add_option("--method", cf.method, "auto, bar, reduced, cibils or jn")->capture_default_str();
  compute->add_option("--size-budget", cf.size_budget, "Largest allowed cochain module rank")->capture_default_str();
  compute->add_flag("--moduli", cf.moduli, "Include normalizer, tangent dimension and certificates");
  compute->add_option("--out", cf.out, "Write to this path instead of standard output");
  compute->add_option("--format", cf.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  TableFlags tf;
  auto* table = app.add_subcommand("table", "Recompute the degree-2 or degree-3 classification table");
  table->add_option("--degree", tf.degree)->check(CLI::IsMember({2, 3}))->capture_default_str();
  table->add_option("--ring", tf.ring, "Q, Z or F<p>")->capture_default_str();
  table->add_option("--max-degree", tf.max_degree)->capture_default_str();
  table->add_option("--size-budget", tf.size_budget)->capture_default_str();
  table->add_flag("--expected", tf.expected, "Compare every cell with the reference value");
  table->add_option("--format", tf.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  table->add_option("--out", tf.out);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Validate an algebra description file");
  verify->add_option("--file", vf.file)->required();
  verify->add_option("--ring", vf.ring)->capture_default_str();

  ExportFlags ef;
  auto* exporter = app.add_subcommand("export", "Write a catalog algebra as an algebra description file");
  exporter->add_option("--algebra", ef.algebra)->required();
  exporter->add_option("--ring", ef.ring)->capture_default_str();
  exporter->add_option("--out", ef.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  }

  try {
    if (*compute) {
      if (cf.algebra.empty() && cf.file.empty()) throw UsageError("one of --algebra or --file is required");
      return cmd_compute(cf, out);
    }
    if (*table) return cmd_table(tf, out, err);
    if (*verify) return cmd_verify(vf, out);
    return cmd_export(ef, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const DomainNotField& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const ValidationError& e) {
    err << "invalid algebra: " << e.what() << '\n';
    return kInvalidAlgebra;
  } catch (const SizeBudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --size-budget or choose another --method)\n";
    return kBudget;
  }
}

}  // namespace molds::cli
