#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "molds/catalog.hpp"
#include "molds/cli.hpp"

using namespace molds;
using cli::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "molds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = (std::filesystem::temp_directory_path() / ("molds_test_" + name + ".json")).string();
  std::ofstream(path) << text;
  return path;
}

std::vector<std::size_t> h_dims(const json& doc) {
  std::vector<std::size_t> v;
  for (const auto& r : doc["H"]) v.push_back(r["dim"].get<std::size_t>());
  return v;
}

}  // namespace

TEST_CASE("compute") {
  auto r = run({"compute", "--algebra", "S11", "--ring", "Q", "--max-degree", "4"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(h_dims(doc) == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(doc["algebra"] == "S11");
  CHECK(doc["ring"] == "Q");
  CHECK(doc["d"] == 5);

  r = run({"compute", "--algebra", "N2", "--ring", "Z", "--max-degree", "3"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(doc["H"][i]["degree"] == i);
    CHECK(doc["H"][i]["free_rank"] == 1);
    CHECK(doc["H"][i]["torsion"] == (i % 2 ? json::array({2}) : json::array()));
  }

  r = run({"compute", "--algebra", "J3", "--ring", "F3", "--max-degree", "2", "--moduli"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(h_dims(doc) == std::vector<std::size_t>{3, 3, 3});
  CHECK(doc["ring"] == "Fp:3");
  CHECK(doc["method"] == "jn");
  CHECK(doc["moduli"]["normalizer_dim"] == 6);
  CHECK(doc["moduli"]["tangent_dim"] == 6);
  CHECK(doc["moduli"]["smooth"] == "inconclusive");
  CHECK(doc["moduli"].contains("caveat"));

  r = run({"compute", "--algebra", "B3", "--moduli", "--method", "bar", "--max-degree", "2"});
  doc = json::parse(r.out);
  CHECK(doc["method"] == "bar");
  CHECK(doc["moduli"]["smooth"] == "yes");
  CHECK(doc["moduli"]["orbit_open"] == "yes");
  CHECK_FALSE(doc["moduli"].contains("caveat"));

  r = run({"compute", "--algebra", "N3", "--format", "csv", "--max-degree", "2"});
  CHECK(r.out.rfind("algebra,ring,method,degree,dim,free_rank,torsion\nN3,Q,cibils,0,2,2,\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"compute"}).code == 2);
  CHECK(run({"compute", "--algebra", "XX"}).code == 2);
  CHECK(run({"compute", "--algebra", "N2", "--ring", "F4"}).code == 2);
  CHECK(run({"compute", "--algebra", "N2", "--method", "spectral"}).code == 2);
  CHECK(run({"compute", "--algebra", "N2", "--ring", "Z", "--moduli"}).code == 2);
  CHECK(run({"compute", "--algebra", "N2", "--method", "jn"}).code == 2);
  CHECK(run({"compute", "--algebra", "N2", "--file", "x.json"}).code == 2);
  CHECK(run({"compute", "--file", "does_not_exist.json"}).code == 2);
  CHECK(run({"compute", "--algebra", "M2", "--method", "cibils"}).code == 3);
  const auto big = run({"compute", "--algebra", "N3", "--method", "bar", "--max-degree", "9"});
  CHECK(big.code == 4);
  CHECK(big.err.find("SizeBudgetExceeded") != std::string::npos);
  CHECK(run({"compute", "--algebra", "N3", "--method", "bar", "--max-degree", "4", "--size-budget", "100"}).code == 4);
  CHECK(run({"table", "--degree", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto s6 = run({"export", "--algebra", "S6"});
  REQUIRE(s6.code == 0);
  auto r = run({"verify", "--file", temp_file("s6", s6.out)});
  CHECK(r.code == 0);
  CHECK(r.out.find("d: 4") != std::string::npos);
  CHECK(r.out.find("2 idempotents") != std::string::npos);

  r = run({"verify", "--file", temp_file("nounit", R"({"name":"X","n":2,"basis":[[[0,1],[0,0]]]})")});
  CHECK(r.code == 3);
  CHECK(r.err.find("NoUnit") != std::string::npos);

  r = run({"verify", "--file", temp_file("dep", R"({"name":"X","n":2,"basis":[[[1,0],[0,1]],[[2,0],[0,2]]]})")});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotIndependent") != std::string::npos);

  r = run({"verify", "--file", temp_file("shape", R"({"name":"X","n":2,"basis":[[[1,0,0],[0,1]]]})")});
  CHECK(r.code == 3);
  CHECK(r.err.find("BadShape") != std::string::npos);

  r = run({"verify", "--file", temp_file("json", R"({"name":"X",)")});
  CHECK(r.code == 3);

  // rational entries and a given splitting; the splitting must validate
  r = run({"verify", "--file", temp_file("frac", R"({"name":"B2h","n":2,
      "basis":[[[1,0],[0,1]],[["1/2",0],[0,"-1/2"]],[[0,"2/4"],[0,0]]],
      "splitting":{"idempotents":[[[1,0],[0,0]],[[0,0],[0,1]]],"radical":[[[0,1],[0,0]]]}})")});
  CHECK(r.code == 0);
  CHECK(r.out.find("given with 2 idempotents") != std::string::npos);
  r = run({"verify", "--file", temp_file("badsplit", R"({"name":"B2","n":2,
      "basis":[[[1,0],[0,0]],[[0,0],[0,1]],[[0,1],[0,0]]],
      "splitting":{"idempotents":[[[1,0],[0,1]]],"radical":[[[0,1],[0,0]]]}})")});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotSplit") != std::string::npos);
}

TEST_CASE("algebra files round-trip") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2), Ring::integers()}) {
    for (const auto& e : all_catalog_entries()) {
      CAPTURE(e.name);
      const Algebra a = catalog(e.name, ring);
      const auto doc = cli::write_algebra_file(a, detect_splitting(a));
      const auto back = cli::read_algebra_file(json::parse(doc.dump()), ring);
      CHECK(back.algebra.name() == a.name());
      CHECK(back.algebra.constants().table == a.constants().table);
      CHECK(back.algebra.constants().unit == a.constants().unit);
      CHECK(back.splitting.has_value() == detect_splitting(a).has_value());
    }
  }
}

TEST_CASE("compute from a file uses the given splitting") {
  const auto file = temp_file("s11", run({"export", "--algebra", "S11"}).out);
  const auto r = run({"compute", "--file", file, "--max-degree", "3"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["method"] == "cibils");
  CHECK(h_dims(doc) == std::vector<std::size_t>{1, 1, 0, 0});
  std::remove(file.c_str());
}

TEST_CASE("table") {
  for (const char* ring : {"Q", "F2", "F3", "Z"}) {
    CAPTURE(ring);
    const auto t2 = run({"table", "--degree", "2", "--ring", ring, "--expected"});
    CHECK(t2.code == 0);
    CHECK(t2.err.find("5 rows, 0 failed cells") != std::string::npos);
    const auto t3 = run({"table", "--degree", "3", "--ring", ring, "--expected"});
    CHECK(t3.code == 0);
    CHECK(t3.err.find("26 rows, 0 failed cells") != std::string::npos);
    CHECK(t3.out.find("FAIL") == std::string::npos);
    CHECK(run({"table", "--degree", "3", "--ring", ring, "--expected"}).out == t3.out);
  }
  const auto f2 = run({"table", "--degree", "3", "--ring", "F2", "--format", "json"});
  const auto doc = json::parse(f2.out);
  REQUIRE(doc.size() == 26);
  for (const auto& row : doc) {
    if (row["name"] == "N2xD1" || row["name"] == "S10" || row["name"] == "S12") {
      CHECK(row["H"] == json::array({"2", "2", "2", "2", "2"}));
    }
  }
  const auto h0 = run({"table", "--degree", "3", "--max-degree", "0"});
  CHECK(h0.out.find("\nC3,1,8,9,0\n") != std::string::npos);
  const auto z = run({"table", "--degree", "2", "--ring", "Z"});
  CHECK(z.out.find("N2,2,1,1+Z/2,1,1+Z/2,1,") != std::string::npos);
}
