#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cychom/hochschild.hpp"
#include "cychom/io.hpp"

using namespace cychom;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "io_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  pclose(pipe);
  return out;
}

}  // namespace

TEST_CASE("field and matrix round trips") {
  CHECK(io::parse_field(io::field_json(Field::Q())) == Field::Q());
  CHECK(io::parse_field(io::field_json(Field::Fp(7))) == Field::Fp(7));
  CHECK_THROWS_AS(io::parse_field(io::json("R")), io::ParseError);
  CHECK_THROWS_AS(io::parse_field(io::json{{"Fp", 6}}), io::ParseError);

  Matrix m(2, 2, Field::Q());
  m.at(0, 1) = Scalar::rational(-3, 7);
  Matrix back = io::parse_matrix(io::matrix_json(m), 2, 2, Field::Q());
  CHECK(back == m);
}

TEST_CASE("algebra round trip and validation") {
  Algebra a = dual_numbers(Field::Q());
  Algebra back = io::parse_algebra(io::algebra_json(a));
  CHECK(back.dim == a.dim);
  CHECK(back.validate().ok());
  CHECK(io::algebra_json(back) == io::algebra_json(a));

  SUBCASE("missing unit is a schema error") {
    io::json j = io::algebra_json(a);
    j.erase("unit");
    CHECK_THROWS_AS(io::parse_algebra(j), io::ParseError);
  }
  SUBCASE("non-associative table is an invariant failure, naming the triple") {
    io::json j = io::algebra_json(a);
    j["mult"][1][1][1] = "1";  // x*x = x breaks associativity? keep unit ok
    Algebra bad = io::parse_algebra(j);
    auto rep = bad.validate();
    // x*x = x with x*1 = x is in fact associative; force a genuine violation
    if (rep.ok()) {
      j["mult"][0][1][0] = "1";  // 1*x gains a unit component
      bad = io::parse_algebra(j);
      rep = bad.validate();
    }
    CHECK(!rep.ok());
  }
}

TEST_CASE("bialgebra, bimodule, category round trips") {
  Bialgebra h = grouplike_bialgebra(cyclic_group_algebra(Field::Q(), 2));
  Bialgebra hback = io::parse_bialgebra(io::bialgebra_json(h));
  CHECK(hback.validate().ok());
  CHECK(io::bialgebra_json(hback) == io::bialgebra_json(h));

  Algebra a = dual_numbers(Field::Q());
  Bimodule m = Bimodule::regular(a);
  Bimodule mback = io::parse_bimodule(io::bimodule_json(m), a);
  CHECK(mback.validate(a).ok());

  FiniteCategory c = interval_category();
  FiniteCategory cback = io::parse_category(io::category_json(c));
  CHECK(cback.validate().ok());
  CHECK(io::category_json(cback) == io::category_json(c));
}

TEST_CASE("complex and simplicial round trips") {
  Algebra a = dual_numbers(Field::Q());
  auto x = hochschild_cyclic_module(a, Bimodule::regular(a), 2);
  io::json j = io::simplicial_json(x);
  TruncatedDuplicialModule back = io::parse_simplicial(j);
  CHECK(check_structure(back, StructureLevel::cyclic).ok());
  CHECK(io::simplicial_json(back) == j);

  auto dd = duplicial_to_duchain(x);
  io::json cj = io::complex_json(dd.duchain);
  DuchainComplex cback = io::parse_complex(cj);
  CHECK(validate(cback, ComplexKind::duchain).ok());
  CHECK(io::complex_json(cback) == cj);
}

TEST_CASE("validate_input error classes") {
  SUBCASE("valid algebra file gives an empty report") {
    std::string p = write_temp("ok.json",
                               R"({"field":"Q","dim":1,"mult":[[["1"]]],"unit":["1"]})");
    auto rep = io::validate_input(p, io::SchemaKind::algebra);
    CHECK(rep.ok());
    std::remove(p.c_str());
  }
  SUBCASE("missing file is a parse error") {
    CHECK_THROWS_AS(io::validate_input("does_not_exist.json", io::SchemaKind::algebra),
                    io::ParseError);
  }
  SUBCASE("schema violation is a parse error") {
    std::string p = write_temp("schema.json", R"({"field":"Q","dim":1,"mult":[[["1"]]]})");
    CHECK_THROWS_AS(io::validate_input(p, io::SchemaKind::algebra), io::ParseError);
    std::remove(p.c_str());
  }
  SUBCASE("invariant violation is distinct from a schema violation") {
    // non-associative 1-dim algebra: 1*1 = 2 with unit declared as 1
    std::string p = write_temp("inv.json", R"({"field":"Q","dim":1,"mult":[[["2"]]],"unit":["1"]})");
    CHECK_THROWS_AS(io::validate_input(p, io::SchemaKind::algebra), io::InvariantError);
    std::remove(p.c_str());
  }
}

TEST_CASE("CLI output is reproducible and deterministic") {
  // ctest runs this binary from the build directory, next to the CLI
  std::string q = write_temp("Q.json", R"({"field":"Q","dim":1,"mult":[[["1"]]],"unit":["1"]})");
  std::string first = capture("./cychom cyclic --algebra " + q + " --top 4 2>&1");
  std::string second = capture("./cychom cyclic --algebra " + q + " --top 4 2>&1");
  CHECK(first == second);
  CHECK(first.find("degree 0: 1") != std::string::npos);
  CHECK(first.find("degree 1: 0") != std::string::npos);
  CHECK(first.find("degree 2: 1") != std::string::npos);
  std::string json_out = capture("./cychom cyclic --algebra " + q + " --top 4 --format json 2>&1");
  CHECK(json_out.find("\"HC\"") != std::string::npos);
  std::remove(q.c_str());
}

TEST_CASE("CLI exit codes") {
  REQUIRE(std::system("./cychom --help > /dev/null 2>&1") == 0);
  std::string bad_schema = write_temp("bad1.json", R"({"field":"Q","dim":1})");
  int parse_rc = std::system(("./cychom validate " + bad_schema + " --schema algebra > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(parse_rc) == 2);
  std::string bad_inv = write_temp("bad2.json", R"({"field":"Q","dim":1,"mult":[[["2"]]],"unit":["1"]})");
  int inv_rc = std::system(("./cychom validate " + bad_inv + " --schema algebra > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(inv_rc) == 1);
  std::string ok = write_temp("ok2.json", R"({"field":"Q","dim":1,"mult":[[["1"]]],"unit":["1"]})");
  int ok_rc = std::system(("./cychom validate " + ok + " --schema algebra > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(ok_rc) == 0);
  std::remove(bad_schema.c_str());
  std::remove(bad_inv.c_str());
  std::remove(ok.c_str());
}

TEST_CASE("custom finite monoid JSON") {
  io::json good = {{"n", 2}, {"identity", 0}, {"table", {{0, 1}, {1, 1}}}};
  auto m = io::parse_monoid(good);
  CHECK(m.validate().ok());
  CHECK(m.mul(1, 1) == 1);
  io::json bad = good;
  bad["table"] = {{1, 0}, {0, 1}};  // 0 is no longer an identity
  CHECK_THROWS_AS(io::parse_monoid(bad), io::InvariantError);
  io::json malformed = {{"n", 2}, {"identity", 0}};
  CHECK_THROWS_AS(io::parse_monoid(malformed), io::ParseError);
}
