#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cychom/engine.hpp"

using namespace cychom;

namespace {
const Field Q = Field::Q();
}

TEST_CASE("trivial instance laws") {
  Engine eng(trivial_instance(Q, 2));
  auto rep = eng.validate_laws(2);
  CHECK(rep.ok());
}

TEST_CASE("iterate_chi on the trivial instance") {
  Engine eng(trivial_instance(Q, 3));
  CHECK(eng.iterate_chi(0, Engine::ChiShape::TnS_to_STn).is_identity());
  CHECK(eng.iterate_chi(1, Engine::ChiShape::TnS_to_STn).is_identity());
  CHECK(eng.iterate_chi(3, Engine::ChiShape::TnS_to_STn).is_identity());
  CHECK(eng.iterate_chi(3, Engine::ChiShape::TSn_to_SnT).is_identity());
  CHECK_THROWS(eng.iterate_chi(-1, Engine::ChiShape::TnS_to_STn));
}

TEST_CASE("trivial instance builds the constant duplicial module") {
  Engine eng(trivial_instance(Q, 2));
  auto ct = eng.build_CT(3);
  CHECK(ct.dims == std::vector<int>{2, 2, 2, 2});
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(ct.d(n, i).is_identity());
  for (const Matrix& t : ct.t) CHECK(t.is_identity());
  CHECK(check_structure(ct, StructureLevel::cyclic).ok());

  auto cs = eng.build_CS_star(3);
  CHECK(check_structure(cs, StructureLevel::cyclic).ok());
}

TEST_CASE("trivial instance: R = L = identity and LR certificates") {
  Engine eng(trivial_instance(Q, 2));
  auto rl = eng.build_R_L(3);
  for (const Matrix& r : rl.R) CHECK(r.is_identity());
  for (const Matrix& l : rl.L) CHECK(l.is_identity());
}

TEST_CASE("trivial instance: contracting homotopy from nabla = id") {
  Engine eng(trivial_instance(Q, 2));
  auto h = eng.contracting_homotopy(3);
  CHECK(h.h_CS.size() == 4);
  CHECK(h.h_CT.size() == 4);
}

TEST_CASE("missing nabla is rejected") {
  EngineInstance inst = trivial_instance(Q, 2);
  inst.nablaM.reset();
  Engine eng(std::move(inst));
  CHECK_THROWS(eng.contracting_homotopy(2));
}

TEST_CASE("corrupted rho is rejected by the law check") {
  EngineInstance inst = trivial_instance(Q, 2);
  inst.rho = Matrix::zero(2, 2, Q);  // fails the counit axiom
  Engine eng(std::move(inst));
  auto rep = eng.validate_laws(1);
  CHECK(!rep.ok());
  CHECK_THROWS(eng.build_CT(2));
}

TEST_CASE("a corrupted distributive law is caught by the hexagon checks") {
  EngineInstance inst = trivial_instance(Q, 2);
  inst.chi = [](const Word&) {
    Matrix m = Matrix::identity(2, Field::Q());
    m.at(0, 1) = Scalar::of(Field::Q(), 1);
    return m;
  };
  Engine eng(std::move(inst));
  auto rep = eng.validate_laws(1);
  CHECK(!rep.ok());
  bool saw_hexagon = false;
  for (const auto& v : rep.violations)
    saw_hexagon |= v.identity.find("distributive law") != std::string::npos;
  CHECK(saw_hexagon);
}
