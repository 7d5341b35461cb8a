#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cychom/simplicial.hpp"

using namespace cychom;

namespace {
const Field Q = Field::Q();
}

TEST_CASE("constant module is cyclic") {
  auto x = constant_module(Q, 1, 4);
  CHECK(check_structure(x, StructureLevel::simplicial).ok());
  CHECK(check_structure(x, StructureLevel::duplicial).ok());
  CHECK(check_structure(x, StructureLevel::cyclic).ok());
  auto wide = constant_module(Q, 3, 3);
  CHECK(check_structure(wide, StructureLevel::cyclic).ok());
}

TEST_CASE("corrupting one face is detected with its degree") {
  auto x = constant_module(Q, 2, 3);
  x.faces[2][1].at(0, 1) = Scalar::of(Q, 5);
  auto rep = check_structure(x, StructureLevel::simplicial);
  CHECK(!rep.ok());
  bool saw_degree_2_or_3 = false;
  for (const auto& v : rep.violations) saw_degree_2_or_3 |= (v.degree == 2 || v.degree == 3);
  CHECK(saw_degree_2_or_3);
}

TEST_CASE("dold_kan_normalize") {
  SUBCASE("constant module collapses to degree 0") {
    auto x = constant_module(Q, 1, 3);
    auto dk = dold_kan_normalize(x);
    CHECK(dk.normalized.grading.dims == std::vector<int>{1, 0, 0, 0});
    // Moore complex has alternating 0, 1 differentials: b_n = sum (-1)^i id
    for (int n = 1; n <= 3; ++n) {
      Matrix expected = n % 2 == 0 ? Matrix::identity(1, Q) : Matrix::zero(1, 1, Q);
      CHECK(dk.moore.b[n] == expected);
    }
  }
  SUBCASE("zero module normalizes to zero") {
    auto x = constant_module(Q, 0, 2);
    auto dk = dold_kan_normalize(x);
    CHECK(dk.normalized.grading.dims == std::vector<int>{0, 0, 0});
  }
  SUBCASE("normalization is a quasi-isomorphism (equal Betti numbers)") {
    auto x = constant_module(Q, 2, 4);
    auto dk = dold_kan_normalize(x);
    for (int n = 0; n + 1 <= 4; ++n)
      CHECK(homology(dk.normalized, n).dim == homology(dk.moore, n).dim);
  }
}

TEST_CASE("duplicial_to_duchain on the constant cyclic module") {
  auto x = constant_module(Q, 1, 4);
  auto dd = duplicial_to_duchain(x);
  // all higher normalized degrees vanish, so B = 0
  for (const Matrix& B : dd.duchain.B) CHECK(B.is_zero());
  // cyclic input: the output is even mixed
  CHECK(validate(dd.duchain, ComplexKind::mixed).ok());
}

TEST_CASE("dwyer_kan codifferential squares to zero") {
  auto x = constant_module(Q, 2, 4);
  auto cod = dwyer_kan_codifferential(x);
  CHECK(cod.size() == 4);
}

TEST_CASE("pi_shriek") {
  SUBCASE("cyclic input: isomorphic output") {
    auto x = constant_module(Q, 2, 3);
    auto ps = pi_shriek(x);
    CHECK(ps.cyclic.dims == x.dims);
    CHECK(check_structure(ps.cyclic, StructureLevel::cyclic).ok());
  }
  SUBCASE("idempotent on cyclic inputs") {
    auto x = constant_module(Q, 2, 3);
    auto once = pi_shriek(x);
    auto twice = pi_shriek(once.cyclic);
    CHECK(twice.cyclic.dims == once.cyclic.dims);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i <= n; ++i) CHECK(twice.cyclic.d(n, i) == once.cyclic.d(n, i));
  }
  SUBCASE("zero module") {
    auto x = constant_module(Q, 0, 2);
    CHECK(pi_shriek(x).cyclic.dims == std::vector<int>{0, 0, 0});
  }
}

TEST_CASE("hc_of_duplicial: both routes give 1,0,1 on the constant module") {
  auto x = constant_module(Q, 1, 4);
  auto a = hc_of_duplicial(x, HcRoute::via_pi_shriek_K);
  auto b = hc_of_duplicial(x, HcRoute::via_P_F);
  std::vector<int> expected = {1, 0, 1};
  for (int n = 0; n <= 2; ++n) {
    CHECK(a[n].dim == expected[n]);
    CHECK(b[n].dim == expected[n]);
    CHECK(!a[n].truncated);
  }
  CHECK(a[3].truncated);
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(a[n].dim == b[n].dim);
}

TEST_CASE("hc_of_duplicial on the zero module") {
  auto x = constant_module(Q, 0, 3);
  for (auto h : hc_of_duplicial(x, HcRoute::via_P_F)) CHECK(h.dim == 0);
}

TEST_CASE("decalage") {
  SUBCASE("constant module shifts to a constant module one shorter") {
    auto x = constant_module(Q, 1, 3);
    auto dec = decalage(x, DecSide::right);
    CHECK(dec.shifted.top() == 2);
    CHECK(dec.shifted.dims == std::vector<int>{1, 1, 1});
    CHECK(check_structure(dec.shifted).ok());
    CHECK(dec.shifted.augmented());
  }
  SUBCASE("Dec^r Dec^l = Dec^l Dec^r on the nose") {
    auto x = constant_module(Q, 2, 4);
    auto rl = decalage(decalage(x, DecSide::left).shifted, DecSide::right);
    auto lr = decalage(decalage(x, DecSide::right).shifted, DecSide::left);
    CHECK(rl.shifted.dims == lr.shifted.dims);
    for (int n = 1; n <= rl.shifted.top(); ++n)
      for (int i = 0; i <= n; ++i) CHECK(rl.shifted.d(n, i) == lr.shifted.d(n, i));
    for (int n = 0; n < rl.shifted.top(); ++n)
      for (int j = 0; j <= n; ++j) CHECK(rl.shifted.s(n, j) == lr.shifted.s(n, j));
    CHECK(*rl.shifted.augmentation == *lr.shifted.augmentation);
  }
  SUBCASE("top degree 0 cannot be shifted") {
    auto x = constant_module(Q, 1, 0);
    CHECK_THROWS(decalage(x, DecSide::left));
  }
}

TEST_CASE("duplicial structures = decalage coalgebras") {
  SUBCASE("valid duplicial module passes") {
    auto x = constant_module(Q, 2, 3);
    CHECK(duplicial_equals_decalage_coalgebra(x));
  }
  SUBCASE("corrupted t fails both checks at the same degree") {
    auto x = constant_module(Q, 2, 3);
    x.t[2].at(0, 1) = Scalar::of(Q, 7);
    ValidationReport via_decalage;
    CHECK(!duplicial_equals_decalage_coalgebra(x, &via_decalage));
    auto direct = check_structure(x, StructureLevel::duplicial);
    CHECK(!direct.ok());
    REQUIRE(!via_decalage.violations.empty());
    REQUIRE(!direct.violations.empty());
    int dec_lowest = via_decalage.violations[0].degree;
    int direct_lowest = direct.violations[0].degree;
    for (const auto& v : via_decalage.violations) dec_lowest = std::min(dec_lowest, v.degree);
    for (const auto& v : direct.violations) direct_lowest = std::min(direct_lowest, v.degree);
    CHECK(dec_lowest == direct_lowest);
  }
  SUBCASE("zero module passes") {
    auto x = constant_module(Q, 0, 2);
    CHECK(duplicial_equals_decalage_coalgebra(x));
  }
}

TEST_CASE("opsimplicial") {
  auto x = constant_module(Q, 2, 3);
  auto op = opsimplicial(x);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(op.d(n, i) == x.d(n, n - i));
  auto opop = opsimplicial(op);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(opop.d(n, i) == x.d(n, i));
}
