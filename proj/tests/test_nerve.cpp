#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cychom/nerve.hpp"

using namespace cychom;

TEST_CASE("catalog categories validate") {
  for (const FiniteCategory& c :
       {trivial_category(), group_category(2), group_category(3), interval_category(),
        chain_category(2), indiscrete_category(2), discrete_category(2),
        idempotent_monoid_category(), parallel_arrows_category()}) {
    CHECK(c.validate().ok());
  }
  CHECK(group_category(3).is_groupoid());
  CHECK(indiscrete_category(2).is_groupoid());
  CHECK(!interval_category().is_groupoid());
  CHECK(!idempotent_monoid_category().is_groupoid());
}

TEST_CASE("nerve counts") {
  SUBCASE("one-object one-morphism category: singleton in every degree") {
    NerveSet nv = nerve(trivial_category(), 4);
    for (int n = 0; n <= 4; ++n) CHECK(nv.count(n) == 1);
  }
  SUBCASE("interval: degree 1 has {1_0, 1_1, f}, degree 2 has 4 pairs") {
    NerveSet nv = nerve(interval_category(), 3);
    CHECK(nv.count(0) == 2);
    CHECK(nv.count(1) == 3);
    CHECK(nv.count(2) == 4);
  }
  SUBCASE("invalid table throws") {
    FiniteCategory bad = interval_category();
    bad.compose_table[0][0] = -1;  // remove 1_0 . 1_0
    CHECK_THROWS(nerve(bad, 2));
  }
}

TEST_CASE("coreflective groupoid search") {
  SUBCASE("a groupoid reflects onto itself") {
    auto w = find_coreflective_groupoid(group_category(2));
    REQUIRE(w.has_value());
    CHECK(w->subcategory_objects == std::vector<int>{0});
  }
  SUBCASE("interval reflects onto {0} through the unique map") {
    auto w = find_coreflective_groupoid(interval_category());
    REQUIRE(w.has_value());
    CHECK(w->subcategory_objects == std::vector<int>{0});
    CHECK(w->reflection == std::vector<int>{0, 0});
    // eps_1 is the unique map 0 -> 1
    const FiniteCategory c = interval_category();
    CHECK(c.morphisms[w->counit[1]].src == 0);
    CHECK(c.morphisms[w->counit[1]].tgt == 1);
  }
  SUBCASE("idempotent monoid has no witness") {
    CHECK(!find_coreflective_groupoid(idempotent_monoid_category()).has_value());
  }
  SUBCASE("parallel arrows have no witness") {
    CHECK(!find_coreflective_groupoid(parallel_arrows_category()).has_value());
  }
}

TEST_CASE("coreflector from the interval witness") {
  FiniteCategory c = interval_category();
  auto w = find_coreflective_groupoid(c);
  REQUIRE(w.has_value());
  Coreflector t = coreflector_from_witness(c, *w);
  CHECK(t.validate(c).ok());
  // t0 = t1 = 0; t(1_1) = f, t(f) = 1_0
  CHECK(t.object_map == std::vector<int>{0, 0});
  int f_idx = -1, id0 = c.identity[0], id1 = c.identity[1];
  for (int m = 0; m < c.mor_count(); ++m)
    if (m != id0 && m != id1) f_idx = m;
  CHECK(t.morphism_map[id1] == f_idx);
  CHECK(t.morphism_map[f_idx] == id0);
  // t^2(1_1) = t(f) = 1_0 = 1_{t1}
  CHECK(t.morphism_map[t.morphism_map[id1]] == id0);
}

TEST_CASE("coreflector for a groupoid inverts morphisms") {
  FiniteCategory c = group_category(3);
  GroupoidWitness w{{0}, {0}, {c.identity[0]}};
  Coreflector t = coreflector_from_witness(c, w);
  for (int f = 0; f < c.mor_count(); ++f) CHECK(t.morphism_map[f] == *c.inverse_of(f));
}

TEST_CASE("duplicial structure on nerves") {
  SUBCASE("Z/2 with the identity witness is cyclic") {
    FiniteCategory c = group_category(2);
    GroupoidWitness w{{0}, {0}, {c.identity[0]}};
    DuplicialNerve dn = duplicial_on_nerve(c, coreflector_from_witness(c, w), 4);
    CHECK(dn.report.ok());
    CHECK(cyclic_failure_degree(dn) == -1);
  }
  SUBCASE("interval: duplicial passes, cyclic fails") {
    FiniteCategory c = interval_category();
    auto w = find_coreflective_groupoid(c);
    DuplicialNerve dn = duplicial_on_nerve(c, coreflector_from_witness(c, *w), 3);
    CHECK(dn.report.ok());
    CHECK(cyclic_failure_degree(dn) >= 0);
  }
  SUBCASE("degree-2 formula on the interval: t(f, 1_0) = (1_0, t(f))") {
    FiniteCategory c = interval_category();
    auto w = find_coreflective_groupoid(c);
    Coreflector coref = coreflector_from_witness(c, *w);
    DuplicialNerve dn = duplicial_on_nerve(c, coref, 3);
    int id0 = c.identity[0];
    int f_idx = -1;
    for (int m = 0; m < c.mor_count(); ++m)
      if (c.morphisms[m].src == 0 && c.morphisms[m].tgt == 1) f_idx = m;
    int s = dn.nerve.index_of(2, {f_idx, id0});
    int img = dn.t[2][s];
    CHECK(dn.nerve.simplices[2][img] == std::vector<int>{id0, id0});
  }
}

TEST_CASE("cyclic iff groupoid on the catalog") {
  struct Case {
    FiniteCategory c;
    bool groupoid, duplicial;
  };
  std::vector<Case> cases = {
      {trivial_category(), true, true},
      {group_category(2), true, true},
      {group_category(3), true, true},
      {indiscrete_category(2), true, true},
      {discrete_category(2), true, true},
      {interval_category(), false, true},
      {chain_category(2), false, true},
      {idempotent_monoid_category(), false, false},
      {parallel_arrows_category(), false, false},
  };
  for (auto& tc : cases) {
    CyclicDecision d = cyclic_iff_groupoid(tc.c, 3);
    CHECK(d.groupoid == tc.groupoid);
    CHECK(d.duplicial == tc.duplicial);
    if (d.groupoid) CHECK(d.cyclic_failure == -1);
    if (!d.groupoid && d.duplicial) CHECK(d.cyclic_failure >= 0);
  }
}

TEST_CASE("Z/3 nerve is cyclic through degree 4") {
  CyclicDecision d = cyclic_iff_groupoid(group_category(3), 4);
  CHECK(d.groupoid);
  CHECK(d.cyclic_failure == -1);
}

TEST_CASE("witness search agrees with direct coreflector enumeration") {
  for (const FiniteCategory& c :
       {trivial_category(), group_category(2), group_category(3), interval_category(),
        chain_category(2), indiscrete_category(2), discrete_category(2),
        idempotent_monoid_category(), parallel_arrows_category()}) {
    if (c.mor_count() > 8) continue;
    auto enumerated = enumerate_coreflectors(c);
    auto witness = find_coreflective_groupoid(c);
    CHECK(enumerated.empty() == !witness.has_value());
    // every enumerated coreflector yields a valid duplicial nerve
    for (const Coreflector& t : enumerated) {
      DuplicialNerve dn = duplicial_on_nerve(c, t, 3);
      CHECK(dn.report.ok());
    }
  }
}

TEST_CASE("a corrupted coreflector is rejected") {
  FiniteCategory c = group_category(2);
  GroupoidWitness w{{0}, {0}, {c.identity[0]}};
  Coreflector t = coreflector_from_witness(c, w);
  t.morphism_map[c.identity[0]] = 1;  // break t^2(1) = 1
  CHECK(!t.validate(c).ok());
  CHECK_THROWS(duplicial_on_nerve(c, t, 2));
}
