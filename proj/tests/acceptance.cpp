// Acceptance suite: every criterion is exercised at its stated tolerance
// (exact arithmetic, zero tolerance) and prints one pass/fail line.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "cychom/hochschild.hpp"
#include "cychom/hopf.hpp"
#include "cychom/io.hpp"
#include "cychom/nerve.hpp"
#include "cychom/setlaws.hpp"

using namespace cychom;
using Clock = std::chrono::steady_clock;

namespace {

const Field Q = Field::Q();

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Matrix power(const Matrix& m, int e) {
  Matrix acc = Matrix::identity(m.rows(), m.field());
  for (int i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

bool criterion_1(std::string& detail) {
  auto start = Clock::now();
  long long identities = 0;
  auto require_ok = [&](const ValidationReport& rep) {
    identities += rep.checked;
    if (!rep.ok()) throw std::runtime_error(rep.str());
  };
  // Hochschild cyclic modules at top degree 4, algebra dimension up to 4
  for (const Algebra& a : {ground_field(Q), dual_numbers(Q), cyclic_group_algebra(Q, 3),
                           upper_triangular2(Q), matrix_algebra2(Q)}) {
    auto x = hochschild_cyclic_module(a, Bimodule::regular(a), 4);
    require_ok(check_structure(x, StructureLevel::cyclic));
    require_ok(check_structure(decalage(x, DecSide::right).shifted));
    require_ok(check_structure(decalage(x, DecSide::left).shifted));
    ValidationReport dec;
    if (!duplicial_equals_decalage_coalgebra(x, &dec)) throw std::runtime_error(dec.str());
    identities += dec.checked;
  }
  // twisted modules
  {
    Algebra d = dual_numbers(Q);
    require_ok(check_structure(twisted_module(d, dual_numbers_scaling(d, -1), 4),
                               StructureLevel::duplicial));
    Algebra c3 = cyclic_group_algebra(Q, 3);
    require_ok(check_structure(twisted_module(c3, cyclic_group_power(c3, 2), 4),
                               StructureLevel::duplicial));
  }
  // Hopf-cyclic modules (including the modular case)
  for (Bialgebra h : {grouplike_bialgebra(cyclic_group_algebra(Q, 2)),
                      grouplike_bialgebra(cyclic_group_algebra(Q, 3)),
                      grouplike_bialgebra(cyclic_group_algebra(Field::Fp(2), 2))}) {
    auto hs = is_hopf_and_antipode(h);
    if (!hs) return false;
    ModuleComodule triv = trivial_coefficients(h);
    HopfCyclic hc = hopf_cyclic_module(*hs, triv, triv, 4);
    require_ok(check_structure(hc.module, StructureLevel::duplicial));
  }
  // nerves of the catalog categories
  for (const FiniteCategory& c : {group_category(2), group_category(3), indiscrete_category(2),
                                  interval_category(), chain_category(2)}) {
    auto w = find_coreflective_groupoid(c);
    if (!w) return false;
    DuplicialNerve dn = duplicial_on_nerve(c, coreflector_from_witness(c, *w), 4);
    if (!dn.report.ok()) throw std::runtime_error(dn.report.str());
    identities += dn.report.checked;
  }
  double t = seconds_since(start);
  detail = std::to_string(identities) + " identities, " + std::to_string(t) + " s";
  return t < 10.0;
}

bool criterion_2(std::string& detail) {
  // (LR)_n = t_T^{n+1} and (RL)_n = t_S^{n+1} for n <= 3, re-verified here
  // against the engine operators (rho_n itself is double-checked against
  // both recursive factorizations inside the engine).
  long long checks = 0;
  auto verify = [&](Engine& eng) {
    auto rl = eng.build_R_L(3);
    auto ct = eng.build_CT(3);
    auto cs = eng.build_CS_star(3);
    for (int n = 0; n <= 3; ++n) {
      if (rl.L[n] * rl.R[n] != power(ct.t[n], n + 1)) return false;
      if (rl.R[n] * rl.L[n] != power(cs.t[n], n + 1)) return false;
      checks += 2;
    }
    return true;
  };
  Algebra a = dual_numbers(Q);
  Engine hoch(bimodule_engine_instance(a, Bimodule::regular(a), standard_rho(a)));
  if (!verify(hoch)) return false;
  for (Bialgebra h : {grouplike_bialgebra(cyclic_group_algebra(Q, 2)),
                      grouplike_bialgebra(cyclic_group_algebra(Q, 3))}) {
    auto hs = is_hopf_and_antipode(h);
    ModuleComodule triv = trivial_coefficients(h);
    Engine eng(hopf_engine_instance(*hs, triv, triv));
    if (!verify(eng)) return false;
  }
  detail = std::to_string(checks * 3) + " exact matrix identities";
  return true;
}

bool criterion_3(std::string& detail) {
  Algebra d = dual_numbers(Q);
  // sigma = id passes t^{n+1} = 1
  if (!check_structure(twisted_module(d, AlgebraMap::identity(d), 3), StructureLevel::cyclic).ok())
    return false;
  // each catalog non-identity sigma fails, with the degree reported
  auto failing_degree = [](const TruncatedDuplicialModule& x) {
    auto rep = check_structure(x, StructureLevel::cyclic);
    int deg = -1;
    for (const Violation& v : rep.violations)
      if (v.identity == "t^{n+1} = 1" && (deg < 0 || v.degree < deg)) deg = v.degree;
    return deg;
  };
  int f1 = failing_degree(twisted_module(d, dual_numbers_scaling(d, -1), 3));
  Algebra c3 = cyclic_group_algebra(Q, 3);
  int f2 = failing_degree(twisted_module(c3, cyclic_group_power(c3, 2), 3));
  detail = "failing degrees " + std::to_string(f1) + " and " + std::to_string(f2);
  return f1 >= 0 && f2 >= 0;
}

bool criterion_4(std::string& detail) {
  // twist_by_one_cell throws on any matrix mismatch with twisted_module
  Algebra d = dual_numbers(Q);
  twist_by_one_cell(d, AlgebraMap::identity(d), 3);
  twist_by_one_cell(d, dual_numbers_scaling(d, -1), 3);
  Algebra c3 = cyclic_group_algebra(Q, 3);
  twist_by_one_cell(c3, cyclic_group_power(c3, 2), 3);
  detail = "matrix-by-matrix equality for all catalog twists";
  return true;
}

bool criterion_5(std::string& detail) {
  for (const Algebra& a : {ground_field(Q), dual_numbers(Q), upper_triangular2(Q)}) {
    Bimodule m = Bimodule::regular(a);
    auto bar = bar_instance(a, m, 4);  // asserts matrix equality internally
    auto direct = hochschild_cyclic_module(a, m, 4);
    DuchainComplex bar_moore = bar.moore_complex();
    DuchainComplex dir_moore = direct.moore_complex();
    for (int n = 0; n <= 3; ++n)
      if (homology(bar_moore, n).dim != homology(dir_moore, n).dim) return false;
  }
  detail = "equal Betti numbers in degrees 0..3 for all three algebras";
  return true;
}

bool criterion_6(std::string& detail) {
  auto start = Clock::now();
  Algebra k = ground_field(Q);
  auto x = hochschild_cyclic_module(k, Bimodule::regular(k), 5);
  auto a = hc_of_duplicial(x, HcRoute::via_pi_shriek_K);
  auto b = hc_of_duplicial(x, HcRoute::via_P_F);
  std::vector<int> expect = {1, 0, 1, 0};
  for (int n = 0; n <= 3; ++n) {
    if (a[n].dim != expect[n] || b[n].dim != expect[n]) return false;
    if (a[n].truncated || b[n].truncated) return false;
  }
  double t = seconds_since(start);
  detail = "HC = (1,0,1,0) on both routes, " + std::to_string(t) + " s";
  return t < 1.0;
}

bool criterion_7(std::string& detail) {
  auto c2 = is_hopf_and_antipode(grouplike_bialgebra(cyclic_group_algebra(Q, 2)));
  auto c3 = is_hopf_and_antipode(grouplike_bialgebra(cyclic_group_algebra(Q, 3)));
  auto idem = is_hopf_and_antipode(grouplike_bialgebra(idempotent_monoid_algebra(Q)));
  if (!c2 || !c3 || idem) return false;
  // S(g) = g^{-1} as permutation matrices
  Matrix s2 = Matrix::identity(2, Q);
  if (c2->antipode != s2) return false;
  Matrix s3(3, 3, Q);
  s3.at(0, 0) = Scalar::of(Q, 1);
  s3.at(2, 1) = Scalar::of(Q, 1);
  s3.at(1, 2) = Scalar::of(Q, 1);
  if (c3->antipode != s3) return false;
  detail = "C2, C3 Hopf with inverse-permutation antipodes; idempotent monoid rejected";
  return true;
}

bool criterion_8(std::string& detail) {
  for (int n : {2, 3}) {
    auto hs = is_hopf_and_antipode(grouplike_bialgebra(cyclic_group_algebra(Q, n)));
    ModuleComodule triv = trivial_coefficients(hs->bialgebra);
    if (!sayd_check(*hs, triv, triv)) return false;
    HopfCyclic hc = hopf_cyclic_module(*hs, triv, triv, 3);
    if (hc.first_lr_failure != -1) return false;
  }
  // mutated non-SAYD coaction on Q[C2]
  auto hs = is_hopf_and_antipode(grouplike_bialgebra(cyclic_group_algebra(Q, 2)));
  ModuleComodule bad;
  bad.dim = 1;
  Matrix plus(1, 1, Q), minus(1, 1, Q);
  plus.at(0, 0) = Scalar::of(Q, 1);
  minus.at(0, 0) = Scalar::of(Q, -1);
  bad.action = {plus, minus};
  bad.coaction = Matrix(2, 1, Q);
  bad.coaction.at(1, 0) = Scalar::of(Q, 1);
  if (sayd_check(*hs, bad, trivial_coefficients(hs->bialgebra))) return false;
  HopfCyclic hc = hopf_cyclic_module(*hs, bad, trivial_coefficients(hs->bialgebra), 2);
  if (hc.first_lr_failure < 0 || hc.first_lr_failure > 2) return false;
  detail = "LR = 1 through degree 3 for SAYD coefficients; mutation detected at degree " +
           std::to_string(hc.first_lr_failure);
  return true;
}

bool criterion_9(std::string& detail) {
  auto start = Clock::now();
  auto rep = sets::lplus_bimonad_check(2, 4);
  if (!rep.ok()) return false;
  auto found = sets::lplus_entwined_enumerate(2, 4);
  if (found.size() != 1 || found[0].semigroup.n != 0) return false;
  double t = seconds_since(start);
  detail = std::to_string(rep.checked) + " instances (" + std::to_string(rep.skipped) +
           " skipped out of bounds), entwined search = {empty semigroup}, " + std::to_string(t) + " s";
  return t < 60.0;
}

bool criterion_10(std::string& detail) {
  auto start = Clock::now();
  sets::Config cfg;  // |C| = |X| = |M| = 2, list bound 3, exact grid
  long long checked = 0;
  for (sets::MixedLaw law : sets::all_mixed_laws()) {
    auto rep = sets::check_mixed_law(law, cfg);
    if (!rep.ok()) {
      detail = std::string("law failed: ") + sets::mixed_law_name(law);
      return false;
    }
    checked += rep.checked;
  }
  double t = seconds_since(start);
  detail = "7 law families, " + std::to_string(checked) + " instances, " + std::to_string(t) + " s";
  return t < 120.0;
}

bool criterion_11(std::string& detail) {
  auto start = Clock::now();
  // groupoids are cyclic
  for (const FiniteCategory& c : {group_category(2), group_category(3), indiscrete_category(2)}) {
    CyclicDecision d = cyclic_iff_groupoid(c, 4);
    if (!d.groupoid || !d.duplicial || d.cyclic_failure != -1) return false;
  }
  // interval: duplicial not cyclic with witness {0}
  {
    CyclicDecision d = cyclic_iff_groupoid(interval_category(), 4);
    if (d.groupoid || !d.duplicial || d.cyclic_failure < 0) return false;
    if (!d.witness || d.witness->subcategory_objects != std::vector<int>{0}) return false;
  }
  // idempotent monoid: no duplicial structure at all
  {
    CyclicDecision d = cyclic_iff_groupoid(idempotent_monoid_category(), 4);
    if (d.groupoid || d.duplicial) return false;
  }
  // independent oracle agreement on the full catalog
  for (const FiniteCategory& c :
       {trivial_category(), group_category(2), group_category(3), interval_category(),
        chain_category(2), indiscrete_category(2), discrete_category(2),
        idempotent_monoid_category(), parallel_arrows_category()}) {
    if (c.mor_count() > 8) continue;
    auto enumerated = enumerate_coreflectors(c);
    auto witness = find_coreflective_groupoid(c);
    if (enumerated.empty() != !witness.has_value()) return false;
  }
  double t = seconds_since(start);
  detail = "catalog of 9 categories, oracle agreement, " + std::to_string(t) + " s";
  return t < 30.0;
}

bool criterion_12(std::string& detail) {
  // trivial instance
  {
    Engine eng(trivial_instance(Q, 2));
    eng.contracting_homotopy(4);  // asserts hb + bh = 1 exactly
  }
  // Hochschild with the free rank-one bimodule
  Algebra a = dual_numbers(Q);
  Bimodule free = Bimodule::free_rank_one(a);
  Engine eng(bimodule_engine_instance(a, free, std::nullopt, true));
  eng.contracting_homotopy(4);
  auto hh = hochschild_homology(a, free, 4);
  for (int n = 1; n <= 3; ++n)
    if (hh[n].dim != 0) return false;
  // the opbar side is contractible in positive degrees as well
  auto cs = eng.build_CS_star(4, false);
  DuchainComplex moore = cs.moore_complex();
  for (int n = 1; n <= 3; ++n)
    if (homology(moore, n).dim != 0) return false;
  detail = "hb + bh = 1 exactly; H_1..H_3 = 0 on both bar complexes";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "duplicial identity suite over the whole catalog", criterion_1},
      {2, "LR/RL cyclicity certificates equal t^{n+1}", criterion_2},
      {3, "cyclicity dichotomy for twisted modules", criterion_3},
      {4, "one-cell twisting equals the direct twist", criterion_4},
      {5, "bar resolution agrees with the direct complex", criterion_5},
      {6, "HC(k) = (1,0,1,0) through both routes", criterion_6},
      {7, "Galois/Hopf detection with antipodes", criterion_7},
      {8, "SAYD coefficients give LR = 1; mutations detected", criterion_8},
      {9, "L+ bimonad laws and entwined search", criterion_9},
      {10, "seven mixed distributive laws, exhaustive", criterion_10},
      {11, "nerve decision procedure with independent oracle", criterion_11},
      {12, "contracting homotopy and vanishing homology", criterion_12},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all 12 acceptance criteria passed" << std::endl;
  return 0;
}
