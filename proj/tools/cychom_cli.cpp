// Command-line surface over the cychom library: exact cyclic, twisted and
// Hopf-cyclic homology of small algebras and bialgebras, finite-Set
// distributive-law checks, entwined-algebra searches, and the duplicial /
// cyclic decision for nerves of finite categories.
//
// Exit codes: 0 success, 1 validation failure, 2 parse error.

#include <CLI11.hpp>
#include <iostream>

#include "cychom/hochschild.hpp"
#include "cychom/io.hpp"
#include "cychom/setlaws.hpp"

using namespace cychom;

namespace {

constexpr long long kDimCap = 50000;  // largest C_n dimension the CLI accepts

struct Options {
  std::string format = "table";
  int top = 4;
};

io::json betti_json(const std::vector<Betti>& b) {
  io::json out = io::json::array();
  for (const Betti& h : b) out.push_back(io::json{{"dim", h.dim}, {"truncated", h.truncated}});
  return out;
}

std::string betti_table(const std::vector<Betti>& b) {
  std::string out;
  for (std::size_t n = 0; n < b.size(); ++n) {
    out += "  degree " + std::to_string(n) + ": " + std::to_string(b[n].dim);
    if (b[n].truncated) out += " (truncated)";
    out += "\n";
  }
  return out;
}

void guard_dimensions(const Algebra& a, int dm, int top) {
  long long dim = dm;
  for (int n = 0; n < top; ++n) {
    dim *= a.dim;
    if (dim > kDimCap)
      throw io::InvariantError("C_" + std::to_string(n + 1) + " would have dimension " +
                               std::to_string(dim) + " > " + std::to_string(kDimCap) +
                               "; lower --top or the algebra size");
  }
}

int run_cyclic(const std::string& algebra_path, const Options& opt) {
  Algebra a = io::parse_algebra(io::load_file(algebra_path));
  ValidationReport rep = a.validate();
  if (!rep.ok()) throw io::InvariantError("algebra invariants:\n" + rep.str());
  guard_dimensions(a, a.dim, opt.top);
  auto x = hochschild_cyclic_module(a, Bimodule::regular(a), opt.top);
  auto hc = hc_of_duplicial(x, HcRoute::via_P_F);
  if (opt.format == "json") {
    std::cout << io::json{{"HC", betti_json(hc)}}.dump(2) << "\n";
  } else {
    std::cout << "cyclic homology HC_n(A):\n" << betti_table(hc);
  }
  return 0;
}

int run_hochschild(const std::string& algebra_path, const std::string& bimodule_path,
                   const Options& opt) {
  Algebra a = io::parse_algebra(io::load_file(algebra_path));
  ValidationReport rep = a.validate();
  if (!rep.ok()) throw io::InvariantError("algebra invariants:\n" + rep.str());
  Bimodule m = bimodule_path.empty() ? Bimodule::regular(a)
                                     : io::parse_bimodule(io::load_file(bimodule_path), a);
  ValidationReport mrep = m.validate(a);
  if (!mrep.ok()) throw io::InvariantError("bimodule invariants:\n" + mrep.str());
  guard_dimensions(a, m.dim, opt.top);
  auto hh = hochschild_homology(a, m, opt.top);
  auto zh = h0_and_center(a, m);
  if (opt.format == "json") {
    std::cout << io::json{{"HH", betti_json(hh)},
                          {"H0_dim", zh.h0_dim()},
                          {"H0_cohomology_dim", zh.center_dim()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "Hochschild homology HH_n(A, M):\n" << betti_table(hh);
    std::cout << "H_0(A, M) = M/[A,M] has dimension " << zh.h0_dim() << "\n";
    std::cout << "H^0(A, M) = Z(M) has dimension " << zh.center_dim() << "\n";
  }
  return 0;
}

int run_twisted(const std::string& algebra_path, const std::string& sigma_path,
                const Options& opt) {
  Algebra a = io::parse_algebra(io::load_file(algebra_path));
  ValidationReport rep = a.validate();
  if (!rep.ok()) throw io::InvariantError("algebra invariants:\n" + rep.str());
  AlgebraMap sigma = io::parse_algebra_map(io::load_file(sigma_path), a);
  ValidationReport srep = sigma.validate(a);
  if (!srep.ok()) throw io::InvariantError("algebra map invariants:\n" + srep.str());
  guard_dimensions(a, a.dim, opt.top);
  auto x = twisted_module(a, sigma, opt.top);
  auto hc = hc_of_duplicial(x, HcRoute::via_P_F);
  ValidationReport cyc = check_structure(x, StructureLevel::cyclic);
  int failing = -1;
  for (const Violation& v : cyc.violations)
    if (v.identity == "t^{n+1} = 1" && (failing < 0 || v.degree < failing)) failing = v.degree;
  if (opt.format == "json") {
    std::cout << io::json{{"HC_sigma", betti_json(hc)},
                          {"cyclic", cyc.ok()},
                          {"cyclic_failure_degree", failing}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "twisted cyclic homology HC_n(A)_sigma:\n" << betti_table(hc);
    if (cyc.ok())
      std::cout << "cyclic: yes (sigma is the identity)\n";
    else
      std::cout << "cyclic: no, t^{n+1} = 1 first fails at degree " << failing << "\n";
  }
  return 0;
}

int run_hopf(const std::string& bialgebra_path, const Options& opt) {
  Bialgebra h = io::parse_bialgebra(io::load_file(bialgebra_path));
  ValidationReport rep = h.validate();
  if (!rep.ok()) throw io::InvariantError("bialgebra invariants:\n" + rep.str());
  auto hopf = is_hopf_and_antipode(h);
  if (!hopf) {
    if (opt.format == "json") {
      std::cout << io::json{{"hopf", false}, {"reason", "Galois map singular"}}.dump(2) << "\n";
    } else {
      std::cout << "Hopf: no (Galois map singular)\n";
    }
    return 0;
  }
  ModuleComodule triv = trivial_coefficients(h);
  bool sayd = sayd_check(*hopf, triv, triv);
  int top = std::min(opt.top, 3);
  HopfCyclic hc = hopf_cyclic_module(*hopf, triv, triv, top);
  auto betti = hc_of_duplicial(hc.module, HcRoute::via_P_F);
  if (opt.format == "json") {
    io::json antipode = io::json::array();
    for (int i = 0; i < h.dim(); ++i) {
      for (int k = 0; k < h.dim(); ++k)
        if (hopf->antipode.at(k, i).is_one()) antipode.push_back(h.algebra.basis[k]);
    }
    std::cout << io::json{{"hopf", true},
                          {"antipode", io::matrix_json(hopf->antipode)},
                          {"sayd_trivial_coefficients", sayd},
                          {"LR_identity", hc.first_lr_failure == -1},
                          {"HC", betti_json(betti)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "Hopf: yes\n";
    std::cout << "antipode on the basis:\n";
    for (int i = 0; i < h.dim(); ++i) {
      std::cout << "  S(" << h.algebra.basis[i] << ") = ";
      bool first = true;
      for (int k = 0; k < h.dim(); ++k) {
        const Scalar& v = hopf->antipode.at(k, i);
        if (v.is_zero()) continue;
        if (!first) std::cout << " + ";
        if (!v.is_one()) std::cout << v.str() << "*";
        std::cout << h.algebra.basis[k];
        first = false;
      }
      if (first) std::cout << "0";
      std::cout << "\n";
    }
    std::cout << "SAYD (trivial coefficients): " << (sayd ? "yes" : "no") << "\n";
    std::cout << "L.R = 1 degreewise: " << (hc.first_lr_failure == -1 ? "yes" : "no") << "\n";
    std::cout << "Hopf-cyclic homology (trivial coefficients):\n" << betti_table(betti);
  }
  return 0;
}

int run_check_law(const std::string& structure, const std::string& kind, const std::string& mixed,
                  bool all_mixed, sets::Config cfg, const Options& opt) {
  auto print = [&](const std::string& name, const ValidationReport& rep) {
    if (opt.format == "json") {
      io::json out{{"law", name}, {"ok", rep.ok()}, {"checked", rep.checked}, {"skipped", rep.skipped}};
      if (!rep.ok()) out["violations"] = rep.str();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << name << ": " << (rep.ok() ? "pass" : "FAIL") << " (" << rep.checked
                << " instances checked";
      if (rep.skipped) std::cout << ", " << rep.skipped << " skipped out of bounds";
      std::cout << ")\n";
      if (!rep.ok()) std::cout << rep.str() << "\n";
    }
    return rep.ok() ? 0 : 1;
  };
  if (all_mixed) {
    int rc = 0;
    for (sets::MixedLaw law : sets::all_mixed_laws())
      rc |= print(sets::mixed_law_name(law), sets::check_mixed_law(law, cfg));
    rc |= print("L+ bimonad", sets::lplus_bimonad_check(cfg.x_size, cfg.list_bound));
    return rc;
  }
  if (!mixed.empty()) {
    if (mixed == "lplus") return print("L+ bimonad", sets::lplus_bimonad_check(cfg.x_size, cfg.list_bound));
    for (sets::MixedLaw law : sets::all_mixed_laws())
      if (mixed == sets::mixed_law_name(law)) return print(mixed, sets::check_mixed_law(law, cfg));
    throw io::ParseError("unknown mixed law: " + mixed);
  }
  static const std::map<std::string, sets::Structure> structures = {
      {"powerset", sets::Structure::powerset},
      {"list", sets::Structure::bounded_list},
      {"nonempty-list", sets::Structure::nonempty_list},
      {"filter", sets::Structure::filter},
      {"ultrafilter", sets::Structure::ultrafilter},
      {"distribution", sets::Structure::distribution},
      {"product", sets::Structure::product},
      {"reader", sets::Structure::reader},
  };
  auto it = structures.find(structure);
  if (it == structures.end()) throw io::ParseError("unknown structure: " + structure);
  sets::Kind k = kind == "comonad" ? sets::Kind::comonad : sets::Kind::monad;
  try {
    return print(structure + " " + kind, sets::check_laws(it->second, k, cfg));
  } catch (const std::invalid_argument& e) {
    throw io::InvariantError(e.what());
  }
}

int run_entwined_search(const std::string& law, int max_carrier, int list_bound,
                        const Options& opt) {
  if (law != "lplus") throw io::ParseError("entwined-search supports --law lplus");
  std::vector<sets::LplusEntwined> found;
  try {
    found = sets::lplus_entwined_enumerate(max_carrier, list_bound);
  } catch (const std::invalid_argument& e) {
    throw io::InvariantError(e.what());
  }
  if (opt.format == "json") {
    io::json out = io::json::array();
    for (const auto& e : found) {
      io::json table = io::json::array();
      for (const auto& row : e.semigroup.table) table.push_back(row);
      out.push_back(io::json{{"carrier", e.semigroup.n}, {"table", table}, {"parents", e.forest.parent}});
    }
    std::cout << io::json{{"entwined", out}}.dump(2) << "\n";
  } else {
    std::cout << "theta-entwined algebras for the L+ bimonad, carriers <= " << max_carrier << ":\n";
    for (const auto& e : found) {
      if (e.semigroup.n == 0) {
        std::cout << "  the empty semigroup\n";
      } else {
        std::cout << "  carrier of size " << e.semigroup.n << "\n";
      }
    }
    std::cout << "total: " << found.size() << "\n";
  }
  return 0;
}

int run_nerve(const std::string& category_path, const Options& opt) {
  FiniteCategory c = io::parse_category(io::load_file(category_path));
  ValidationReport rep = c.validate();
  if (!rep.ok()) throw io::InvariantError("category laws:\n" + rep.str());
  CyclicDecision d = cyclic_iff_groupoid(c, opt.top);
  std::string witness;
  if (d.witness) {
    witness = "{";
    for (std::size_t i = 0; i < d.witness->subcategory_objects.size(); ++i)
      witness += (i ? "," : "") + c.objects[d.witness->subcategory_objects[i]];
    witness += "}";
  }
  if (opt.format == "json") {
    io::json out{{"groupoid", d.groupoid},
                 {"duplicial", d.duplicial},
                 {"cyclic", d.duplicial && d.cyclic_failure == -1}};
    if (d.witness) out["witness"] = witness;
    if (d.cyclic_failure >= 0) out["cyclic_failure_degree"] = d.cyclic_failure;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "duplicial: " << (d.duplicial ? "yes" : "no");
    std::cout << ", cyclic: " << (d.duplicial && d.cyclic_failure == -1 ? "yes" : "no");
    if (d.witness) std::cout << ", witness: " << witness;
    if (d.cyclic_failure >= 0) std::cout << " (t^{n+1} = 1 first fails at degree " << d.cyclic_failure << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_validate(const std::string& path, const std::string& schema, const Options& opt) {
  ValidationReport rep = io::validate_input(path, io::schema_from_string(schema));
  if (opt.format == "json") {
    std::cout << io::json{{"ok", true}, {"checked", rep.checked}}.dump(2) << "\n";
  } else {
    std::cout << "valid " << schema << " (" << rep.checked << " identities checked)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact duplicial/cyclic homology from comonad distributive laws"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--top", opt.top, "top degree of the truncation")->check(CLI::NonNegativeNumber);

  std::string algebra_path, bimodule_path, sigma_path, bialgebra_path, category_path;
  std::string structure = "powerset", kind = "monad", mixed;
  bool all_mixed = false;
  int max_carrier = 2;
  sets::Config cfg;
  std::string validate_path, schema;

  CLI::App* cyclic = app.add_subcommand("cyclic", "HC of C_.(A,A)");
  cyclic->add_option("--algebra", algebra_path, "algebra JSON")->required();

  CLI::App* hochschild = app.add_subcommand("hochschild", "HH of C_.(A,M) with H_0/H^0");
  hochschild->add_option("--algebra", algebra_path, "algebra JSON")->required();
  hochschild->add_option("--bimodule", bimodule_path, "bimodule JSON (default: M = A)");

  CLI::App* twisted = app.add_subcommand("twisted", "HC_sigma with the cyclicity verdict");
  twisted->add_option("--algebra", algebra_path, "algebra JSON")->required();
  twisted->add_option("--sigma", sigma_path, "algebra map JSON")->required();

  CLI::App* hopf = app.add_subcommand("hopf", "Galois/Hopf detection and Hopf-cyclic homology");
  hopf->add_option("--bialgebra", bialgebra_path, "bialgebra JSON")->required();

  CLI::App* check = app.add_subcommand("check-law", "finite-Set monad/comonad and mixed-law checks");
  check->add_option("--structure", structure,
                    "powerset|list|nonempty-list|filter|ultrafilter|distribution|product|reader");
  check->add_option("--kind", kind, "monad or comonad")->check(CLI::IsMember({"monad", "comonad"}));
  check->add_option("--mixed", mixed, "one of the seven mixed laws, or lplus");
  check->add_flag("--all-mixed", all_mixed, "check all seven mixed laws plus the L+ bimonad");
  check->add_option("--x-size", cfg.x_size, "carrier size |X|");
  std::string monoid_path;
  check->add_option("--monoid", monoid_path, "custom finite monoid JSON for the reader comonad");
  check->add_option("--c-size", cfg.c_size, "colour carrier size |C|");
  check->add_option("--list-bound", cfg.list_bound, "global list length bound");
  check->add_option("--dist-den", cfg.dist_den, "denominator of the distribution grid");

  CLI::App* entwined = app.add_subcommand("entwined-search", "exhaustive entwined-algebra search");
  std::string law = "lplus";
  entwined->add_option("--law", law, "distributive law (lplus)");
  entwined->add_option("--max-carrier", max_carrier, "largest carrier size");
  entwined->add_option("--list-bound", cfg.list_bound, "global list length bound");

  CLI::App* nerve_cmd = app.add_subcommand("nerve", "duplicial/cyclic decision for a finite category");
  nerve_cmd->add_option("--category", category_path, "category JSON")->required();

  CLI::App* validate_cmd = app.add_subcommand("validate", "schema and invariant check");
  validate_cmd->add_option("path", validate_path, "input file")->required();
  validate_cmd->add_option("--schema", schema, "algebra|bimodule|map|bialgebra|category|complex|simplicial")
      ->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cyclic->parsed()) return run_cyclic(algebra_path, opt);
    if (hochschild->parsed()) return run_hochschild(algebra_path, bimodule_path, opt);
    if (twisted->parsed()) return run_twisted(algebra_path, sigma_path, opt);
    if (hopf->parsed()) return run_hopf(bialgebra_path, opt);
    if (check->parsed()) {
      if (!monoid_path.empty()) cfg.monoid = io::parse_monoid(io::load_file(monoid_path));
      return run_check_law(structure, kind, mixed, all_mixed, cfg, opt);
    }
    if (entwined->parsed()) return run_entwined_search(law, max_carrier, cfg.list_bound, opt);
    if (nerve_cmd->parsed()) return run_nerve(category_path, opt);
    if (validate_cmd->parsed()) return run_validate(validate_path, schema, opt);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const io::InvariantError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
