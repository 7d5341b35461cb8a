#ifndef CYCHOM_SETLAWS_HPP
#define CYCHOM_SETLAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cychom/report.hpp"

namespace cychom::sets {

// ---- carriers ----------------------------------------------------------
//
// Finite sets are {0, ..., n-1}. Subsets and filters are bitmasks; a filter
// on a finite set is principal, so it is stored as its (nonempty) base set,
// and an ultrafilter as a point. The colour set C = {0 < 1 < ... < c-1} is
// totally ordered with sup = max and bottom c_0 = 0. Bounded lists carry a
// global length bound; law instances whose intermediates would exceed the
// bound are skipped and recorded as coverage.

using List = std::vector<int>;
using NestedList = std::vector<List>;
using Nested3 = std::vector<NestedList>;

struct FiniteMonoid {
  int n = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = ab
  int identity = 0;

  ValidationReport validate() const;
  int mul(int a, int b) const { return table[a][b]; }
};

FiniteMonoid cyclic_monoid(int n);

// Exact rational distribution over {0..size-1} with a common denominator.
struct GridDist {
  long long den = 1;
  std::vector<long long> num;

  void normalize();
  bool operator==(const GridDist& o) const;
  bool operator<(const GridDist& o) const;
};

// all distributions with denominator exactly q over a carrier of this size
std::vector<GridDist> dist_grid(int size, int q);

struct Config {
  int x_size = 2;
  int c_size = 2;
  FiniteMonoid monoid = cyclic_monoid(2);
  int list_bound = 3;
  int dist_den = 2;
};

// ---- structure law checks ----------------------------------------------

enum class Structure {
  powerset,
  bounded_list,
  nonempty_list,
  filter,
  ultrafilter,
  distribution,
  product,          // C x -
  reader,           // X^M
  nonempty_list_comonad
};

enum class Kind { monad, comonad };

const char* structure_name(Structure s);

// Exhaustive unit/associativity (monads) or counit/coassociativity
// (comonads) within the configured bounds.
ValidationReport check_laws(Structure s, Kind k, const Config& cfg);

// ---- the seven mixed distributive laws ----------------------------------

enum class MixedLaw {
  sup_powerset,     // P(C x -) => C x P-
  sup_list,         // L(C x -) => C x L-
  dist_product,     // D(C x -) => C x D-
  list_reader,      // L(X^M) => (LX)^M
  powerset_reader,  // P(X^M) => (PX)^M
  filter_reader,    // F(X^M) => (FX)^M, with the ultrafilter variant
  dist_reader       // D(X^M) => (DX)^M
};

const char* mixed_law_name(MixedLaw law);
std::vector<MixedLaw> all_mixed_laws();

// Exhaustive verification of the four mixed-law axioms (unit,
// multiplication, counit, comultiplication compatibility) on the configured
// carriers; distributions run over the exact rational grid.
ValidationReport check_mixed_law(MixedLaw law, const Config& cfg);

// The explicit map families, exposed for direct evaluation. Pairs (c, x)
// in C x X are encoded as c * x_size + x.
// theta(A) = (sup of the colours in A, underlying set), (0, {}) for A = {}
std::pair<int, std::uint32_t> sup_powerset_theta(std::uint32_t pairs, int c_size, int x_size);
// theta[(c_1,x_1),...] = (sup c_i, [x_1,...]), (0, []) on the empty list
std::pair<int, List> sup_list_theta(const List& pairs, int c_size, int x_size);
// theta[f_1,...,f_n](m) = [f_1(m),...,f_n(m)] for readers f_i : M -> X
std::vector<List> list_reader_theta(const std::vector<List>& fs, int m_size);

// ---- L+ bimonad ---------------------------------------------------------

// theta : L+L+ => L+L+ on nested lists; block i contributes the lists
// [x_{i,j}, x_{i+1,1}, ..., x_{m,1}].
NestedList lplus_theta(const NestedList& w);
// declared term count sum_i n_i (m - i + 1)
long long lplus_term_count_formula(const NestedList& w);

struct Semigroup {
  int n = 0;
  std::vector<std::vector<int>> table;

  bool associative() const;
  int mul(int a, int b) const { return table[a][b]; }
};

// W-product on nonempty lists over a semigroup:
// [x_1..x_m][y_1..y_n] = [x_1 y_1, ..., x_m y_1, y_1, ..., y_n]
List lplus_w_product(const Semigroup& s, const List& a, const List& b);
// left machine expansion rho[x_1..x_n] = [x_1...x_n, x_2...x_n, ..., x_n]
List lplus_rho(const Semigroup& s, const List& w);

// Mixed-law axioms for the L+ bimonad, exhaustively over nested lists with
// the configured bounds; asserts the term-count formula on every theta
// evaluation. Coverage (skips for out-of-bound intermediates) is recorded.
ValidationReport lplus_bimonad_check(int x_size, int list_bound);

// parent-pointer forest = L+-coalgebra; path(x) = [x, parent x, ..., root]
struct Forest {
  int n = 0;
  std::vector<int> parent;  // -1 for roots

  bool valid() const;  // acyclic
  List path(int x) const;
};

// pentagon nabla(beta(w)) = (L+ beta)(theta(L+ nabla(w))) on all nonempty
// lists within the bound
bool lplus_entwined_check(const Semigroup& s, const Forest& f, int list_bound,
                          ValidationReport* why = nullptr);

struct LplusEntwined {
  Semigroup semigroup;
  Forest forest;
};

// Exhaustive search over all (associative table, forest) pairs on carriers
// of size 0..max_carrier; the carrier bound is refused above 3.
std::vector<LplusEntwined> lplus_entwined_enumerate(int max_carrier, int list_bound);

// ---- entwined algebras for the C x - laws -------------------------------

// P-algebra structures beta : PX -> X (sup-lattices), as sup-of-bitmask maps
struct SupLattice {
  int n = 0;
  std::vector<int> sup;  // indexed by subset bitmask

  bool valid() const;  // beta eta = id and beta mu = beta P(beta)
};

std::vector<SupLattice> enumerate_sup_lattices(int n);

// pentagon for the sup_powerset law with colouring kappa : X -> C
bool sup_powerset_entwined(const SupLattice& lat, const std::vector<int>& kappa, int c_size);
// direct characterisation: kappa(sup A) = sup kappa(A) for every subset
bool sup_preserving_colouring(const SupLattice& lat, const std::vector<int>& kappa, int c_size);

// monoids as L-algebras with the pentagon for the sup_list law
bool sup_list_entwined(const FiniteMonoid& m, const std::vector<int>& kappa, int c_size,
                       int list_bound);
// direct characterisation: kappa(x_1...x_k) = sup kappa(x_i), kappa(e) = 0
bool sup_monoid_colouring(const FiniteMonoid& m, const std::vector<int>& kappa, int c_size,
                          int list_bound);

// ---- Kleisli composition -------------------------------------------------

// powerset Kleisli: f : X -> PY, g : Y -> PZ as bitmask tables
std::vector<std::uint32_t> kleisli_compose_powerset(const std::vector<std::uint32_t>& f,
                                                    const std::vector<std::uint32_t>& g);
// distribution Kleisli
std::vector<GridDist> kleisli_compose_dist(const std::vector<GridDist>& f,
                                           const std::vector<GridDist>& g, int z_size);

}  // namespace cychom::sets

#endif
