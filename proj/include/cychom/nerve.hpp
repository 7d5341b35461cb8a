#ifndef CYCHOM_NERVE_HPP
#define CYCHOM_NERVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cychom/report.hpp"

namespace cychom {

// Finite category presented by a full composition table.
struct FiniteCategory {
  struct Mor {
    std::string name;
    int src = 0, tgt = 0;
  };

  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;                    // per object
  std::vector<std::vector<int>> compose_table;  // [g][f] = g . f, -1 when not composable

  int mor_count() const { return static_cast<int>(morphisms.size()); }
  int obj_count() const { return static_cast<int>(objects.size()); }
  bool composable(int g, int f) const { return morphisms[f].tgt == morphisms[g].src; }
  int compose(int g, int f) const;  // g . f, throws when not composable
  std::optional<int> inverse_of(int f) const;
  bool is_groupoid() const;

  ValidationReport validate() const;
};

// ---- catalog ----------------------------------------------------------

FiniteCategory trivial_category();
FiniteCategory group_category(int n);        // Z/n as a one-object groupoid
FiniteCategory interval_category();          // poset 0 -> 1
FiniteCategory chain_category(int length);   // poset 0 -> 1 -> ... -> length
FiniteCategory indiscrete_category(int n);   // one morphism between any two objects
FiniteCategory discrete_category(int n);
FiniteCategory idempotent_monoid_category(); // monoid {1, e}, e^2 = e
FiniteCategory parallel_arrows_category();   // two parallel arrows and identities

// ---- nerve ----------------------------------------------------------

// Truncated nerve: degree n holds the composable n-tuples (f_{n-1},...,f_0);
// degree 0 holds the objects. Simplicial identities are verified
// exhaustively on construction.
struct NerveSet {
  const FiniteCategory* category = nullptr;
  int top = 0;
  std::vector<std::vector<std::vector<int>>> simplices;  // [degree][index] = tuple

  int count(int degree) const { return static_cast<int>(simplices[degree].size()); }
  int index_of(int degree, const std::vector<int>& tuple) const;
  // face and degeneracy as index maps
  int face(int degree, int i, int simplex) const;
  int degen(int degree, int j, int simplex) const;
};

NerveSet nerve(const FiniteCategory& c, int top);

// ---- coreflectors ----------------------------------------------------

// Object-and-morphism reversal datum: A |-> tA and (f : A -> B) |-> tf : tB -> A
// with t^2(1_A) = 1_{tA} and tg = f . th for every commutative triangle h = g f.
struct Coreflector {
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  ValidationReport validate(const FiniteCategory& c) const;
};

struct GroupoidWitness {
  std::vector<int> subcategory_objects;  // full subcategory D, all morphisms invertible
  std::vector<int> reflection;           // per object c: R c in D
  std::vector<int> counit;               // per object c: eps_c : Rc -> c
};

// Search over full subcategories (subsets of objects in increasing size,
// lexicographic) for a groupoid D such that every object has a universal
// arrow from D; first witness wins.
std::optional<GroupoidWitness> find_coreflective_groupoid(const FiniteCategory& c);

// tA = RA, tf = eps_A . (Rf)^{-1}; the output passes the coreflector
// invariants.
Coreflector coreflector_from_witness(const FiniteCategory& c, const GroupoidWitness& w);

// Independent oracle: every coreflector by direct exhaustive enumeration of
// object maps and morphism assignments (feasible for |Mor| <= 8).
std::vector<Coreflector> enumerate_coreflectors(const FiniteCategory& c);

// ---- duplicial structure on the nerve ------------------------------------

// t in degree n sends (f_{n-1},...,f_0) to (f_{n-2},...,f_0, t(f_{n-1}...f_0)),
// the unique extension of the coreflector forced by d_0 t = d_n and
// d_i t = t d_{i-1}. All duplicial identities are verified exhaustively.
struct DuplicialNerve {
  NerveSet nerve;
  std::vector<std::vector<int>> t;  // [degree][simplex] = image simplex
  ValidationReport report;
};

DuplicialNerve duplicial_on_nerve(const FiniteCategory& c, const Coreflector& coref, int top);

// lowest degree <= top with t^{n+1} != id, or -1
int cyclic_failure_degree(const DuplicialNerve& dn);

struct CyclicDecision {
  bool groupoid = false;
  bool duplicial = false;
  std::optional<GroupoidWitness> witness;
  int cyclic_failure = -1;  // -1 when cyclic up to the truncation
};

// The nerve of C admits a cyclic structure iff C is a groupoid; when C is a
// groupoid the identity witness is verified cyclic up to `top`, and when a
// duplicial structure exists without cyclicity the failing degree is
// reported.
CyclicDecision cyclic_iff_groupoid(const FiniteCategory& c, int top);

}  // namespace cychom

#endif
