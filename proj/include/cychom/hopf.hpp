#ifndef CYCHOM_HOPF_HPP
#define CYCHOM_HOPF_HPP

#include "cychom/algebra.hpp"
#include "cychom/engine.hpp"

namespace cychom {

// Finite-dimensional bialgebra: an algebra together with a comultiplication
// H -> H (x) H and counit H -> k, both algebra maps.
struct Bialgebra {
  Algebra algebra;
  Matrix comult;  // (dim*dim) x dim, left-factor-major
  Matrix counit;  // 1 x dim

  int dim() const { return algebra.dim; }
  const Field& field() const { return algebra.field; }
  ValidationReport validate() const;
};

// Bialgebra in which every basis element is grouplike (monoid bialgebras;
// covers the shipped catalog).
Bialgebra grouplike_bialgebra(const Algebra& a);

// The Galois map beta : H (x) H -> H (x) H, g (x) y -> g_(1) (x) g_(2) y.
// Invertible iff H is a Hopf algebra.
Matrix galois_map(const Bialgebra& h);

struct HopfStructure {
  Bialgebra bialgebra;
  Matrix antipode;     // S : H -> H with S(h) = eps(h_+) h_-
  Matrix translation;  // h -> h_+ (x) h_- = beta^{-1}(h (x) 1), (dim*dim) x dim
};

// Inverts the Galois map, extracts the translation legs and the antipode,
// and verifies the antipode axioms. Empty when beta is singular (not Hopf).
std::optional<HopfStructure> is_hopf_and_antipode(const Bialgebra& h);

// Yetter-Drinfel'd braiding g (x) h -> g_(1) h (x) g_(2); for Hopf H the
// inverse (built from S^{-1}) is verified.
Matrix yd_braiding(const Bialgebra& h);

// A module-with-comodule over H. `action` holds one matrix per basis
// element of H; for coefficient modules M it is a right action, for
// Yetter-Drinfel'd coefficients N a left action. `coaction` is a left
// coaction X -> H (x) X.
struct ModuleComodule {
  int dim = 0;
  std::vector<Matrix> action;
  Matrix coaction;

  enum class Side { right, left };
  ValidationReport validate(const Bialgebra& h, Side side) const;
};

using SaydModule = ModuleComodule;

// trivial coefficients: k with h . 1 = eps(h) and coaction 1 -> 1_H (x) 1
ModuleComodule trivial_coefficients(const Bialgebra& h);

// Yetter-Drinfel'd condition for a left module / left comodule N.
bool yd_check(const HopfStructure& h, const ModuleComodule& n, ValidationReport* why = nullptr);

// Stability identity on M (x) N:
//   m_(0) (n_(-1) m_(-1))_+  (x)  (n_(-1) m_(-1))_- n_(0)  =  m (x) n.
bool sayd_check(const HopfStructure& h, const ModuleComodule& m, const ModuleComodule& n);

// Engine presentation of the Hopf-cyclic distributive law on right
// H-modules: T = - (x) H, S = H (x) -, chi (c (x) x) (x) b = b_- c (x) (x (x) b_+),
// N = - (x)_H N0.
EngineInstance hopf_engine_instance(const HopfStructure& h, const ModuleComodule& m,
                                    const ModuleComodule& n);

// Closed-form cyclic operator on M (x) H^{(x)n} (x) N in degree n.
Matrix hopf_closed_form_t(const HopfStructure& h, const ModuleComodule& m,
                          const ModuleComodule& n, int degree);

struct HopfCyclic {
  TruncatedDuplicialModule module;  // transported to M (x) H^{(x)n} (x) N
  std::vector<Matrix> LR;           // (L . R)_n in the same basis
  int first_lr_failure;             // lowest degree with LR != 1, or -1
};

// Engine-built Hopf-cyclic duplicial module; the engine t is asserted equal
// to the closed-form operator degreewise, and R, L are built with their
// cyclicity certificates.
HopfCyclic hopf_cyclic_module(const HopfStructure& h, const ModuleComodule& m,
                              const ModuleComodule& n, int top);

}  // namespace cychom

#endif
