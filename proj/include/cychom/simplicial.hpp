#ifndef CYCHOM_SIMPLICIAL_HPP
#define CYCHOM_SIMPLICIAL_HPP

#include <optional>

#include "cychom/complex.hpp"

namespace cychom {

// Truncated simplicial module in finite-dimensional vector spaces: degrees
// 0..N with faces d_i : X_n -> X_{n-1} (0 <= i <= n) and degeneracies
// s_j : X_n -> X_{n+1} (absent at the top degree), optionally augmented by
// a map X_0 -> X_{-1}.
struct TruncatedSimplicialModule {
  Field field;
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> faces;   // faces[n][i], valid for 1 <= n <= top
  std::vector<std::vector<Matrix>> degens;  // degens[n][j], valid for 0 <= n <= top-1
  std::optional<Matrix> augmentation;       // X_0 -> X_{-1}

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int n) const { return n >= 0 && n <= top() ? dims[n] : 0; }
  const Matrix& d(int n, int i) const { return faces[n][i]; }
  const Matrix& s(int n, int j) const { return degens[n][j]; }
  bool augmented() const { return augmentation.has_value(); }

  // Alternating face sum b_n = sum_i (-1)^i d_i.
  Matrix moore_b(int n) const;
  // The Moore complex (X, b) as a chain-only duchain complex.
  DuchainComplex moore_complex() const;
};

// A simplicial module with a degreewise operator t; t empty means no
// duplicial operator is attached (plain simplicial data).
struct TruncatedDuplicialModule : TruncatedSimplicialModule {
  std::vector<Matrix> t;  // t[n] : X_n -> X_n, degrees 0..top

  bool has_t() const { return !t.empty(); }
};

enum class StructureLevel { simplicial, duplicial, cyclic };

// Verifies every simplicial / duplicial / cyclic identity that is defined
// within the truncation, reporting each failure with (degree, identity).
ValidationReport check_structure(const TruncatedDuplicialModule& x, StructureLevel level);
ValidationReport check_structure(const TruncatedSimplicialModule& x);

struct DoldKan {
  DuchainComplex normalized;       // NX with the induced differential
  DuchainComplex moore;            // (X, b), unnormalized
  std::vector<Quotient> quotients; // X_n ->> NX_n
};

// Dold-Kan normalization NX_n = X_n / sum im s_i with induced differential.
DoldKan dold_kan_normalize(const TruncatedSimplicialModule& x);

struct DuplicialDuchain {
  DuchainComplex duchain;          // (NX, b, B), not necessarily mixed
  std::vector<Quotient> quotients;
};

// The functor P: the normalized complex of a duplicial module together with
// the induced degree +1 operator B = (1 - t~) s_{-1} N.  B^2 = 0 is
// verified, bB + Bb = 0 is not required.  Both the (1 - t~) s_{-1} N route
// and the plain s_{-1} N route are computed on the full module and their
// induced maps are asserted equal.
DuplicialDuchain duplicial_to_duchain(const TruncatedDuplicialModule& x);

// The Dwyer-Kan codifferential (-1)^n t s_n induced on NX (object map of
// the Dwyer-Kan correspondence; the inverse equivalence is not built).
// Verified to square to zero.
std::vector<Matrix> dwyer_kan_codifferential(const TruncatedDuplicialModule& x);

struct PiShriek {
  TruncatedDuplicialModule cyclic;
  std::vector<Quotient> quotients;
};

// pi_! X: the degreewise quotient by im(1 - t^{n+1}) with induced structure;
// the result is verified cyclic.
PiShriek pi_shriek(const TruncatedDuplicialModule& x);

enum class HcRoute { via_pi_shriek_K, via_P_F };

// Cyclic homology of a duplicial module along either route; entries above
// the truncation-safe degree top-2 carry the truncated flag.
std::vector<Betti> hc_of_duplicial(const TruncatedDuplicialModule& x, HcRoute route);

enum class DecSide { left, right };

struct Decalage {
  TruncatedSimplicialModule shifted;  // top degree N-1, augmented
  std::vector<Matrix> counit;  // degree n: Dec(X)_n -> X_n, the discarded face
  std::vector<Matrix> comult;  // degree n: Dec(X)_n -> DecDec(X)_n, the discarded degeneracy
};

// Right/left decalage of an augmented simplicial module (top degree drops
// by one); exposes the comonad structure maps.
Decalage decalage(const TruncatedSimplicialModule& x, DecSide side);

// Whether t defines a morphism Dec^r X -> Dec^l X of augmented simplicial
// modules compatible with the decalage counits and comultiplications; by
// the decalage-coalgebra theorem this holds iff x is duplicial.
bool duplicial_equals_decalage_coalgebra(const TruncatedDuplicialModule& x,
                                         ValidationReport* why = nullptr);

// Reverse the order of faces and degeneracies in every degree; involutive.
TruncatedSimplicialModule opsimplicial(const TruncatedSimplicialModule& x);

// Constant (cyclic) module: every degree is k^d, all structure maps are the
// identity. Convenience for tests and the ground-field instances.
TruncatedDuplicialModule constant_module(const Field& f, int d, int top, bool with_t = true);

}  // namespace cychom

#endif
