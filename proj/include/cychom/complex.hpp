#ifndef CYCHOM_COMPLEX_HPP
#define CYCHOM_COMPLEX_HPP

#include "cychom/matrix.hpp"
#include "cychom/report.hpp"

namespace cychom {

struct GradedSpace {
  Field field;
  std::vector<int> dims;  // degrees 0..top

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int n) const { return n >= 0 && n <= top() ? dims[n] : 0; }
};

// A duchain complex (X, b, B): (X, b) is a chain complex and (X, B) is a
// cochain complex. A mixed complex additionally satisfies bB + Bb = 0.
// Everything is truncated at a top degree N; b[n] : X_n -> X_{n-1} is stored
// for 1 <= n <= N and B[n] : X_n -> X_{n+1} for 0 <= n <= N-1.
struct DuchainComplex {
  GradedSpace grading;
  std::vector<Matrix> b;  // index n, valid for 1..top; b[0] unused
  std::vector<Matrix> B;  // index n, valid for 0..top-1

  int top() const { return grading.top(); }
  const Field& field() const { return grading.field; }
  bool has_B() const { return !B.empty(); }

  static DuchainComplex chain_only(GradedSpace g, std::vector<Matrix> b);
};

using MixedComplex = DuchainComplex;

enum class ComplexKind { chain_only, duchain, mixed };

// Reports every violated identity with its degree; empty report <=> valid.
// Shape mismatches between matrices and the grading throw.
ValidationReport validate(const DuchainComplex& c, ComplexKind kind);

// dim ker(b_n) - rank(b_{n+1}); at the top degree the incoming boundary is
// above the truncation, so the kernel dimension is reported and flagged.
Betti homology(const DuchainComplex& c, int n);

// Connes' total complex T with T_n = X_n + X_{n-2} + ... (decreasing inner
// degree) and differential b + B; (b+B)^2 = 0 is verified on output.
DuchainComplex total_complex(const MixedComplex& m);

// Cyclic homology of a mixed complex: homology of the total complex.
Betti hc(const MixedComplex& m, int n);

struct Mixedify {
  std::vector<Matrix> T;          // T_n = 1 - bB - Bb per degree (truncation-aware)
  MixedComplex mixed;             // quotient by im(1 - T) with induced b, B
  std::vector<Quotient> quotients;
};

// The degreewise operator T = 1 - bB - Bb and the universal mixed-complex
// quotient of a duchain complex; checks bT = Tb, BT = TB and that the
// quotient validates as mixed.
Mixedify t_operator_and_mixedify(const DuchainComplex& d);

}  // namespace cychom

#endif
