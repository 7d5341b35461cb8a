#ifndef CYCHOM_HOCHSCHILD_HPP
#define CYCHOM_HOCHSCHILD_HPP

#include "cychom/algebra.hpp"
#include "cychom/engine.hpp"

namespace cychom {

// The standard Hochschild module C_n(A, M) = M (x) A^{(x)n} with the
// three-case faces, unit-inserting degeneracies, and the rotation operator t
// attached when M is the regular bimodule. Augmented by M ->> M/[A,M].
TruncatedDuplicialModule hochschild_cyclic_module(const Algebra& a, const Bimodule& m, int top);

// Betti numbers of the associated chain complex (HH_*(A, M)); the top entry
// is flagged truncated.
std::vector<Betti> hochschild_homology(const Algebra& a, const Bimodule& m, int top);

// C_.(A, A)_sigma: faces of C_.(A, A_sigma) together with the sigma-twisted
// rotation. Cyclic iff sigma is the identity.
TruncatedDuplicialModule twisted_module(const Algebra& a, const AlgebraMap& sigma, int top);

// Engine presentation of the bimodule distributive law: T = - (x) A,
// S = A (x) -, chi the rebracketing identity, N = - (x)_{A^e} A.
// When cofree_nabla is set, M must be A (x) X0 with the cofree S-coalgebra
// structure (used by the contractibility instances); rho defaults to
// nabla . counit in that case.
EngineInstance bimodule_engine_instance(const Algebra& a, const Bimodule& m,
                                        std::optional<Matrix> rho = std::nullopt,
                                        bool cofree_nabla = false);

Matrix standard_rho(const Algebra& a);                          // identity on A (x) A
Matrix twisted_rho(const Algebra& a, const AlgebraMap& sigma);  // a (x) b -> a (x) sigma(b)

// The engine-built bar resolution instance C_{B~}(- (x)_{A^e} A, M),
// transported along (m (x) a_1...a_{n+1}) |-> a_{n+1} m (x) a_1...a_n.
// Asserts matrix-by-matrix agreement with hochschild_cyclic_module.
TruncatedDuplicialModule bar_instance(const Algebra& a, const Bimodule& m, int top);

// Act with the 1-cell (- (x)_A A_sigma, sigma, 1) on the standard coalgebra
// and rebuild through the engine; asserts matrix-by-matrix agreement with
// twisted_module, including the Yang-Baxter hexagon for the 1-cell data.
TruncatedDuplicialModule twist_by_one_cell(const Algebra& a, const AlgebraMap& sigma, int top);

struct ZerothHomology {
  Quotient h0;          // M ->> H_0(A, M) = M / <am - ma>
  Matrix center_basis;  // columns span H^0(A, M) = Z(M)

  int h0_dim() const { return h0.dim(); }
  int center_dim() const { return center_basis.cols(); }
};

ZerothHomology h0_and_center(const Algebra& a, const Bimodule& m);

// Degree-0 cap product: the class of z a in H_0(A, M) for central z in M.
// Well-definedness is asserted by re-computing against commutator shifts of
// the representative a.
std::vector<Scalar> cap0(const Algebra& a, const Bimodule& m, const std::vector<Scalar>& central_z,
                         const std::vector<Scalar>& a_rep);

}  // namespace cychom

#endif
